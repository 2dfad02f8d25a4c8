#include "doctest.h"
#include "intz/serialize.hpp"

using namespace intz;

TEST_CASE("polynomial encoding") {
  IntPoly f = parse_poly("x^2 - 123456789012345678901234567890");
  Json j = to_json(f);
  CHECK(j == Json::array({"-123456789012345678901234567890", "0", "1"}));
  CHECK(poly_from_json(j) == f);
  CHECK(poly_from_json(Json("x^2 - 1")) == parse_poly("x^2 - 1"));
  CHECK_THROWS_AS(poly_from_json(Json::array({"1.5"})), DomainError);
  CHECK_THROWS_AS(poly_from_json(Json(3.5)), SchemaError);
}

TEST_CASE("fixed divisor encoding") {
  auto d = fixed_divisor(parse_poly("x^2 - x"));
  Json j = to_json(d);
  CHECK(j == Json::parse(R"({"value":"2","factors":{"2":1}})"));
  CHECK(fixed_divisor_from_json(j) == d);
}

TEST_CASE("element round trip and trust downgrade") {
  std::vector<IntPoly> fs{parse_poly("x"), parse_poly("x - 1")};
  auto e = make_element(1, BigInt(1), BigInt(2), fs);
  Json j = to_json(e);
  CHECK(j["b"] == "2");
  CHECK(j["certified"] == Json::array({true, true}));
  auto back = element_from_json(j);
  CHECK(back.factors == e.factors);
  CHECK(back.b == 2);

  Json claim = Json::parse(R"({"unit":1,"a":"1","b":"1","factors":[["1","0","1"]],"certified":[true]})");
  CHECK(element_from_json(claim).trust[0].kind == TrustKind::Asserted);
  Json wrong = Json::parse(R"({"unit":1,"a":"1","b":"4","factors":[["0","1"],["-1","1"]]})");
  CHECK_THROWS_AS(element_from_json(wrong), MembershipError);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"unit":1})")), SchemaError);
}

TEST_CASE("certificate round trip") {
  for (const Certificate& c : {Certificate(construct_example7(1)), Certificate(construct_example8(1, 2)),
                               construct_lengths(std::vector<std::uint64_t>{2, 3}),
                               construct_lengths(std::vector<std::uint64_t>{4}),
                               Certificate(construct_theorem10(1))}) {
    Json j = to_json(c);
    CHECK(j["schema_version"] == kSchemaVersion);
    Certificate back = certificate_from_json(j);
    CHECK(dump(to_json(back)) == dump(j));
    CHECK(verify_certificate(back).passed());
  }
  Json bad = to_json(Certificate(construct_example7(1)));
  bad["kind"] = "example9";
  CHECK_THROWS_AS(certificate_from_json(bad), SchemaError);
  bad["schema_version"] = 7;
  CHECK_THROWS_AS(certificate_from_json(bad), SchemaError);
}

TEST_CASE("residue system and lift encodings") {
  auto r = safe_residue_system(5);
  Json j = to_json(r);
  CHECK(j == Json::parse(R"({"p":5,"elements":["1","7","13","19","25"]})"));
  CHECK(residue_system_from_json(j).elements == r.elements);
  std::vector<IntPoly> fam{parse_poly("x^2 - x"), parse_poly("x - 3")};
  auto lc = lift_family(fam);
  auto back = lift_certificate_from_json(to_json(lc));
  CHECK(back.lifted == lc.lifted);
  CHECK(back.modulus == lc.modulus);
  CHECK(verify_lift(back).passed());
}
