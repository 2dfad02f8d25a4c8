#include "doctest.h"
#include "intz/construct.hpp"
#include "intz/verify.hpp"

using namespace intz;

namespace {

template <class C>
std::vector<std::size_t> sorted(std::vector<C> v) {
  std::sort(v.begin(), v.end());
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("lengths {2, 3}: matrix parameters") {
  std::vector<std::uint64_t> lengths{2, 3};
  auto cert = construct_lengths(lengths);
  REQUIRE(std::holds_alternative<Theorem9Certificate>(cert));
  const auto& c = std::get<Theorem9Certificate>(cert);
  CHECK(c.N == 4);
  CHECK(c.product.p == 5);
  CHECK(c.s == 1);
  CHECK(c.product.element.degree() == 9);
  auto r = verify_certificate(cert);
  CHECK(r.passed());
  CHECK(r.enumerated_lengths == std::vector<std::size_t>{2, 3});
}

TEST_CASE("length requests") {
  std::vector<std::uint64_t> one{1};
  CHECK_THROWS_AS(construct_lengths(one), DomainError);
  std::vector<std::uint64_t> none;
  CHECK_THROWS_AS(construct_lengths(none), DomainError);
  std::vector<std::uint64_t> single{3};
  auto cert = construct_lengths(single);
  CHECK(std::holds_alternative<UniqueLengthCertificate>(cert));
  CHECK(verify_certificate(cert).enumerated_lengths == std::vector<std::size_t>{3});
  std::vector<std::uint64_t> unsorted{3, 2};
  auto c2 = construct_lengths(unsorted);
  CHECK(verify_certificate(c2).enumerated_lengths == std::vector<std::size_t>{2, 3});
}

TEST_CASE("two-length constructions") {
  CHECK(construct_example7(3).product.p == 5);
  auto e7 = construct_example7(2);
  auto r7 = verify_certificate(e7);
  CHECK(r7.passed());
  CHECK(r7.enumerated_lengths == std::vector<std::size_t>{2, 4});
  auto e8 = construct_example8(2, 3);
  auto r8 = verify_certificate(e8);
  CHECK(r8.passed());
  CHECK(r8.enumerated_lengths == std::vector<std::size_t>{3, 4});
  CHECK_THROWS_AS(construct_example8(3, 2), DomainError);
  CHECK_THROWS_AS(construct_example8(0, 2), DomainError);
}

TEST_CASE("elasticity") {
  auto c = construct_elasticity(7, 3);
  CHECK(c.m == 2);
  CHECK(c.n == 6);
  auto r = verify_certificate(c);
  CHECK(r.passed());
  CHECK(r.enumerated_lengths == std::vector<std::size_t>{3, 7});
  auto half = construct_elasticity(3, 2);
  CHECK(verify_certificate(half).enumerated_lengths == std::vector<std::size_t>{2, 3});
  CHECK_THROWS_AS(construct_elasticity(1, 1), DomainError);
  CHECK_THROWS_AS(construct_elasticity(2, 3), DomainError);
}

TEST_CASE("irreducible H: even and odd congruences") {
  auto even = construct_theorem10(1);
  CHECK(verify_certificate(even).passed());
  auto literal = construct_theorem10(2, Theorem10Congruences::Literal);
  auto r = verify_certificate(literal);
  CHECK_FALSE(r.passed());
  bool g1_flagged = false;
  for (const auto& item : r.items)
    if (item.name == "theorem10.G1_irreducible") g1_flagged = !item.passed;
  CHECK(g1_flagged);
}

TEST_CASE("tampering is detected") {
  std::vector<std::uint64_t> lengths{2, 3};
  auto cert = std::get<Theorem9Certificate>(construct_lengths(lengths));

  auto bad_b = cert;
  bad_b.product.element.b = 1;
  CHECK_FALSE(verify_certificate(bad_b).passed());

  auto bad_lengths = cert;
  bad_lengths.expected_lengths = {2, 4};
  CHECK_FALSE(verify_certificate(bad_lengths).passed());

  auto bad_residue = cert;
  bad_residue.product.residues.elements[0] += 1;
  CHECK_FALSE(verify_certificate(bad_residue).passed());

  auto bad_lift = cert;
  bad_lift.product.lift.lifted[0] += IntPoly::constant(BigInt(5));
  CHECK_FALSE(verify_certificate(bad_lift).passed());

  auto bad_N = cert;
  bad_N.N = 5;
  CHECK_FALSE(verify_certificate(bad_N).passed());
}

TEST_CASE("constructions are deterministic") {
  std::vector<std::uint64_t> lengths{3, 4, 6};
  auto a = std::get<Theorem9Certificate>(construct_lengths(lengths));
  auto b = std::get<Theorem9Certificate>(construct_lengths(lengths));
  CHECK(a.product.element.factors == b.product.element.factors);
  CHECK(a.product.residues.elements == b.product.residues.elements);
}
