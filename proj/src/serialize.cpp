#include "intz/serialize.hpp"

#include <algorithm>

namespace intz {
namespace {

IvpElement element_unchecked(const Json& j);

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw SchemaError(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::uint64_t u64(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw SchemaError(std::string(what) + ": expected a non-negative integer");
  return j.get<std::uint64_t>();
}

std::uint64_t u64_field(const Json& j, const char* key) { return u64(field(j, key), key); }

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw SchemaError(std::string("field \"") + key + "\" must be an array");
  return a;
}

Json bigs(const std::vector<BigInt>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

std::vector<BigInt> bigs_from(const Json& j) {
  if (!j.is_array()) throw SchemaError("expected an array of decimal strings");
  std::vector<BigInt> out;
  for (const auto& x : j) out.push_back(bigint_from_json(x));
  return out;
}

template <class T>
Json numbers(const std::vector<T>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

std::vector<std::uint64_t> u64s_from(const Json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + ": expected an array");
  std::vector<std::uint64_t> out;
  for (const auto& x : j) out.push_back(u64(x, what));
  return out;
}

std::vector<std::size_t> sizes_from(const Json& j, const char* what) {
  auto v = u64s_from(j, what);
  return {v.begin(), v.end()};
}

Json polys(const std::vector<IntPoly>& v) {
  Json out = Json::array();
  for (const auto& f : v) out.push_back(to_json(f));
  return out;
}

std::vector<IntPoly> polys_from(const Json& j) {
  if (!j.is_array()) throw SchemaError("expected an array of polynomials");
  std::vector<IntPoly> out;
  for (const auto& x : j) out.push_back(poly_from_json(x));
  return out;
}

Json items_json(const std::vector<CheckItem>& items) {
  Json out = Json::array();
  for (const auto& c : items)
    out.push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
  return out;
}

Json product_json(const LiftedProduct& lp) {
  Json roots = Json::array();
  for (const auto& r : lp.composite_roots) roots.push_back(bigs(r));
  return {{"p", lp.p},
          {"residues", to_json(lp.residues)},
          {"linear_roots", bigs(lp.linear_roots)},
          {"composite_roots", roots},
          {"lift", to_json(lp.lift)},
          {"element", to_json(lp.element)}};
}

LiftedProduct product_from(const Json& j) {
  LiftedProduct lp;
  lp.p = u64_field(j, "p");
  lp.residues = residue_system_from_json(field(j, "residues"));
  lp.linear_roots = bigs_from(field(j, "linear_roots"));
  for (const auto& r : array_field(j, "composite_roots")) lp.composite_roots.push_back(bigs_from(r));
  lp.lift = lift_certificate_from_json(field(j, "lift"));
  lp.element = element_unchecked(field(j, "element"));
  return lp;
}

Json cert_body(const Example7Certificate& c) {
  return {{"n", c.n}, {"product", product_json(c.product)}, {"expected_lengths", numbers(c.expected_lengths)}};
}

Json cert_body(const Example8Certificate& c) {
  Json grid = Json::array();
  for (const auto& row : c.grid) grid.push_back(bigs(row));
  Json ratio = nullptr;
  if (c.requested_elasticity)
    ratio = {{"num", c.requested_elasticity->num}, {"den", c.requested_elasticity->den}};
  return {{"m", c.m},
          {"n", c.n},
          {"grid", grid},
          {"requested_elasticity", ratio},
          {"product", product_json(c.product)},
          {"expected_lengths", numbers(c.expected_lengths)}};
}

Json cert_body(const Theorem9Certificate& c) {
  Json matrix = Json::array();
  for (const auto& e : c.matrix)
    matrix.push_back({{"k", e.k}, {"h", e.h}, {"i", e.i}, {"j", e.j}, {"residue", to_json(e.residue)}});
  return {{"m", numbers(c.m)},
          {"N", c.N},
          {"s", c.s},
          {"matrix", matrix},
          {"product", product_json(c.product)},
          {"expected_lengths", numbers(c.expected_lengths)}};
}

Json cert_body(const UniqueLengthCertificate& c) {
  return {{"length", c.length},
          {"modulus", to_json(c.modulus)},
          {"roots", bigs(c.roots)},
          {"element", to_json(c.element)},
          {"expected_lengths", numbers(c.expected_lengths)}};
}

Json cert_body(const Theorem10Certificate& c) {
  Json claimed = Json::array();
  for (const auto& g : c.claimed_factors) claimed.push_back(to_json(g));
  return {{"n", c.n},
          {"congruences", c.congruences == Theorem10Congruences::EvenShift ? "even_shift" : "literal"},
          {"P", numbers(c.P)},
          {"Q", numbers(c.Q)},
          {"a_values", bigs(c.a_values)},
          {"b_values", bigs(c.b_values)},
          {"f", to_json(c.f)},
          {"lift", to_json(c.lift)},
          {"H", to_json(c.H)},
          {"claimed_factors", claimed}};
}

Certificate cert_from(const std::string& kind, const Json& j) {
  if (kind == "example7") {
    Example7Certificate c;
    c.n = u64_field(j, "n");
    c.product = product_from(field(j, "product"));
    c.expected_lengths = sizes_from(field(j, "expected_lengths"), "expected_lengths");
    return c;
  }
  if (kind == "example8") {
    Example8Certificate c;
    c.m = u64_field(j, "m");
    c.n = u64_field(j, "n");
    for (const auto& row : array_field(j, "grid")) c.grid.push_back(bigs_from(row));
    const Json& ratio = field(j, "requested_elasticity");
    if (!ratio.is_null()) c.requested_elasticity = Ratio{u64_field(ratio, "num"), u64_field(ratio, "den")};
    c.product = product_from(field(j, "product"));
    c.expected_lengths = sizes_from(field(j, "expected_lengths"), "expected_lengths");
    return c;
  }
  if (kind == "theorem9") {
    Theorem9Certificate c;
    c.m = u64s_from(field(j, "m"), "m");
    c.N = u64_field(j, "N");
    c.s = u64_field(j, "s");
    for (const auto& e : array_field(j, "matrix"))
      c.matrix.push_back({u64_field(e, "k"), u64_field(e, "h"), u64_field(e, "i"), u64_field(e, "j"),
                          bigint_from_json(field(e, "residue"))});
    c.product = product_from(field(j, "product"));
    c.expected_lengths = sizes_from(field(j, "expected_lengths"), "expected_lengths");
    return c;
  }
  if (kind == "unique_length") {
    UniqueLengthCertificate c;
    c.length = u64_field(j, "length");
    c.modulus = bigint_from_json(field(j, "modulus"));
    c.roots = bigs_from(field(j, "roots"));
    c.element = element_unchecked(field(j, "element"));
    c.expected_lengths = sizes_from(field(j, "expected_lengths"), "expected_lengths");
    return c;
  }
  if (kind == "theorem10") {
    Theorem10Certificate c;
    c.n = u64_field(j, "n");
    const Json& cong = field(j, "congruences");
    if (cong == "even_shift") c.congruences = Theorem10Congruences::EvenShift;
    else if (cong == "literal") c.congruences = Theorem10Congruences::Literal;
    else throw SchemaError("unknown congruence variant");
    c.P = u64s_from(field(j, "P"), "P");
    c.Q = u64s_from(field(j, "Q"), "Q");
    c.a_values = bigs_from(field(j, "a_values"));
    c.b_values = bigs_from(field(j, "b_values"));
    c.f = poly_from_json(field(j, "f"));
    c.lift = lift_certificate_from_json(field(j, "lift"));
    c.H = element_unchecked(field(j, "H"));
    for (const auto& g : array_field(j, "claimed_factors")) c.claimed_factors.push_back(element_unchecked(g));
    return c;
  }
  throw SchemaError("unknown certificate kind \"" + kind + "\"");
}

}  // namespace

Json to_json(const BigInt& v) { return to_decimal(v); }

Json to_json(const IntPoly& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs()) out.push_back(to_decimal(c));
  return out;
}

Json to_json(const FixedDivisor& d) {
  Json factors = Json::object();
  for (const auto& [p, e] : d.factors) factors[std::to_string(p)] = e;
  return {{"value", to_decimal(d.value)}, {"factors", factors}};
}

Json to_json(const IvpElement& e) {
  Json certified = Json::array();
  for (const auto& t : e.trust) certified.push_back(t.certified());
  return {{"unit", e.unit}, {"a", to_json(e.a)}, {"b", to_json(e.b)}, {"factors", polys(e.factors)},
          {"certified", certified}};
}

Json to_json(const Factorization& f) {
  Json blocks = Json::array();
  for (const auto& b : f.blocks) blocks.push_back({{"indices", numbers(b.indices)}, {"denominator", to_json(b.denominator)}});
  return {{"unit", f.unit}, {"constants", bigs(f.constant_primes)}, {"blocks", blocks}, {"length", f.length()}};
}

Json to_json(const LengthProfile& p) {
  return {{"lengths", numbers(p.lengths)},
          {"length_set", numbers(p.length_set)},
          {"elasticity", {{"num", p.elasticity.num}, {"den", p.elasticity.den}}}};
}

Json to_json(const ResidueSystem& r) { return {{"p", r.p}, {"elements", bigs(r.elements)}}; }

Json to_json(const LiftCertificate& c) {
  return {{"family", polys(c.family)},
          {"lifted", polys(c.lifted)},
          {"total_degree", c.total_degree},
          {"modulus", to_json(c.modulus)},
          {"q", c.q},
          {"perturbations", polys(c.perturbations)},
          {"uniqueness_offsets", bigs(c.uniqueness_offsets)}};
}

Json to_json(const LiftReport& r) {
  return {{"passed", r.passed()},
          {"selections_checked", r.selections_checked},
          {"exhaustive_subsets", r.exhaustive_subsets},
          {"exhaustive_mixed", r.exhaustive_mixed},
          {"items", items_json(r.items)}};
}

Json to_json(const Certificate& c) {
  Json body = std::visit([](const auto& x) { return cert_body(x); }, c);
  return {{"schema_version", kSchemaVersion}, {"kind", certificate_kind(c)}, {"certificate", body}};
}

Json to_json(const VerificationReport& r) {
  return {{"kind", r.kind},
          {"passed", r.passed()},
          {"expected_lengths", numbers(r.expected_lengths)},
          {"enumerated_lengths", numbers(r.enumerated_lengths)},
          {"items", items_json(r.items)}};
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_string()) return parse_decimal(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(j.dump());
  throw SchemaError("expected an integer as a decimal string");
}

IntPoly poly_from_json(const Json& j) {
  if (j.is_string()) return parse_poly(j.get<std::string>());
  if (!j.is_array()) throw SchemaError("polynomial must be an array of decimal strings or text");
  std::vector<BigInt> c;
  for (const auto& x : j) c.push_back(bigint_from_json(x));
  return IntPoly(std::move(c));
}

FixedDivisor fixed_divisor_from_json(const Json& j) {
  FixedDivisor d;
  d.value = bigint_from_json(field(j, "value"));
  const Json& f = field(j, "factors");
  if (!f.is_object()) throw SchemaError("\"factors\" must be an object");
  for (const auto& [k, v] : f.items()) {
    std::uint64_t p = 0;
    try {
      p = std::stoull(k);
    } catch (const std::exception&) {
      throw SchemaError("factor key \"" + k + "\" is not a prime");
    }
    d.factors[p] = static_cast<unsigned>(u64(v, "exponent"));
  }
  return d;
}

IvpElement element_from_json(const Json& j) {
  const Json& unit = field(j, "unit");
  if (!unit.is_number_integer()) throw SchemaError("\"unit\" must be 1 or -1");
  auto factors = polys_from(field(j, "factors"));
  std::vector<FactorTrust> trust;
  auto it = j.find("certified");
  if (it != j.end()) {
    if (!it->is_array() || it->size() != factors.size())
      throw SchemaError("\"certified\" must have one flag per factor");
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (!(*it)[i].is_boolean()) throw SchemaError("\"certified\" flags must be booleans");
      FactorTrust t = FactorTrust::asserted();
      if ((*it)[i].get<bool>()) t = certify_factor(factors[i]);
      trust.push_back(t);
    }
  } else {
    for (const auto& f : factors) trust.push_back(certify_factor(f));
  }
  return make_element(unit.get<int>(), bigint_from_json(field(j, "a")), bigint_from_json(field(j, "b")),
                      std::move(factors), std::move(trust));
}

namespace {

// Certificates are loaded without validation so the verifier can report
// every defect as a failed item instead of a parse error.
IvpElement element_unchecked(const Json& j) {
  IvpElement e;
  const Json& unit = field(j, "unit");
  if (!unit.is_number_integer() || (unit.get<int>() != 1 && unit.get<int>() != -1))
    throw SchemaError("\"unit\" must be 1 or -1");
  e.unit = unit.get<int>();
  e.a = bigint_from_json(field(j, "a"));
  e.b = bigint_from_json(field(j, "b"));
  e.factors = polys_from(field(j, "factors"));
  for (const auto& f : e.factors) e.trust.push_back(certify_factor(f));
  return e;
}

}  // namespace

ResidueSystem residue_system_from_json(const Json& j) {
  return {u64_field(j, "p"), bigs_from(field(j, "elements"))};
}

LiftCertificate lift_certificate_from_json(const Json& j) {
  LiftCertificate c;
  c.family = polys_from(field(j, "family"));
  c.lifted = polys_from(field(j, "lifted"));
  c.total_degree = u64_field(j, "total_degree");
  c.modulus = bigint_from_json(field(j, "modulus"));
  c.q = u64_field(j, "q");
  c.perturbations = polys_from(field(j, "perturbations"));
  c.uniqueness_offsets = bigs_from(field(j, "uniqueness_offsets"));
  return c;
}

Certificate certificate_from_json(const Json& j) {
  const Json& version = field(j, "schema_version");
  if (!version.is_number_integer() || version.get<int>() != kSchemaVersion)
    throw SchemaError("unsupported schema_version");
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) throw SchemaError("\"kind\" must be a string");
  return cert_from(kind.get<std::string>(), field(j, "certificate"));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace intz
