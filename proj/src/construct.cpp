#include "intz/construct.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace intz {
namespace {

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

LiftedProduct assemble(std::uint64_t p, ResidueSystem residues, std::vector<BigInt> linear_roots,
                       std::vector<std::vector<BigInt>> composite_roots) {
  LiftedProduct out;
  out.p = p;
  out.residues = std::move(residues);
  out.linear_roots = std::move(linear_roots);
  out.composite_roots = std::move(composite_roots);

  std::vector<IntPoly> family;
  for (const auto& roots : out.composite_roots) family.push_back(from_roots(roots));
  for (const auto& r : out.linear_roots) family.push_back(IntPoly::x_minus(r));
  out.lift = lift_family(family);

  std::vector<IntPoly> factors;
  std::vector<FactorTrust> trust;
  for (const auto& r : out.linear_roots) {
    factors.push_back(IntPoly::x_minus(r));
    trust.push_back(FactorTrust::linear());
  }
  for (std::size_t i = 0; i < out.composite_roots.size(); ++i) {
    factors.push_back(out.lift.lifted[i]);
    trust.push_back(FactorTrust::eisenstein(out.lift.q));
  }
  out.element = make_element(1, BigInt(1), big(p), std::move(factors), std::move(trust));
  return out;
}

UniqueLengthCertificate construct_unique_length(std::uint64_t length) {
  UniqueLengthCertificate c;
  c.length = length;
  c.modulus = 1;
  for (auto q : primes_up_to(length)) c.modulus *= big(q);
  std::vector<IntPoly> factors;
  for (std::uint64_t j = 0; j < length; ++j) {
    c.roots.push_back(1 + big(j) * c.modulus);
    factors.push_back(IntPoly::x_minus(c.roots.back()));
  }
  c.element = make_element(1, BigInt(1), BigInt(1), std::move(factors));
  c.expected_lengths = {length};
  return c;
}

Theorem9Certificate construct_theorem9(std::vector<std::uint64_t> m) {
  Theorem9Certificate c;
  std::sort(m.begin(), m.end());
  c.m = m;
  const std::uint64_t n = m.size();
  std::uint64_t sum = 0, sum_sq = 0;
  for (auto v : m) {
    sum += v;
    sum_sq += v * v;
  }
  c.N = sum * sum - sum_sq;
  const std::uint64_t p = next_prime(c.N);
  c.s = p - c.N;

  ResidueSystem rs = safe_residue_system(p);
  std::vector<BigInt> sorted = rs.elements;
  std::sort(sorted.begin(), sorted.end());
  std::vector<BigInt> t(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(c.s));
  std::size_t next = c.s;
  for (std::uint64_t k = 1; k <= n; ++k)
    for (std::uint64_t h = 1; h <= m[k - 1]; ++h)
      for (std::uint64_t i = 1; i <= n; ++i) {
        if (i == k) continue;
        for (std::uint64_t j = 1; j <= m[i - 1]; ++j) c.matrix.push_back({k, h, i, j, sorted[next++]});
      }

  // f^(k)_h: roots in row (k, h) followed by roots in column (k, h).
  std::vector<std::vector<BigInt>> composites;
  for (std::uint64_t k = 1; k <= n; ++k)
    for (std::uint64_t h = 1; h <= m[k - 1]; ++h) {
      std::vector<BigInt> roots;
      for (const auto& e : c.matrix)
        if (e.k == k && e.h == h) roots.push_back(e.residue);
      for (const auto& e : c.matrix)
        if (e.i == k && e.j == h) roots.push_back(e.residue);
      composites.push_back(std::move(roots));
    }
  c.product = assemble(p, std::move(rs), std::move(t), std::move(composites));
  for (auto v : m) c.expected_lengths.push_back(v + 1);
  return c;
}

}  // namespace

Certificate construct_lengths(std::span<const std::uint64_t> lengths) {
  if (lengths.empty()) throw DomainError("construct_lengths: empty length multiset");
  for (auto l : lengths)
    if (l < 2) throw DomainError("construct_lengths: every length must be at least 2");
  if (lengths.size() == 1) return construct_unique_length(lengths[0]);
  std::vector<std::uint64_t> m;
  for (auto l : lengths) m.push_back(l - 1);
  return construct_theorem9(std::move(m));
}

Example7Certificate construct_example7(std::uint64_t n) {
  Example7Certificate c;
  c.n = n;
  const std::uint64_t p = next_prime(n + 1);
  ResidueSystem rs = safe_residue_system(p);
  const auto& a = rs.elements;  // a_k = a[k - 1]
  std::vector<BigInt> linear(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n + 1));
  std::vector<BigInt> f_roots(a.begin() + 1, a.end());
  std::vector<BigInt> g_roots(a.begin() + static_cast<std::ptrdiff_t>(n + 1), a.end());
  c.product = assemble(p, std::move(rs), std::move(linear), {std::move(f_roots), std::move(g_roots)});
  c.expected_lengths = {2, static_cast<std::size_t>(n + 2)};
  std::sort(c.expected_lengths.begin(), c.expected_lengths.end());
  return c;
}

Example8Certificate construct_example8(std::uint64_t m, std::uint64_t n) {
  if (m < 1 || n < m) throw DomainError("construct_example8: need 1 <= m <= n");
  Example8Certificate c;
  c.m = m;
  c.n = n;
  const std::uint64_t p = next_prime(m * n);
  const std::uint64_t s = p - m * n;
  ResidueSystem rs = safe_residue_system(p);
  std::vector<BigInt> sorted = rs.elements;
  std::sort(sorted.begin(), sorted.end());
  std::vector<BigInt> b(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(s));
  std::size_t next = s;
  c.grid.assign(m, std::vector<BigInt>(n));
  for (std::uint64_t i = 0; i < m; ++i)
    for (std::uint64_t j = 0; j < n; ++j) c.grid[i][j] = sorted[next++];

  std::vector<std::vector<BigInt>> composites;
  for (std::uint64_t i = 0; i < m; ++i) composites.push_back(c.grid[i]);
  for (std::uint64_t j = 0; j < n; ++j) {
    std::vector<BigInt> col;
    for (std::uint64_t i = 0; i < m; ++i) col.push_back(c.grid[i][j]);
    composites.push_back(std::move(col));
  }
  c.product = assemble(p, std::move(rs), std::move(b), std::move(composites));
  c.expected_lengths = {static_cast<std::size_t>(m + 1), static_cast<std::size_t>(n + 1)};
  return c;
}

Example8Certificate construct_elasticity(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw DomainError("construct_elasticity: zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  num /= g;
  den /= g;
  if (num <= den) throw DomainError("construct_elasticity: ratio must exceed 1");
  std::uint64_t t = 1;
  while (den * t < 2) ++t;
  auto c = construct_example8(den * t - 1, num * t - 1);
  c.requested_elasticity = Ratio{num, den};
  return c;
}

Theorem10Certificate construct_theorem10(std::uint64_t n, Theorem10Congruences congruences) {
  if (n < 1) throw DomainError("construct_theorem10: n must be at least 1");
  Theorem10Certificate c;
  c.n = n;
  c.congruences = congruences;
  for (std::uint64_t q = 3; c.P.size() < n; q = next_prime(q)) c.P.push_back(q);
  const std::uint64_t pn = c.P.back();
  c.Q = primes_up_to(pn + n);
  const std::set<std::uint64_t> in_p(c.P.begin(), c.P.end());
  const unsigned long two_residue = congruences == Theorem10Congruences::EvenShift ? 0 : 1;

  BigInt modulus = 1;
  for (auto q : c.Q) modulus *= big(q);
  std::set<BigInt> seen;
  auto place = [&](BigInt v) {
    while (seen.count(v)) v += modulus;
    seen.insert(v);
    return v;
  };

  for (std::uint64_t i = 0; i < n; ++i) {
    std::vector<Congruence> sys;
    for (auto q : c.Q) {
      unsigned long r = 1;
      if (q == c.P[i]) r = 0;
      else if (q == 2) r = two_residue;
      sys.push_back({BigInt(r), big(q)});
    }
    c.a_values.push_back(place(crt(sys)));
  }
  for (std::uint64_t k = 1; k <= pn; ++k) {
    std::vector<Congruence> sys;
    for (auto q : c.Q) {
      unsigned long r = 1;
      if (in_p.count(q)) r = k < q ? static_cast<unsigned long>(k) : 1;
      else if (q == 2) r = two_residue;
      sys.push_back({BigInt(r), big(q)});
    }
    c.b_values.push_back(place(crt(sys)));
  }

  c.f = from_roots(c.b_values);
  std::vector<IntPoly> family{c.f};
  for (const auto& a : c.a_values) family.push_back(IntPoly::x_minus(a));
  c.lift = lift_family(family);
  const IntPoly& F = c.lift.lifted[0];
  const auto eis = FactorTrust::eisenstein(c.lift.q);

  BigInt denom = 1;
  for (auto p : c.P) denom *= big(p);
  std::vector<IntPoly> h_factors{F};
  std::vector<FactorTrust> h_trust{eis};
  for (const auto& a : c.a_values) {
    h_factors.push_back(IntPoly::x_minus(a));
    h_trust.push_back(FactorTrust::linear());
  }
  c.H = make_element(1, BigInt(1), denom, std::move(h_factors), std::move(h_trust));

  c.claimed_factors.push_back(
      make_element(1, BigInt(1), denom, {IntPoly::x_minus(BigInt(0)), F}, {FactorTrust::linear(), eis}));
  for (const auto& a : c.a_values) c.claimed_factors.push_back(make_element(1, BigInt(1), BigInt(1), {IntPoly::x_minus(a)}));
  return c;
}

const char* certificate_kind(const Certificate& c) {
  struct {
    const char* operator()(const Example7Certificate&) const { return "example7"; }
    const char* operator()(const Example8Certificate&) const { return "example8"; }
    const char* operator()(const Theorem9Certificate&) const { return "theorem9"; }
    const char* operator()(const UniqueLengthCertificate&) const { return "unique_length"; }
    const char* operator()(const Theorem10Certificate&) const { return "theorem10"; }
  } visitor;
  return std::visit(visitor, c);
}

}  // namespace intz
