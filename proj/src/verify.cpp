#include "intz/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>

#include "intz/fixed_divisor.hpp"

namespace intz {
namespace {

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

std::string lengths_text(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

void add(VerificationReport& r, std::string name, bool ok, std::string detail = {}) {
  r.items.push_back({std::move(name), ok, std::move(detail)});
}

// Trust comes from the polynomials themselves, never from the certificate's flags.
// Rebuilding through make_element also re-validates membership.
IvpElement recertified(const IvpElement& e) {
  std::vector<FactorTrust> trust;
  for (const auto& g : e.factors) trust.push_back(certify_factor(g));
  return make_element(e.unit, e.a, e.b, e.factors, std::move(trust));
}

void check_factor_irreducibility(VerificationReport& r, const IvpElement& e, const std::string& prefix) {
  std::string bad;
  for (std::size_t i = 0; i < e.factors.size(); ++i)
    if (!certify_factor(e.factors[i]).certified()) bad += (bad.empty() ? "" : ",") + std::to_string(i);
  add(r, prefix + ".factor_irreducibility", bad.empty(),
      bad.empty() ? "every factor linear or Eisenstein" : "no irreducibility certificate for factors " + bad);
}

std::vector<std::size_t> enumerate_lengths(VerificationReport& r, const IvpElement& e, const VerifyOptions& opts,
                                           const std::string& prefix, bool& ok) {
  ok = false;
  try {
    auto fs = enumerate_factorizations(recertified(e), opts.enumeration);
    ok = true;
    return profile_of(fs).lengths;
  } catch (const Error& ex) {
    add(r, prefix + ".enumeration", false, ex.what());
  }
  return {};
}

void check_lengths(VerificationReport& r, const IvpElement& e, std::vector<std::size_t> expected,
                   const VerifyOptions& opts) {
  std::sort(expected.begin(), expected.end());
  r.expected_lengths = expected;
  bool ok = false;
  r.enumerated_lengths = enumerate_lengths(r, e, opts, "element", ok);
  if (!ok) return;
  add(r, "element.factorization_count", r.enumerated_lengths.size() == expected.size(),
      std::to_string(r.enumerated_lengths.size()) + " factorizations, expected " + std::to_string(expected.size()));
  add(r, "element.length_multiset", r.enumerated_lengths == expected,
      "enumerated " + lengths_text(r.enumerated_lengths) + ", expected " + lengths_text(expected));
}

// Checks shared by the constructions of the form prod(x - r) prod F / p.
void check_lifted_product(VerificationReport& r, const LiftedProduct& lp, const VerifyOptions& opts) {
  auto rc = check_residue_system(lp.residues.elements, lp.p);
  std::string rdetail;
  if (!rc.complete_mod_p) rdetail = "not complete mod p";
  if (rc.offending_prime) rdetail = "contains a complete system mod " + std::to_string(*rc.offending_prime);
  add(r, "residues.safe_system", lp.residues.p == lp.p && lp.residues.elements.size() == lp.p && rc.passed(),
      rdetail);

  std::vector<IntPoly> family;
  for (const auto& roots : lp.composite_roots) family.push_back(from_roots(roots));
  for (const auto& t : lp.linear_roots) family.push_back(IntPoly::x_minus(t));
  add(r, "lift.family_matches_roots", family == lp.lift.family, "");

  std::vector<bool> replacement(lp.lift.family.size(), false);
  for (std::size_t i = 0; i < lp.composite_roots.size() && i < replacement.size(); ++i) replacement[i] = true;
  LiftVerifyOptions lo;
  lo.subset_budget = opts.lift_budget;
  lo.replacement = replacement;
  for (auto& item : verify_lift(lp.lift, lo).items) r.items.push_back(std::move(item));

  const IvpElement& e = lp.element;
  std::vector<IntPoly> expected_factors;
  for (const auto& t : lp.linear_roots) expected_factors.push_back(IntPoly::x_minus(t));
  for (std::size_t i = 0; i < lp.composite_roots.size() && i < lp.lift.lifted.size(); ++i)
    expected_factors.push_back(lp.lift.lifted[i]);
  add(r, "element.factors_match", e.factors == expected_factors,
      "element must be the linear factors times the lifted composites");
  add(r, "element.normal_form", e.unit == 1 && e.a == 1 && e.b == big(lp.p), "expected unit 1, a = 1, b = p");

  check_factor_irreducibility(r, e, "element");
  if (!e.factors.empty()) {
    auto d = fixed_divisor_of_product(e.factors);
    add(r, "element.membership", mpz_divisible_p(d.value.get_mpz_t(), e.b.get_mpz_t()) != 0,
        "d(numerator) = " + to_decimal(d.value));
    add(r, "element.denominator_exact", d.value == big(lp.p), "d(numerator) must equal p exactly");
  }
}

bool same_multiset(std::vector<BigInt> a, std::vector<BigInt> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

void verify_kind(VerificationReport& r, const Example7Certificate& c, const VerifyOptions& opts) {
  const auto& lp = c.product;
  add(r, "example7.prime", is_prime(lp.p) && lp.p > c.n + 1, "p must be a prime > n + 1");
  const auto& a = lp.residues.elements;
  bool layout = a.size() == lp.p && lp.p > c.n + 1 && lp.composite_roots.size() == 2;
  if (layout) {
    layout = lp.linear_roots == std::vector<BigInt>(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(c.n + 1)) &&
             lp.composite_roots[0] == std::vector<BigInt>(a.begin() + 1, a.end()) &&
             lp.composite_roots[1] == std::vector<BigInt>(a.begin() + static_cast<std::ptrdiff_t>(c.n + 1), a.end());
  }
  add(r, "example7.layout", layout, "linear a_1..a_{n+1}, f over a_2..a_p, g over a_{n+2}..a_p");
  check_lifted_product(r, lp, opts);
  std::vector<std::size_t> want{2, static_cast<std::size_t>(c.n + 2)};
  std::sort(want.begin(), want.end());
  add(r, "example7.expected_lengths", [&] {
    auto e = c.expected_lengths;
    std::sort(e.begin(), e.end());
    return e == want;
  }());
  check_lengths(r, lp.element, c.expected_lengths, opts);
}

void verify_kind(VerificationReport& r, const Example8Certificate& c, const VerifyOptions& opts) {
  const auto& lp = c.product;
  const std::uint64_t mn = c.m * c.n;
  add(r, "example8.parameters", c.m >= 1 && c.m <= c.n && is_prime(lp.p) && lp.p > mn,
      "need 1 <= m <= n and prime p > mn");
  bool grid = c.grid.size() == c.m;
  for (const auto& row : c.grid) grid = grid && row.size() == c.n;
  bool layout = grid && lp.p > mn && lp.linear_roots.size() == lp.p - mn && lp.composite_roots.size() == c.m + c.n;
  if (layout) {
    std::vector<BigInt> all = lp.linear_roots;
    for (const auto& row : c.grid) all.insert(all.end(), row.begin(), row.end());
    layout = same_multiset(all, lp.residues.elements);
    for (std::uint64_t i = 0; i < c.m && layout; ++i) layout = lp.composite_roots[i] == c.grid[i];
    for (std::uint64_t j = 0; j < c.n && layout; ++j) {
      std::vector<BigInt> col;
      for (std::uint64_t i = 0; i < c.m; ++i) col.push_back(c.grid[i][j]);
      layout = lp.composite_roots[c.m + j] == col;
    }
  }
  add(r, "example8.layout", layout, "b's and grid partition R; f_i rows, g_j columns");
  check_lifted_product(r, lp, opts);
  std::vector<std::size_t> want{static_cast<std::size_t>(c.m + 1), static_cast<std::size_t>(c.n + 1)};
  auto got = c.expected_lengths;
  std::sort(got.begin(), got.end());
  add(r, "example8.expected_lengths", got == want);
  check_lengths(r, lp.element, c.expected_lengths, opts);
  if (c.requested_elasticity && !r.enumerated_lengths.empty()) {
    auto lo = r.enumerated_lengths.front(), hi = r.enumerated_lengths.back();
    // hi / lo == num / den as exact rationals
    bool ok = BigInt(static_cast<unsigned long>(hi)) * big(c.requested_elasticity->den) ==
              BigInt(static_cast<unsigned long>(lo)) * big(c.requested_elasticity->num);
    add(r, "example8.elasticity", ok,
        std::to_string(hi) + "/" + std::to_string(lo) + " vs requested " +
            std::to_string(c.requested_elasticity->num) + "/" + std::to_string(c.requested_elasticity->den));
  }
}

void verify_kind(VerificationReport& r, const Theorem9Certificate& c, const VerifyOptions& opts) {
  const auto& lp = c.product;
  const std::uint64_t n = c.m.size();
  bool sorted = std::is_sorted(c.m.begin(), c.m.end()) && n >= 2 &&
                std::all_of(c.m.begin(), c.m.end(), [](std::uint64_t v) { return v >= 1; });
  add(r, "theorem9.m", sorted, "m must be ascending, entries >= 1, at least two of them");
  std::uint64_t sum = 0, sum_sq = 0;
  for (auto v : c.m) {
    sum += v;
    sum_sq += v * v;
  }
  const std::uint64_t N = sum * sum - sum_sq;
  add(r, "theorem9.N", c.N == N, "recomputed N = " + std::to_string(N));
  add(r, "theorem9.prime", is_prime(lp.p) && lp.p > N, "p must be a prime > N");
  add(r, "theorem9.s", lp.p > N && c.s == lp.p - N && lp.linear_roots.size() == c.s);

  // Matrix positions: exactly the (k,h,i,j) with i != k, in order.
  std::vector<std::array<std::uint64_t, 4>> want_pos;
  for (std::uint64_t k = 1; k <= n; ++k)
    for (std::uint64_t h = 1; h <= c.m[k - 1]; ++h)
      for (std::uint64_t i = 1; i <= n; ++i) {
        if (i == k) continue;
        for (std::uint64_t j = 1; j <= c.m[i - 1]; ++j) want_pos.push_back({k, h, i, j});
      }
  bool positions = want_pos.size() == c.matrix.size();
  for (std::size_t t = 0; positions && t < want_pos.size(); ++t) {
    const auto& e = c.matrix[t];
    positions = want_pos[t] == std::array<std::uint64_t, 4>{e.k, e.h, e.i, e.j};
  }
  add(r, "theorem9.matrix_positions", positions, std::to_string(c.matrix.size()) + " entries, N = " + std::to_string(N));

  std::vector<BigInt> all = lp.linear_roots;
  for (const auto& e : c.matrix) all.push_back(e.residue);
  add(r, "theorem9.partition_of_R", same_multiset(all, lp.residues.elements), "R0 and t's must partition R");

  bool rows_cols = positions;
  std::map<BigInt, int> multiplicity;
  if (rows_cols) {
    std::size_t idx = 0;
    rows_cols = lp.composite_roots.size() == sum;
    for (std::uint64_t k = 1; k <= n && rows_cols; ++k)
      for (std::uint64_t h = 1; h <= c.m[k - 1] && rows_cols; ++h) {
        std::vector<BigInt> roots;
        for (const auto& e : c.matrix)
          if (e.k == k && e.h == h) roots.push_back(e.residue);
        for (const auto& e : c.matrix)
          if (e.i == k && e.j == h) roots.push_back(e.residue);
        rows_cols = lp.composite_roots[idx++] == roots;
      }
    for (const auto& roots : lp.composite_roots)
      for (const auto& v : roots) ++multiplicity[v];
  }
  bool twice = rows_cols && multiplicity.size() == c.matrix.size() &&
               std::all_of(multiplicity.begin(), multiplicity.end(), [](const auto& kv) { return kv.second == 2; });
  add(r, "theorem9.row_column_factors", rows_cols, "f^(k)_h must have roots S_{k,h} then T_{k,h}");
  add(r, "theorem9.each_residue_twice", twice, "every r(k,h,i,j) lies in one row and one column set");

  add(r, "theorem9.degree", lp.element.degree() == N + lp.p,
      "deg H = " + std::to_string(lp.element.degree()) + ", N + p = " + std::to_string(N + lp.p));
  check_lifted_product(r, lp, opts);
  std::vector<std::size_t> want;
  for (auto v : c.m) want.push_back(v + 1);
  auto got = c.expected_lengths;
  std::sort(got.begin(), got.end());
  add(r, "theorem9.expected_lengths", got == want);
  check_lengths(r, lp.element, c.expected_lengths, opts);
}

void verify_kind(VerificationReport& r, const UniqueLengthCertificate& c, const VerifyOptions& opts) {
  BigInt M0 = 1;
  for (auto q : primes_up_to(c.length)) M0 *= big(q);
  bool roots = c.length >= 2 && c.modulus == M0 && c.roots.size() == c.length;
  for (std::uint64_t j = 0; roots && j < c.length; ++j) roots = c.roots[j] == 1 + big(j) * M0;
  add(r, "unique_length.roots", roots, "roots must be 1 + j * prod(primes <= length)");
  std::vector<IntPoly> want;
  for (const auto& v : c.roots) want.push_back(IntPoly::x_minus(v));
  add(r, "element.factors_match", c.element.factors == want);
  add(r, "element.normal_form", c.element.unit == 1 && c.element.a == 1 && c.element.b == 1);
  check_factor_irreducibility(r, c.element, "element");
  if (!c.element.factors.empty())
    add(r, "element.denominator_exact", fixed_divisor_of_product(c.element.factors).value == 1,
        "d(numerator) must be 1");
  add(r, "unique_length.expected_lengths", c.expected_lengths == std::vector<std::size_t>{c.length});
  check_lengths(r, c.element, c.expected_lengths, opts);
}

void verify_kind(VerificationReport& r, const Theorem10Certificate& c, const VerifyOptions& opts) {
  const std::uint64_t n = c.n;
  bool P_ok = n >= 1 && c.P.size() == n && std::is_sorted(c.P.begin(), c.P.end()) &&
              std::adjacent_find(c.P.begin(), c.P.end()) == c.P.end() &&
              std::all_of(c.P.begin(), c.P.end(), [](std::uint64_t p) { return p > 2 && is_prime(p); });
  add(r, "theorem10.P", P_ok, "P must be n distinct odd primes, ascending");
  if (!P_ok) return;
  const std::uint64_t pn = c.P.back();
  add(r, "theorem10.Q", c.Q == primes_up_to(pn + n), "Q must be all primes <= p_n + n");

  bool counts = c.a_values.size() == n && c.b_values.size() == pn;
  add(r, "theorem10.counts", counts);
  if (!counts) return;
  bool cong = true;
  std::string cdetail;
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t p = c.P[i];
    for (std::uint64_t k = 1; k <= pn; ++k) {
      auto res = mpz_fdiv_ui(c.b_values[k - 1].get_mpz_t(), p);
      std::uint64_t want = k < p ? k : 1;
      if (res != want) {
        cong = false;
        cdetail = "b_" + std::to_string(k) + " mod " + std::to_string(p);
      }
    }
    for (std::uint64_t j = 0; j < n; ++j) {
      auto res = mpz_fdiv_ui(c.a_values[j].get_mpz_t(), p);
      if (res != (i == j ? 0u : 1u)) {
        cong = false;
        cdetail = "a_" + std::to_string(j + 1) + " mod " + std::to_string(p);
      }
    }
  }
  const unsigned long two = c.congruences == Theorem10Congruences::EvenShift ? 0 : 1;
  for (auto q : c.Q) {
    if (std::binary_search(c.P.begin(), c.P.end(), q)) continue;
    const unsigned long want = q == 2 ? two : 1;
    auto check = [&](const BigInt& v, const std::string& name) {
      if (mpz_fdiv_ui(v.get_mpz_t(), q) != want) {
        cong = false;
        cdetail = name + " mod " + std::to_string(q);
      }
    };
    for (std::uint64_t j = 0; j < n; ++j) check(c.a_values[j], "a_" + std::to_string(j + 1));
    for (std::uint64_t k = 1; k <= pn; ++k) check(c.b_values[k - 1], "b_" + std::to_string(k));
  }
  add(r, "theorem10.congruences", cong, cdetail);
  std::set<BigInt> distinct(c.a_values.begin(), c.a_values.end());
  distinct.insert(c.b_values.begin(), c.b_values.end());
  add(r, "theorem10.distinct_values", distinct.size() == n + pn);

  add(r, "theorem10.f", c.f == from_roots(c.b_values));
  std::vector<IntPoly> family{c.f};
  for (const auto& a : c.a_values) family.push_back(IntPoly::x_minus(a));
  add(r, "lift.family_matches_roots", family == c.lift.family);
  std::vector<bool> replacement(c.lift.family.size(), false);
  if (!replacement.empty()) replacement[0] = true;
  LiftVerifyOptions lo;
  lo.subset_budget = opts.lift_budget;
  lo.replacement = replacement;
  for (auto& item : verify_lift(c.lift, lo).items) r.items.push_back(std::move(item));
  if (c.lift.lifted.empty()) return;
  const IntPoly& F = c.lift.lifted[0];

  BigInt denom = 1;
  for (auto p : c.P) denom *= big(p);
  std::vector<IntPoly> h_factors{F};
  for (const auto& a : c.a_values) h_factors.push_back(IntPoly::x_minus(a));
  add(r, "theorem10.H_shape", c.H.factors == h_factors && c.H.a == 1 && c.H.unit == 1 && c.H.b == denom,
      "H must be F (x - a_1)...(x - a_n) / (p_1...p_n)");
  check_factor_irreducibility(r, c.H, "H");

  auto irreducible = [&](const IvpElement& e, const std::string& name) {
    try {
      auto w = is_irreducible(recertified(e), opts.enumeration);
      add(r, name, w.irreducible, w.reason);
    } catch (const Error& ex) {
      add(r, name, false, ex.what());
    }
  };
  irreducible(c.H, "theorem10.H_irreducible");

  add(r, "theorem10.claimed_count", c.claimed_factors.size() == n + 1);
  for (std::size_t i = 0; i < c.claimed_factors.size(); ++i)
    irreducible(c.claimed_factors[i], "theorem10.G" + std::to_string(i + 1) + "_irreducible");

  RationalPoly lhs = c.H.as_rational();
  lhs.numerator *= IntPoly::x_minus(BigInt(0));
  IntPoly num = IntPoly::constant(1);
  BigInt den = 1;
  for (const auto& g : c.claimed_factors) {
    auto q = g.as_rational();
    num *= q.numerator;
    den *= q.denominator;
  }
  add(r, "theorem10.product_identity", lhs.normalized() == RationalPoly{num, den}.normalized(),
      "x H must equal the product of the claimed factors");

  std::vector<IntPoly> xh{IntPoly::x_minus(BigInt(0)), F};
  for (const auto& a : c.a_values) xh.push_back(IntPoly::x_minus(a));
  try {
    IvpElement xH = make_element(1, BigInt(1), denom, xh);
    bool ok = false;
    auto lengths = enumerate_lengths(r, xH, opts, "xH", ok);
    if (ok) {
      r.enumerated_lengths = lengths;
      bool has = std::find(lengths.begin(), lengths.end(), n + 1) != lengths.end();
      add(r, "theorem10.xH_length", has, "L(xH) multiset " + lengths_text(lengths) + " must contain n + 1");
    }
  } catch (const Error& ex) {
    add(r, "theorem10.xH_membership", false, ex.what());
  }
}

}  // namespace

VerificationReport verify_certificate(const Certificate& cert, const VerifyOptions& opts) {
  VerificationReport r;
  r.kind = certificate_kind(cert);
  std::visit([&](const auto& c) { verify_kind(r, c, opts); }, cert);
  return r;
}

}  // namespace intz
