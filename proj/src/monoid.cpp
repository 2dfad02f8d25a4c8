#include "intz/monoid.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "intz/congruence.hpp"
#include "intz/kernels.hpp"
#include "intz/number_theory.hpp"
#include "intz/valuation_matrix.hpp"

namespace intz {

bool IvpElement::irreducibility_trusted() const {
  return std::all_of(trust.begin(), trust.end(), [](const FactorTrust& t) { return t.certified(); });
}

std::size_t IvpElement::degree() const {
  std::size_t n = 0;
  for (const auto& g : factors) n += g.deg();
  return n;
}

RationalPoly IvpElement::as_rational() const {
  IntPoly num = product(factors) * BigInt(a * unit);
  return RationalPoly{num, b}.normalized();
}

std::optional<std::uint64_t> find_eisenstein_prime(const IntPoly& f, std::uint64_t bound) {
  if (f.is_zero() || f.deg() == 0) return std::nullopt;
  BigInt g = 0;
  for (std::size_t k = 0; k < f.deg(); ++k) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), f.coeffs()[k].get_mpz_t());
  if (g == 0 || g == 1) return std::nullopt;
  for (std::uint64_t q = 2; q <= bound; q = next_prime(q)) {
    if (BigInt(q) > g) break;
    if (!mpz_divisible_ui_p(g.get_mpz_t(), q)) continue;
    if (is_eisenstein(f, q)) return q;
  }
  return std::nullopt;
}

FactorTrust certify_factor(const IntPoly& f) {
  if (!f.is_zero() && f.deg() == 1) return FactorTrust::linear();
  if (auto q = find_eisenstein_prime(f)) return FactorTrust::eisenstein(*q);
  return FactorTrust::asserted();
}

namespace {

void validate_shape(int unit, const BigInt& a, const BigInt& b, const std::vector<IntPoly>& factors) {
  if (unit != 1 && unit != -1) throw DomainError("element unit must be +1 or -1");
  if (a <= 0) throw DomainError("element constant a must be positive");
  if (b <= 0) throw DomainError("element denominator b must be positive");
  if (gcd(a, b) != 1) throw DomainError("element needs gcd(a, b) = 1");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& g = factors[i];
    if (g.is_zero() || g.deg() == 0)
      throw DomainError("factor " + std::to_string(i) + " is constant; constants belong in a");
    if (g.leading() < 0) throw DomainError("factor " + std::to_string(i) + " has negative leading coefficient");
    if (!is_primitive(g)) throw DomainError("factor " + std::to_string(i) + " is not primitive");
  }
  if (b != 1) {
    FixedDivisor d = fixed_divisor_of_product(factors);
    if (!mpz_divisible_p(d.value.get_mpz_t(), b.get_mpz_t()))
      throw MembershipError("not integer-valued: b = " + to_decimal(b) + " does not divide d(g) = " +
                            to_decimal(d.value));
  }
}

}  // namespace

IvpElement make_element(int unit, const BigInt& a, const BigInt& b, std::vector<IntPoly> factors) {
  std::vector<FactorTrust> trust;
  for (const auto& g : factors)
    trust.push_back(!g.is_zero() && g.deg() == 1 ? FactorTrust::linear() : FactorTrust::asserted());
  return make_element(unit, a, b, std::move(factors), std::move(trust));
}

IvpElement make_element(int unit, const BigInt& a, const BigInt& b, std::vector<IntPoly> factors,
                        std::vector<FactorTrust> trust) {
  validate_shape(unit, a, b, factors);
  if (trust.size() != factors.size()) throw DomainError("one trust entry per factor required");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    switch (trust[i].kind) {
      case TrustKind::Linear:
        if (factors[i].deg() != 1) throw TrustError("factor " + std::to_string(i) + " claimed linear");
        break;
      case TrustKind::Eisenstein:
        if (!is_prime(trust[i].prime) || !is_eisenstein(factors[i], trust[i].prime))
          throw TrustError("factor " + std::to_string(i) + " is not Eisenstein at " +
                           std::to_string(trust[i].prime));
        break;
      case TrustKind::Asserted:
        if (factors[i].deg() == 1) trust[i] = FactorTrust::linear();
        break;
    }
  }
  IvpElement e;
  e.unit = unit;
  e.a = a;
  e.b = b;
  e.factors = std::move(factors);
  e.trust = std::move(trust);
  return e;
}

MembershipWitness is_member(const RationalPoly& f) {
  if (f.numerator.is_zero()) throw DomainError("is_member: zero polynomial");
  if (f.denominator <= 0) throw DomainError("is_member: denominator must be positive");
  MembershipWitness w;
  auto coords = binomial_coefficients(f.numerator);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (!mpz_divisible_p(coords[k].get_mpz_t(), f.denominator.get_mpz_t())) {
      w.first_non_integer = k;
      break;
    }
  }
  w.member = !w.first_non_integer.has_value();

  auto pp = primitive_part(f.numerator);
  BigInt g = gcd(pp.content, f.denominator);
  w.reduced_denominator = f.denominator / g;
  w.primitive_fixed_divisor = fixed_divisor(pp.primitive).value;
  bool by_divisor = mpz_divisible_p(w.primitive_fixed_divisor.get_mpz_t(), w.reduced_denominator.get_mpz_t());
  if (by_divisor != w.member)
    throw std::logic_error("is_member: binomial-basis and fixed-divisor criteria disagree");
  return w;
}

// ---------------------------------------------------------------------------
// Subset fixed divisors of an element's factors

namespace {

using Exps = std::vector<std::uint16_t>;

struct SubsetDivisors {
  FixedDivisor total;
  std::vector<std::uint64_t> primes;
  std::vector<unsigned> total_exps;
  std::vector<std::uint16_t> table;  // [mask * primes.size() + j]
  std::size_t k = 0;

  std::span<const std::uint16_t> at(std::size_t mask) const {
    return {table.data() + mask * primes.size(), primes.size()};
  }
  BigInt value(std::size_t mask) const {
    BigInt v = 1;
    for (std::size_t j = 0; j < primes.size(); ++j) {
      BigInt pe;
      mpz_ui_pow_ui(pe.get_mpz_t(), primes[j], at(mask)[j]);
      v *= pe;
    }
    return v;
  }
  std::size_t full() const { return (std::size_t{1} << k) - 1; }
};

void check_enumerable(const IvpElement& e, const EnumerationOptions& opts) {
  if (!opts.allow_asserted && !e.irreducibility_trusted())
    throw TrustError("factor irreducibility is only asserted; refusing to certify");
  if (e.factors.size() > opts.max_factors)
    throw BoundError("element has " + std::to_string(e.factors.size()) + " factors, above the enumeration bound " +
                     std::to_string(opts.max_factors));
}

SubsetDivisors subset_divisors(std::span<const IntPoly> factors, unsigned threads) {
  SubsetDivisors sd;
  sd.k = factors.size();
  sd.total = fixed_divisor_of_product(factors);
  std::vector<unsigned> caps;
  for (auto [p, e] : sd.total.factors) {
    sd.primes.push_back(p);
    sd.total_exps.push_back(e);
    caps.push_back(e + 1);
  }
  std::size_t points = 1;
  for (const auto& g : factors) points += g.deg();
  ValuationMatrix m(factors, sd.primes, caps, points);
  sd.table = all_subset_exponents(m, threads);
#ifndef NDEBUG
  // d(prod_J) divides d(prod_I) for J inside I.
  for (std::size_t mask = 0; mask <= sd.full(); ++mask)
    for (std::size_t j = 0; j < sd.primes.size(); ++j) assert(sd.at(mask)[j] <= sd.total_exps[j]);
  for (std::size_t j = 0; j < sd.primes.size(); ++j) assert(sd.at(sd.full())[j] == sd.total_exps[j]);
#endif
  return sd;
}

bool splits_exactly(const SubsetDivisors& sd, std::size_t whole, std::size_t part) {
  auto w = sd.at(whole), x = sd.at(part), y = sd.at(whole ^ part);
  for (std::size_t j = 0; j < w.size(); ++j)
    if (x[j] + y[j] != w[j]) return false;
  return true;
}

// A proper nonempty J of `whole` with d(J) d(whole \ J) = d(whole), if any.
std::optional<std::size_t> find_split(const SubsetDivisors& sd, std::size_t whole) {
  if (std::popcount(whole) < 2) return std::nullopt;
  const std::size_t low = whole & (~whole + 1);
  const std::size_t rest = whole ^ low;
  // J always contains the lowest element; J and its complement are interchangeable.
  for (std::size_t sub = rest;; sub = (sub - 1) & rest) {
    std::size_t j = sub | low;
    if (j != whole && splits_exactly(sd, whole, j)) return j;
    if (sub == 0) break;
  }
  return std::nullopt;
}

std::vector<std::size_t> class_ids(std::span<const IntPoly> factors) {
  std::vector<std::size_t> ids(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    ids[i] = i;
    for (std::size_t j = 0; j < i; ++j) {
      if (factors[j] == factors[i]) {
        ids[i] = ids[j];
        break;
      }
    }
  }
  return ids;
}

std::vector<std::size_t> mask_indices(std::size_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i);
  return out;
}

std::vector<std::size_t> class_key(const std::vector<std::size_t>& indices, const std::vector<std::size_t>& ids) {
  std::vector<std::size_t> out;
  for (auto i : indices) out.push_back(ids[i]);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime_big(const BigInt& a) {
  if (a < 2) return false;
  if (a.fits_ulong_p()) return is_prime(a.get_ui());
  return mpz_probab_prime_p(a.get_mpz_t(), 40) != 0;
}

void sort_factorizations(std::vector<Factorization>& out) {
  auto key = [](const Factorization& f) {
    std::vector<std::vector<std::size_t>> bs;
    for (const auto& b : f.blocks) bs.push_back(b.indices);
    return std::make_pair(f.length(), bs);
  };
  std::stable_sort(out.begin(), out.end(), [&](const Factorization& x, const Factorization& y) {
    auto kx = key(x), ky = key(y);
    if (kx != ky) return kx < ky;
    return std::lexicographical_compare(x.constant_primes.begin(), x.constant_primes.end(),
                                        y.constant_primes.begin(), y.constant_primes.end());
  });
}

void normalize(Factorization& f) {
  std::sort(f.constant_primes.begin(), f.constant_primes.end());
  for (auto& b : f.blocks) std::sort(b.indices.begin(), b.indices.end());
  std::sort(f.blocks.begin(), f.blocks.end(), [](const Block& x, const Block& y) {
    if (x.indices != y.indices) return x.indices < y.indices;
    return x.denominator < y.denominator;
  });
}

}  // namespace

IrreducibilityWitness is_irreducible(const IvpElement& e, const EnumerationOptions& opts) {
  IrreducibilityWitness w;
  if (e.is_constant()) {
    w.irreducible = e.b == 1 && is_prime_big(e.a);
    w.reason = w.irreducible ? "constant prime" : "constant that is not a prime";
    return w;
  }
  check_enumerable(e, opts);
  if (e.a != 1) {
    w.reason = "constant factor a = " + to_decimal(e.a) + " splits off";
    return w;
  }
  SubsetDivisors sd = subset_divisors(e.factors, opts.threads);
  if (e.b != sd.total.value) {
    w.reason = "denominator " + to_decimal(e.b) + " is a proper divisor of d(g) = " + to_decimal(sd.total.value);
    return w;
  }
  if (auto j = find_split(sd, sd.full())) {
    w.reason = "d(g) splits as d(J) * d(I \\ J)";
    w.split = mask_indices(*j);
    return w;
  }
  w.irreducible = true;
  w.reason = e.factors.size() == 1 ? "single factor with full denominator" : "no splitting subset";
  return w;
}

std::vector<std::vector<std::size_t>> minimal_p_subsets(std::span<const IntPoly> factors, std::uint64_t p,
                                                        const EnumerationOptions& opts) {
  if (!is_prime(p)) throw DomainError("minimal_p_subsets: " + std::to_string(p) + " is not prime");
  if (factors.size() > opts.max_factors)
    throw BoundError("minimal_p_subsets: " + std::to_string(factors.size()) + " factors above bound " +
                     std::to_string(opts.max_factors));
  FixedDivisor total = fixed_divisor_of_product(factors);
  if (total.value != p)
    throw DomainError("minimal_p_subsets: d(product) = " + to_decimal(total.value) + ", expected " +
                      std::to_string(p));

  // p | d(prod_J) iff the factors of J jointly vanish mod p at every residue;
  // since d(prod_J) | p this decides d(prod_J) = p. Rows hold min(v_p(g(c)), 1).
  const std::size_t k = factors.size();
  ValuationMatrix m(factors, {p}, {1}, p);
  const auto& kern = kernels::active();
  std::vector<std::vector<std::uint16_t>> suffix(k + 1, std::vector<std::uint16_t>(p, 0));
  for (std::size_t i = k; i-- > 0;) kern.add_min(suffix[i].data(), suffix[i + 1].data(), m.row(i, 0).data(), p);

  const auto ids = class_ids(factors);
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::vector<std::uint16_t>> acc(k + 1, std::vector<std::uint16_t>(p, 0));
  std::vector<std::uint16_t> scratch(p);
  std::vector<std::size_t> members;

  auto is_minimal = [&]() {
    for (std::size_t skip = 0; skip < members.size(); ++skip) {
      std::vector<std::size_t> rest;
      for (std::size_t t = 0; t < members.size(); ++t)
        if (t != skip) rest.push_back(members[t]);
      if (m.subset_exponents(rest)[0] >= 1) return false;
    }
    return true;
  };

  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t level) {
    const auto& cur = acc[level];
    if (kern.min(cur.data(), p) >= 1) {
      if (is_minimal()) {
        auto key = class_key(members, ids);
        if (seen.insert(key).second) out.push_back(members);
      }
      return;
    }
    if (i == k) return;
    if (kern.add_min(scratch.data(), cur.data(), suffix[i].data(), p) == 0) return;
    members.push_back(i);
    kern.add_min(acc[level + 1].data(), cur.data(), m.row(i, 0).data(), p);
    rec(i + 1, level + 1);
    members.pop_back();
    acc[level + 1] = cur;
    rec(i + 1, level + 1);
  };
  rec(0, 0);

  std::sort(out.begin(), out.end());
  for (const auto& j : out) {
    std::vector<IntPoly> sub;
    for (auto i : j) sub.push_back(factors[i]);
    if (fixed_divisor_of_product(sub).value != p)
      throw std::logic_error("minimal_p_subsets: residue cover disagrees with direct fixed divisor");
  }
  return out;
}

std::vector<Factorization> enumerate_factorizations_general(const IvpElement& e, const EnumerationOptions& opts) {
  if (e.is_constant()) {
    if (e.a == 1) throw DomainError("enumerate_factorizations: units have no factorization");
    Factorization f;
    f.unit = e.unit;
    f.constant_primes = prime_multiset(e.a);
    return {f};
  }
  check_enumerable(e, opts);
  SubsetDivisors sd = subset_divisors(e.factors, opts.threads);
  const std::size_t full = sd.full();
  const std::size_t P = sd.primes.size();

  std::vector<char> irreducible(full + 1, 0);
  for (std::size_t s = 1; s <= full; ++s) irreducible[s] = !find_split(sd, s).has_value();

  std::vector<unsigned> need(P, 0);
  for (std::size_t j = 0; j < P; ++j) need[j] = valuation(e.b, sd.primes[j]);

  const auto ids = class_ids(e.factors);
  std::set<std::vector<std::vector<std::size_t>>> seen;
  std::vector<Factorization> out;
  std::vector<std::size_t> blocks;
  std::vector<unsigned> sum(P, 0);

  std::function<void(std::size_t)> rec = [&](std::size_t remaining) {
    if (remaining == 0) {
      for (std::size_t j = 0; j < P; ++j)
        if (sum[j] < need[j]) return;
      std::vector<std::vector<std::size_t>> key;
      for (auto s : blocks) key.push_back(class_key(mask_indices(s), ids));
      std::sort(key.begin(), key.end());
      if (!seen.insert(key).second) return;
      Factorization f;
      f.unit = e.unit;
      BigInt c = 1;
      for (std::size_t j = 0; j < P; ++j) {
        BigInt pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), sd.primes[j], sum[j] - need[j]);
        c *= pe;
      }
      BigInt ac = e.a * c;
      if (ac != 1) f.constant_primes = prime_multiset(ac);
      for (auto s : blocks) f.blocks.push_back({mask_indices(s), sd.value(s)});
      normalize(f);
      out.push_back(std::move(f));
      return;
    }
    const std::size_t low = remaining & (~remaining + 1);
    const std::size_t rest = remaining ^ low;
    for (std::size_t sub = rest;; sub = (sub - 1) & rest) {
      const std::size_t s = sub | low;
      if (irreducible[s]) {
        auto ex = sd.at(s);
        for (std::size_t j = 0; j < P; ++j) sum[j] += ex[j];
        blocks.push_back(s);
        rec(remaining ^ s);
        blocks.pop_back();
        for (std::size_t j = 0; j < P; ++j) sum[j] -= ex[j];
      }
      if (sub == 0) break;
    }
  };
  rec(full);
  sort_factorizations(out);
  return out;
}

std::vector<Factorization> enumerate_factorizations(const IvpElement& e, const EnumerationOptions& opts) {
  if (!e.is_constant() && e.a == 1 && e.b.fits_ulong_p() && is_prime(e.b.get_ui())) {
    check_enumerable(e, opts);
    const std::uint64_t p = e.b.get_ui();
    if (fixed_divisor_of_product(e.factors).value == e.b) {
      std::vector<Factorization> out;
      for (const auto& j : minimal_p_subsets(e.factors, p, opts)) {
        Factorization f;
        f.unit = e.unit;
        f.blocks.push_back({j, e.b});
        for (std::size_t i = 0; i < e.factors.size(); ++i)
          if (!std::binary_search(j.begin(), j.end(), i)) f.blocks.push_back({{i}, BigInt(1)});
        normalize(f);
        out.push_back(std::move(f));
      }
      sort_factorizations(out);
      return out;
    }
  }
  return enumerate_factorizations_general(e, opts);
}

LengthProfile profile_of(std::span<const Factorization> fs) {
  LengthProfile lp;
  for (const auto& f : fs) lp.lengths.push_back(f.length());
  std::sort(lp.lengths.begin(), lp.lengths.end());
  lp.length_set = lp.lengths;
  lp.length_set.erase(std::unique(lp.length_set.begin(), lp.length_set.end()), lp.length_set.end());
  if (!lp.lengths.empty()) {
    std::uint64_t hi = lp.lengths.back(), lo = lp.lengths.front();
    std::uint64_t g = std::gcd(hi, lo);
    lp.elasticity = {hi / g, lo / g};
  }
  return lp;
}

LengthProfile length_profile(const IvpElement& e, const EnumerationOptions& opts) {
  auto fs = enumerate_factorizations(e, opts);
  return profile_of(fs);
}

bool essentially_equal(const Factorization& f1, const Factorization& f2) {
  Factorization a = f1, b = f2;
  normalize(a);
  normalize(b);
  return a.unit == b.unit && a.constant_primes == b.constant_primes && a.blocks == b.blocks;
}

bool essentially_equal(const IvpElement& e, const Factorization& f1, const Factorization& f2) {
  if (f1.unit != f2.unit) return false;
  auto primes1 = f1.constant_primes, primes2 = f2.constant_primes;
  std::sort(primes1.begin(), primes1.end());
  std::sort(primes2.begin(), primes2.end());
  if (primes1 != primes2) return false;
  const auto ids = class_ids(e.factors);
  auto keys = [&](const Factorization& f) {
    std::vector<std::pair<std::vector<std::size_t>, std::string>> out;
    for (const auto& b : f.blocks) out.emplace_back(class_key(b.indices, ids), to_decimal(b.denominator));
    std::sort(out.begin(), out.end());
    return out;
  };
  return keys(f1) == keys(f2);
}

RationalPoly multiply_out(const IvpElement& e, const Factorization& f) {
  BigInt scalar = f.unit;
  for (const auto& p : f.constant_primes) scalar *= p;
  IntPoly num = IntPoly::constant(scalar);
  BigInt den = 1;
  for (const auto& b : f.blocks) {
    for (auto i : b.indices) num *= e.factors.at(i);
    den *= b.denominator;
  }
  return RationalPoly{num, den}.normalized();
}

}  // namespace intz
