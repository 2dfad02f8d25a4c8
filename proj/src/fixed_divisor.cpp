#include "intz/fixed_divisor.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "intz/number_theory.hpp"

namespace intz {
namespace {

FixedDivisor factor_divisor(BigInt value, std::size_t degree, bool primitive) {
  FixedDivisor d;
  d.value = value;
  if (value == 0) throw std::logic_error("fixed divisor of a nonzero polynomial cannot be 0");
  for (auto p : primes_up_to(degree)) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(value.get_mpz_t(), p)) {
      mpz_divexact_ui(value.get_mpz_t(), value.get_mpz_t(), p);
      ++e;
    }
    if (e) d.factors[p] = e;
  }
  if (value != 1) {
    if (primitive)
      throw std::logic_error("fixed divisor has a prime factor above the degree: cofactor " +
                             to_decimal(value));
    for (auto [p, e] : factor_small(value)) d.factors[p] += e;
  }
  return d;
}

}  // namespace

FixedDivisor fixed_divisor(const IntPoly& f) {
  if (f.is_zero()) throw DomainError("fixed_divisor: zero polynomial");
  const std::size_t n = f.deg();
  BigInt g = 0;
  for (std::size_t c = 0; c <= n; ++c) {
    BigInt v = evaluate(f, BigInt(static_cast<unsigned long>(c)));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  return factor_divisor(g, n, is_primitive(f));
}

FixedDivisor fixed_divisor_of_product(std::span<const IntPoly> fs) {
  std::size_t n = 0;
  bool primitive = true;
  for (const auto& f : fs) {
    if (f.is_zero()) throw DomainError("fixed_divisor_of_product: zero factor");
    n += f.deg();
    primitive = primitive && is_primitive(f);
  }
  BigInt g = 0;
  for (std::size_t c = 0; c <= n; ++c) {
    BigInt point(static_cast<unsigned long>(c));
    BigInt v = 1;
    for (const auto& f : fs) v *= evaluate(f, point);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  return factor_divisor(g, n, primitive);
}

unsigned fixed_divisor_valuation(const IntPoly& f, std::uint64_t p) {
  if (f.is_zero()) throw DomainError("fixed_divisor_valuation: zero polynomial");
  if (!is_prime(p)) throw DomainError("fixed_divisor_valuation: " + std::to_string(p) + " is not prime");
  const std::size_t n = f.deg();
  unsigned best = ~0u;
  for (std::size_t c = 0; c <= n; ++c) {
    BigInt v = evaluate(f, BigInt(static_cast<unsigned long>(c)));
    if (v == 0) continue;
    best = std::min(best, valuation(v, p));
    if (best == 0) break;
  }
  // Values at n+1 consecutive points of a nonzero polynomial cannot all vanish.
  return best;
}

FixedDivisor fixed_divisor_oracle(const IntPoly& f, const OracleConfig& config) {
  if (f.is_zero()) throw DomainError("fixed_divisor_oracle: zero polynomial");
  if (!is_primitive(f)) throw DomainError("fixed_divisor_oracle: input must be primitive");
  const std::size_t n = f.deg();
  if (n > config.max_degree)
    throw BoundError("fixed_divisor_oracle: degree " + std::to_string(n) + " above oracle bound " +
                     std::to_string(config.max_degree));
  FixedDivisor d;
  for (auto p : primes_up_to(n)) {
    const unsigned cap = factorial_valuation(n, p) + 1;
    unsigned level = 0;
    unsigned __int128 modulus = 1;
    while (level < cap) {
      modulus *= p;
      if (modulus > (static_cast<unsigned __int128>(1) << 62))
        throw BoundError("fixed_divisor_oracle: modulus exceeds 62 bits");
      const auto m = static_cast<std::uint64_t>(modulus);
      std::vector<std::uint64_t> cs;
      cs.reserve(f.coeffs().size());
      for (const auto& a : f.coeffs()) {
        BigInt r;
        mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), m);
        cs.push_back(r.get_ui());
      }
      bool all_zero = true;
      for (std::uint64_t c = 0; c < m && all_zero; ++c) {
        unsigned __int128 acc = 0;
        for (std::size_t k = cs.size(); k-- > 0;) acc = (acc * c + cs[k]) % m;
        all_zero = acc == 0;
      }
      if (!all_zero) break;
      ++level;
    }
    if (level) {
      d.factors[p] = level;
      for (unsigned k = 0; k < level; ++k) d.value *= static_cast<unsigned long>(p);
    }
  }
  return d;
}

}  // namespace intz
