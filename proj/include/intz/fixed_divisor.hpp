#pragma once

#include <cstdint>
#include <map>
#include <span>

#include "intz/bigint.hpp"
#include "intz/poly.hpp"

namespace intz {

/// d(f): the non-negative generator of the ideal spanned by f(Z).
struct FixedDivisor {
  BigInt value{1};
  std::map<std::uint64_t, unsigned> factors;  ///< prime -> exponent

  friend bool operator==(const FixedDivisor&, const FixedDivisor&) = default;
};

/// gcd(f(0), ..., f(n)) with n = deg f.
///
/// Any n+1 consecutive values suffice: the binomial coordinates Delta^k f(0)
/// are integer combinations of f(0..n) and conversely, and every value f(c)
/// is an integer combination of the coordinates. For primitive f every prime
/// factor of the result is <= n, so trial division up to n factors it
/// completely; a surviving cofactor is an internal error.
FixedDivisor fixed_divisor(const IntPoly& f);

/// d of the product of fs, evaluated factor by factor (never expands the product).
FixedDivisor fixed_divisor_of_product(std::span<const IntPoly> fs);

/// v_p(d(f)) = min over c of v_p(f(c)).
unsigned fixed_divisor_valuation(const IntPoly& f, std::uint64_t p);

struct OracleConfig {
  /// Largest accepted degree. The residue-level search is exponential in the
  /// valuation it finds, so the bound is deliberately small.
  std::size_t max_degree = 30;
};

/// Independent route to d(f) for primitive f: for each prime p <= deg f, the
/// largest k with f(c) == 0 mod p^k for every residue c mod p^k, searched
/// level by level and capped at v_p(n!) + 1.
FixedDivisor fixed_divisor_oracle(const IntPoly& f, const OracleConfig& config = {});

}  // namespace intz
