#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "intz/bigint.hpp"
#include "intz/number_theory.hpp"
#include "intz/poly.hpp"

namespace intz {

/// p integers forming a complete residue system mod p that contains no
/// complete residue system modulo any other prime.
struct ResidueSystem {
  std::uint64_t p = 0;
  std::vector<BigInt> elements;  ///< s_1..s_p with s_k == k mod p
};

struct Congruence {
  BigInt residue;
  BigInt modulus;
};

/// Smallest non-negative x with x == residue mod modulus for every pair.
/// Moduli must be >= 1 and pairwise coprime.
BigInt crt(std::span<const Congruence> system);

/// s_k = smallest non-negative solution of s_k == k mod p, s_k == 1 mod q for all primes q < p.
ResidueSystem safe_residue_system(std::uint64_t p);

struct PrimeWitness {
  std::uint64_t q = 0;
  /// Smallest residue class mod q not hit; empty means the set is complete mod q.
  std::optional<std::uint64_t> missing_residue;
};

struct ResidueCheckReport {
  bool p_is_prime = false;
  bool complete_mod_p = false;
  std::vector<std::uint64_t> missing_mod_p;
  /// Every prime q < p, and every prime in (p, |elements|] for oversized inputs.
  std::vector<PrimeWitness> witnesses;
  std::optional<std::uint64_t> offending_prime;

  bool passed() const { return p_is_prime && complete_mod_p && !offending_prime; }
};

ResidueCheckReport check_residue_system(std::span<const BigInt> elements, std::uint64_t p);

/// Eisenstein's criterion at q: q does not divide the leading coefficient,
/// q divides every other coefficient, q^2 does not divide the constant term.
bool is_eisenstein(const IntPoly& f, std::uint64_t q);

}  // namespace intz
