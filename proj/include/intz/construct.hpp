#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "intz/congruence.hpp"
#include "intz/lift.hpp"
#include "intz/monoid.hpp"

namespace intz {

/// H = prod (x - r) * prod F / p for a safe residue system mod p: the common
/// skeleton of the prescribed-length constructions.
struct LiftedProduct {
  std::uint64_t p = 0;
  ResidueSystem residues;
  std::vector<BigInt> linear_roots;                ///< raw linear factors x - r
  std::vector<std::vector<BigInt>> composite_roots;  ///< roots of each f that gets lifted
  /// Family: from_roots(composite_roots[i]) in order, then x - r for each linear root.
  LiftCertificate lift;
  /// Factors: x - r for the linear roots, then the lifted composites; a = 1, b = p.
  IvpElement element;
};

/// Two factorizations, of lengths 2 and n + 2.
struct Example7Certificate {
  std::uint64_t n = 0;
  LiftedProduct product;
  std::vector<std::size_t> expected_lengths;
};

/// Two factorizations, of lengths m + 1 and n + 1.
struct Example8Certificate {
  std::uint64_t m = 0, n = 0;
  std::vector<std::vector<BigInt>> grid;  ///< r(i, j), m rows of n entries
  std::optional<Ratio> requested_elasticity;
  LiftedProduct product;
  std::vector<std::size_t> expected_lengths;
};

struct MatrixEntry {
  std::uint64_t k = 0, h = 0, i = 0, j = 0;  ///< 1-based row block/row, column block/column
  BigInt residue;
};

/// Exactly one factorization of length m_i + 1 for each i.
struct Theorem9Certificate {
  std::vector<std::uint64_t> m;  ///< ascending, target lengths minus one
  std::uint64_t N = 0, s = 0;
  std::vector<MatrixEntry> matrix;  ///< lexicographic (k, h, i, j), i != k
  LiftedProduct product;
  std::vector<std::size_t> expected_lengths;
};

/// A single factorization of the requested length, for one-element length multisets.
struct UniqueLengthCertificate {
  std::uint64_t length = 0;
  BigInt modulus;             ///< product of the primes <= length
  std::vector<BigInt> roots;  ///< 1 + j * modulus
  IvpElement element;
  std::vector<std::size_t> expected_lengths;
};

enum class Theorem10Congruences {
  /// a_i and b_k even; keeps d(xF) = p_1...p_n exactly.
  EvenShift,
  /// a_i, b_k == 1 mod 2 as literally stated; makes 2 divide d(xF). Kept for regression tests.
  Literal,
};

/// Irreducible H with x H = G_1 ... G_{n+1}, every G irreducible.
struct Theorem10Certificate {
  std::uint64_t n = 0;
  Theorem10Congruences congruences = Theorem10Congruences::EvenShift;
  std::vector<std::uint64_t> P;  ///< first n odd primes
  std::vector<std::uint64_t> Q;  ///< all primes <= p_n + n
  std::vector<BigInt> a_values;
  std::vector<BigInt> b_values;
  IntPoly f;                     ///< prod (x - b_k)
  LiftCertificate lift;          ///< family f, x - a_1, ..., x - a_n
  IvpElement H;                  ///< F (x - a_1)...(x - a_n) / (p_1...p_n)
  std::vector<IvpElement> claimed_factors;  ///< x F / (p_1...p_n), x - a_1, ..., x - a_n
};

using Certificate = std::variant<Example7Certificate, Example8Certificate, Theorem9Certificate,
                                 UniqueLengthCertificate, Theorem10Certificate>;

/// Polynomial with the prescribed multiset of lengths (entries >= 2).
Certificate construct_lengths(std::span<const std::uint64_t> lengths);
Example7Certificate construct_example7(std::uint64_t n);
Example8Certificate construct_example8(std::uint64_t m, std::uint64_t n);
/// Element of elasticity exactly num/den (> 1), via the two-length grid construction.
Example8Certificate construct_elasticity(std::uint64_t num, std::uint64_t den);
Theorem10Certificate construct_theorem10(std::uint64_t n,
                                         Theorem10Congruences congruences = Theorem10Congruences::EvenShift);

/// Kind tag used in the JSON encoding.
const char* certificate_kind(const Certificate& c);

}  // namespace intz
