#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "intz/bigint.hpp"
#include "intz/fixed_divisor.hpp"
#include "intz/poly.hpp"

namespace intz {

/// Raised when a caller supplies a rational polynomial that is not integer-valued.
class MembershipError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Raised when an operation needs certified Z[x]-irreducible factors and gets asserted ones.
class TrustError : public Error {
 public:
  using Error::Error;
};

enum class TrustKind { Linear, Eisenstein, Asserted };

/// Why a factor is believed irreducible in Z[x].
struct FactorTrust {
  TrustKind kind = TrustKind::Asserted;
  std::uint64_t prime = 0;  ///< Eisenstein prime, when kind == Eisenstein

  static FactorTrust linear() { return {TrustKind::Linear, 0}; }
  static FactorTrust eisenstein(std::uint64_t q) { return {TrustKind::Eisenstein, q}; }
  static FactorTrust asserted() { return {TrustKind::Asserted, 0}; }
  bool certified() const { return kind != TrustKind::Asserted; }
};

/// Nonzero element unit * a * prod(factors) / b of Int(Z).
///
/// Factors are primitive, non-constant, positive leading coefficient, and
/// irreducible in Z[x] by caller contract; `trust` records how each one's
/// irreducibility is known.
struct IvpElement {
  int unit = 1;
  BigInt a{1};
  BigInt b{1};
  std::vector<IntPoly> factors;
  std::vector<FactorTrust> trust;

  bool is_constant() const { return factors.empty(); }
  bool irreducibility_trusted() const;
  std::size_t degree() const;
  RationalPoly as_rational() const;
};

/// Builds an element; linear factors are certified automatically, others asserted.
IvpElement make_element(int unit, const BigInt& a, const BigInt& b, std::vector<IntPoly> factors);

/// Builds an element with explicit trust claims, each of which is checked.
IvpElement make_element(int unit, const BigInt& a, const BigInt& b, std::vector<IntPoly> factors,
                        std::vector<FactorTrust> trust);

/// Smallest prime <= bound at which f is Eisenstein, if any.
std::optional<std::uint64_t> find_eisenstein_prime(const IntPoly& f, std::uint64_t bound = 1000000);

/// Linear if deg 1, Eisenstein if a small Eisenstein prime exists, else asserted.
FactorTrust certify_factor(const IntPoly& f);

struct MembershipWitness {
  bool member = false;
  /// First binomial coordinate that is not an integer, when not a member.
  std::optional<std::size_t> first_non_integer;
  /// Normal form f = sign * a * g / b with content(g) = 1: the b and d(g).
  BigInt reduced_denominator;
  BigInt primitive_fixed_divisor;
};

/// Membership in Int(Z) by integrality of the binomial coordinates,
/// cross-checked against b | d(g) on the normal form.
MembershipWitness is_member(const RationalPoly& f);

struct EnumerationOptions {
  std::size_t max_factors = 16;
  /// Accept factors whose irreducibility is only asserted.
  bool allow_asserted = false;
  /// Worker threads for the subset table (0 = all cores). Results do not depend on it.
  unsigned threads = 1;
};

struct IrreducibilityWitness {
  bool irreducible = false;
  std::string reason;
  /// For a reducible element with a = 1 and b = d(g): a proper split J.
  std::vector<std::size_t> split;
};

IrreducibilityWitness is_irreducible(const IvpElement& e, const EnumerationOptions& opts = {});

/// Inclusion-minimal index sets J with d(prod_J) = p, one per multiset of
/// factors, sorted. Requires d(prod of all factors) = p.
std::vector<std::vector<std::size_t>> minimal_p_subsets(std::span<const IntPoly> factors, std::uint64_t p,
                                                        const EnumerationOptions& opts = {});

struct Block {
  std::vector<std::size_t> indices;  ///< sorted indices into IvpElement::factors
  BigInt denominator;                ///< d of the block's product

  friend bool operator==(const Block&, const Block&) = default;
};

struct Factorization {
  int unit = 1;
  std::vector<BigInt> constant_primes;  ///< sorted
  std::vector<Block> blocks;            ///< sorted by indices

  std::size_t length() const { return constant_primes.size() + blocks.size(); }
};

/// All essentially different factorizations. Uses the minimal-subset route
/// when a = 1, b = p prime and d(prod g) = p; the general partition search otherwise.
std::vector<Factorization> enumerate_factorizations(const IvpElement& e, const EnumerationOptions& opts = {});

/// The general partition search, without the minimal-subset shortcut.
std::vector<Factorization> enumerate_factorizations_general(const IvpElement& e,
                                                            const EnumerationOptions& opts = {});

struct Ratio {
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

struct LengthProfile {
  std::vector<std::size_t> lengths;     ///< one entry per factorization, sorted
  std::vector<std::size_t> length_set;  ///< distinct lengths, sorted
  Ratio elasticity;                     ///< max / min in lowest terms
};

LengthProfile profile_of(std::span<const Factorization> fs);
LengthProfile length_profile(const IvpElement& e, const EnumerationOptions& opts = {});

/// Same unit, same constant primes, same blocks as multisets.
bool essentially_equal(const Factorization& f1, const Factorization& f2);

/// As above, but blocks compare as multisets of factor polynomials, so
/// repeated factors at different indices are identified.
bool essentially_equal(const IvpElement& e, const Factorization& f1, const Factorization& f2);

/// unit * constants * prod_j (prod_{I_j} g) / d_j as a normalized rational polynomial.
RationalPoly multiply_out(const IvpElement& e, const Factorization& f);

}  // namespace intz
