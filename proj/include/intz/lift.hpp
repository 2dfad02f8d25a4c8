#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "intz/bigint.hpp"
#include "intz/poly.hpp"
#include "intz/report.hpp"

namespace intz {

/// Replacement of monic f_i by monic Eisenstein F_i of the same degree that
/// keeps the fixed divisor of every product of a selection unchanged.
struct LiftCertificate {
  std::vector<IntPoly> family;          ///< f_i, monic, non-constant
  std::vector<IntPoly> lifted;          ///< F_i = f_i + perturbation_i (+ offset_i)
  std::size_t total_degree = 0;         ///< n = sum of deg f_i
  BigInt modulus;                       ///< M = prod_{p <= n} p^{v_p(n!)} = n!
  std::uint64_t q = 0;                  ///< Eisenstein prime, smallest prime > n
  std::vector<IntPoly> perturbations;   ///< F_i - f_i, a multiple of M of degree < deg f_i
  std::vector<BigInt> uniqueness_offsets;  ///< part of the constant term added to separate equal F_i
};

/// Lifts every member of the family. Coefficient j < deg f_i of F_i is
/// f_ij + M t with the smallest t in [0, q) making it divisible by q; for the
/// constant term t + q replaces t when q^2 would divide. Later members equal
/// to an earlier F get k q^2 M added to the constant term, k = 1, 2, ...
LiftCertificate lift_family(std::span<const IntPoly> family);

struct LiftVerifyOptions {
  /// Exhaustive mixed replacements when 3^|family| fits, exhaustive subsets
  /// K (with J = K and the production replacement) when 2^|family| fits,
  /// singletons, pairs, the full set and a deterministic sample otherwise.
  std::size_t subset_budget = std::size_t{1} << 16;
  std::size_t sample_size = 64;
  /// The replacement the caller actually uses: true = F_i, false = f_i.
  std::optional<std::vector<bool>> replacement;
};

struct LiftReport {
  std::vector<CheckItem> items;
  std::size_t selections_checked = 0;
  bool exhaustive_subsets = false;
  bool exhaustive_mixed = false;
  bool passed() const { return all_passed(items); }
};

LiftReport verify_lift(const LiftCertificate& cert, const LiftVerifyOptions& opts = {});

}  // namespace intz
