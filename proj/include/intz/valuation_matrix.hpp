#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "intz/poly.hpp"

namespace intz {

/// Capped valuations v_p(g(c)) of a family of primitive polynomials g at the
/// points c = 0..points-1, one row per (polynomial, prime).
///
/// For any sub-family S whose product has degree < points, v_p(d(prod S)) is
/// the minimum over the points of the row sums, provided the cap for p exceeds
/// v_p(d(prod S)). Callers pick caps from an a-priori bound (v_p(n!) for
/// primitive products of degree n, or v_p of an ambient fixed divisor).
class ValuationMatrix {
 public:
  ValuationMatrix(std::span<const IntPoly> polys, std::vector<std::uint64_t> primes,
                  std::vector<unsigned> caps, std::size_t points);

  std::size_t poly_count() const { return poly_count_; }
  std::size_t prime_count() const { return primes_.size(); }
  std::size_t points() const { return points_; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }

  std::span<const std::uint16_t> row(std::size_t poly, std::size_t prime) const;
  /// All prime rows of one polynomial, concatenated.
  std::span<const std::uint16_t> rows(std::size_t poly) const;

  /// Exponents (indexed like primes()) of d of the product of the given members.
  std::vector<std::uint16_t> subset_exponents(std::span<const std::size_t> members) const;

 private:
  std::size_t poly_count_;
  std::vector<std::uint64_t> primes_;
  std::size_t points_;
  std::vector<std::uint16_t> data_;
};

/// Exponent vectors for all 2^k subsets of the matrix's polynomials, flattened
/// as table[mask * prime_count + prime_index]. Bit i of mask selects
/// polynomial i. The work is split over `threads` workers (0 = hardware
/// concurrency); the table is identical for every thread count.
std::vector<std::uint16_t> all_subset_exponents(const ValuationMatrix& m, unsigned threads = 1);

/// Depth-first walk over selections: slot s either contributes nothing
/// (choice -1) or exactly one of the matrix rows listed in slots[s]
/// (choice = position in that list). The visitor sees every selection,
/// including the empty one, with the exponent vector of its product.
using SelectionVisitor =
    std::function<void(std::span<const int> choice, std::span<const std::uint16_t> exponents)>;
void for_each_selection(const ValuationMatrix& m, std::span<const std::vector<std::size_t>> slots,
                        const SelectionVisitor& visit);

unsigned resolve_threads(unsigned threads);

}  // namespace intz
