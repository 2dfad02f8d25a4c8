#include <random>

#include "doctest.h"
#include "intz/fixed_divisor.hpp"
#include "intz/number_theory.hpp"
#include "intz/valuation_matrix.hpp"

using namespace intz;

namespace {

std::vector<IntPoly> sample_family(std::mt19937_64& rng, std::size_t k) {
  std::vector<IntPoly> fs;
  for (std::size_t i = 0; i < k; ++i) fs.push_back(IntPoly::x_minus(BigInt(static_cast<long>(rng() % 13) - 6)));
  return fs;
}

}  // namespace

TEST_CASE("subset exponents equal the fixed divisor of the product") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 10; ++t) {
    auto fs = sample_family(rng, 7);
    auto primes = primes_up_to(7);
    std::vector<unsigned> caps;
    for (auto p : primes) caps.push_back(factorial_valuation(7, p) + 1);
    ValuationMatrix m(fs, primes, caps, 8);
    auto table = all_subset_exponents(m, 1);
    for (std::uint64_t mask = 1; mask < (1u << fs.size()); ++mask) {
      std::vector<IntPoly> sub;
      std::vector<std::size_t> members;
      for (std::size_t i = 0; i < fs.size(); ++i)
        if (mask >> i & 1) {
          sub.push_back(fs[i]);
          members.push_back(i);
        }
      auto d = fixed_divisor_of_product(sub);
      auto direct = m.subset_exponents(members);
      for (std::size_t j = 0; j < primes.size(); ++j) {
        unsigned want = d.factors.count(primes[j]) ? d.factors.at(primes[j]) : 0;
        CHECK(table[mask * primes.size() + j] == want);
        CHECK(direct[j] == want);
      }
    }
  }
}

TEST_CASE("subset table is independent of the thread count") {
  std::mt19937_64 rng(29);
  auto fs = sample_family(rng, 12);
  auto primes = primes_up_to(12);
  std::vector<unsigned> caps;
  for (auto p : primes) caps.push_back(factorial_valuation(12, p) + 1);
  ValuationMatrix m(fs, primes, caps, 13);
  auto one = all_subset_exponents(m, 1);
  CHECK(all_subset_exponents(m, 2) == one);
  CHECK(all_subset_exponents(m, 5) == one);
  CHECK(all_subset_exponents(m, 0) == one);
}

TEST_CASE("selection walk visits every choice") {
  std::vector<IntPoly> rows{parse_poly("x"), parse_poly("x - 1"), parse_poly("x - 2")};
  ValuationMatrix m(rows, {2}, {3}, 4);
  std::vector<std::vector<std::size_t>> slots{{0, 1}, {2}};
  std::size_t count = 0;
  for_each_selection(m, slots, [&](std::span<const int> choice, std::span<const std::uint16_t> e) {
    ++count;
    std::vector<IntPoly> sub;
    for (std::size_t s = 0; s < choice.size(); ++s)
      if (choice[s] >= 0) sub.push_back(rows[slots[s][choice[s]]]);
    unsigned want = sub.empty() ? 0 : fixed_divisor_valuation(product(sub), 2);
    CHECK(e[0] == want);
  });
  CHECK(count == 6);
}

TEST_CASE("bounds") {
  std::vector<IntPoly> rows{parse_poly("x")};
  CHECK_THROWS_AS(ValuationMatrix(rows, {2}, {0xFFFF}, 2), BoundError);
}
