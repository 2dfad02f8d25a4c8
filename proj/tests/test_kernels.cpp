#include <random>

#include "doctest.h"
#include "intz/kernels.hpp"

using namespace intz;
using namespace intz::kernels;

TEST_CASE("every available ISA matches the scalar reference") {
  std::mt19937_64 rng(19);
  const auto& ref = scalar_kernels();
  auto isas = available_isas();
  CHECK(std::find(isas.begin(), isas.end(), Isa::Scalar) != isas.end());
  for (Isa isa : isas) {
    const auto& k = kernels_for(isa);
    const std::string name = k.name;
    CAPTURE(name);
    for (std::size_t n : {0, 1, 7, 8, 15, 16, 17, 31, 33, 64, 100, 257, 1000}) {
      for (int t = 0; t < 20; ++t) {
        std::vector<std::uint16_t> a(n), b(n), d1(n), d2(n);
        const bool near_top = t % 3 == 0;
        for (std::size_t i = 0; i < n; ++i) {
          a[i] = near_top ? static_cast<std::uint16_t>(0xFFFF - rng() % 64) : static_cast<std::uint16_t>(rng() % 9);
          b[i] = near_top ? static_cast<std::uint16_t>(rng() % 0x10000) : static_cast<std::uint16_t>(rng() % 9);
        }
        CHECK(k.add_min(d1.data(), a.data(), b.data(), n) == ref.add_min(d2.data(), a.data(), b.data(), n));
        CHECK(d1 == d2);
        CHECK(k.min(a.data(), n) == ref.min(a.data(), n));
      }
    }
  }
}

TEST_CASE("scalar semantics") {
  const auto& k = scalar_kernels();
  std::vector<std::uint16_t> a{1, 0xFFFF, 3}, b{2, 5, 0}, d(3);
  CHECK(k.add_min(d.data(), a.data(), b.data(), 3) == 3);
  CHECK(d == std::vector<std::uint16_t>{3, 0xFFFF, 3});
  CHECK(k.min(a.data(), 0) == 0xFFFF);
}

TEST_CASE("override selects the requested set") {
  const Isa before = active().isa;
  set_active(Isa::Scalar);
  CHECK(active().isa == Isa::Scalar);
  set_active(before);
  CHECK(active().isa == before);
}
