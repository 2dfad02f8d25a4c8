#include <algorithm>

#include "kernels_internal.hpp"

namespace intz::kernels {
namespace {

std::uint16_t add_min_scalar(std::uint16_t* dst, const std::uint16_t* a, const std::uint16_t* b,
                             std::size_t n) {
  std::uint16_t m = 0xFFFF;
  for (std::size_t i = 0; i < n; ++i) {
    unsigned s = unsigned(a[i]) + unsigned(b[i]);
    dst[i] = static_cast<std::uint16_t>(s > 0xFFFF ? 0xFFFF : s);
    m = std::min(m, dst[i]);
  }
  return m;
}

std::uint16_t min_scalar(const std::uint16_t* src, std::size_t n) {
  std::uint16_t m = 0xFFFF;
  for (std::size_t i = 0; i < n; ++i) m = std::min(m, src[i]);
  return m;
}

constexpr KernelSet kScalar{Isa::Scalar, "scalar", add_min_scalar, min_scalar};

}  // namespace

const KernelSet& scalar_kernels() { return kScalar; }

}  // namespace intz::kernels
