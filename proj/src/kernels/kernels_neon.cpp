#include <arm_neon.h>

#include <algorithm>

#include "kernels_internal.hpp"

namespace intz::kernels::detail {
namespace {

std::uint16_t add_min_neon(std::uint16_t* dst, const std::uint16_t* a, const std::uint16_t* b,
                           std::size_t n) {
  uint16x8_t acc = vdupq_n_u16(0xFFFF);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    uint16x8_t s = vqaddq_u16(vld1q_u16(a + i), vld1q_u16(b + i));
    vst1q_u16(dst + i, s);
    acc = vminq_u16(acc, s);
  }
  std::uint16_t m = vminvq_u16(acc);
  for (; i < n; ++i) {
    unsigned s = unsigned(a[i]) + unsigned(b[i]);
    dst[i] = static_cast<std::uint16_t>(s > 0xFFFF ? 0xFFFF : s);
    m = std::min(m, dst[i]);
  }
  return m;
}

std::uint16_t min_neon(const std::uint16_t* src, std::size_t n) {
  uint16x8_t acc = vdupq_n_u16(0xFFFF);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) acc = vminq_u16(acc, vld1q_u16(src + i));
  std::uint16_t m = vminvq_u16(acc);
  for (; i < n; ++i) m = std::min(m, src[i]);
  return m;
}

constexpr KernelSet kNeon{Isa::Neon, "neon", add_min_neon, min_neon};

}  // namespace

const KernelSet* neon_kernels() { return &kNeon; }

}  // namespace intz::kernels::detail
