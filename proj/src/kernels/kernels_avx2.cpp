#include <immintrin.h>

#include <algorithm>

#include "kernels_internal.hpp"

namespace intz::kernels::detail {
namespace {

inline std::uint16_t hmin_epu16(__m256i v) {
  __m128i m = _mm_min_epu16(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
  // phminposuw returns the minimum in the low word.
  return static_cast<std::uint16_t>(_mm_cvtsi128_si32(_mm_minpos_epu16(m)) & 0xFFFF);
}

std::uint16_t add_min_avx2(std::uint16_t* dst, const std::uint16_t* a, const std::uint16_t* b,
                           std::size_t n) {
  __m256i acc = _mm256_set1_epi16(-1);
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i s = _mm256_adds_epu16(va, vb);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), s);
    acc = _mm256_min_epu16(acc, s);
  }
  std::uint16_t m = hmin_epu16(acc);
  for (; i < n; ++i) {
    unsigned s = unsigned(a[i]) + unsigned(b[i]);
    dst[i] = static_cast<std::uint16_t>(s > 0xFFFF ? 0xFFFF : s);
    m = std::min(m, dst[i]);
  }
  return m;
}

std::uint16_t min_avx2(const std::uint16_t* src, std::size_t n) {
  __m256i acc = _mm256_set1_epi16(-1);
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    acc = _mm256_min_epu16(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i)));
  }
  std::uint16_t m = hmin_epu16(acc);
  for (; i < n; ++i) m = std::min(m, src[i]);
  return m;
}

constexpr KernelSet kAvx2{Isa::Avx2, "avx2", add_min_avx2, min_avx2};

}  // namespace

const KernelSet* avx2_kernels() { return &kAvx2; }

}  // namespace intz::kernels::detail
