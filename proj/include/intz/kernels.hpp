#pragma once

// Data-parallel kernels behind the subset fixed-divisor engine.
//
// A capped valuation row holds min(v_p(g(c)), cap) for the sample points c.
// Adding the rows of a subset with saturation and taking the minimum over the
// points yields v_p of the fixed divisor of the subset's product. Each ISA
// variant must agree bit-for-bit with the scalar reference.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace intz::kernels {

enum class Isa { Scalar, Avx2, Neon };

struct KernelSet {
  Isa isa;
  const char* name;
  /// dst[i] = min(a[i] + b[i], 0xFFFF); returns min over dst (0xFFFF when n == 0).
  std::uint16_t (*add_min)(std::uint16_t* dst, const std::uint16_t* a, const std::uint16_t* b,
                           std::size_t n);
  /// Minimum of src (0xFFFF when n == 0).
  std::uint16_t (*min)(const std::uint16_t* src, std::size_t n);
};

const KernelSet& scalar_kernels();

/// ISAs usable on this machine: compiled in and supported by the running CPU.
std::vector<Isa> available_isas();

/// Kernel set for an available ISA; throws DomainError otherwise.
const KernelSet& kernels_for(Isa isa);

/// Best available set, unless overridden by set_active() or INTZ_KERNELS=scalar|avx2|neon.
const KernelSet& active();

void set_active(Isa isa);

std::string_view isa_name(Isa isa);

inline std::uint16_t add_min(std::span<std::uint16_t> dst, std::span<const std::uint16_t> a,
                             std::span<const std::uint16_t> b) {
  return active().add_min(dst.data(), a.data(), b.data(), dst.size());
}

inline std::uint16_t min(std::span<const std::uint16_t> src) {
  return active().min(src.data(), src.size());
}

}  // namespace intz::kernels
