#include <atomic>
#include <cstdlib>
#include <string>

#include "intz/bigint.hpp"
#include "kernels_internal.hpp"

namespace intz::kernels {

namespace detail {
#ifndef INTZ_HAVE_AVX2
const KernelSet* avx2_kernels() { return nullptr; }
#endif
#ifndef INTZ_HAVE_NEON
const KernelSet* neon_kernels() { return nullptr; }
#endif
}  // namespace detail

namespace {

bool cpu_has_avx2() {
#if defined(INTZ_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelSet* lookup(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return &scalar_kernels();
    case Isa::Avx2:
      return cpu_has_avx2() ? detail::avx2_kernels() : nullptr;
    case Isa::Neon:
      return detail::neon_kernels();
  }
  return nullptr;
}

const KernelSet* pick_default() {
  if (const char* env = std::getenv("INTZ_KERNELS")) {
    std::string want(env);
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
      if (want == isa_name(isa)) {
        if (const KernelSet* k = lookup(isa)) return k;
      }
    }
  }
  for (Isa isa : {Isa::Avx2, Isa::Neon}) {
    if (const KernelSet* k = lookup(isa)) return k;
  }
  return &scalar_kernels();
}

std::atomic<const KernelSet*>& slot() {
  static std::atomic<const KernelSet*> current{pick_default()};
  return current;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "unknown";
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
    if (lookup(isa)) out.push_back(isa);
  }
  return out;
}

const KernelSet& kernels_for(Isa isa) {
  const KernelSet* k = lookup(isa);
  if (!k) throw DomainError("kernel set '" + std::string(isa_name(isa)) + "' not available");
  return *k;
}

const KernelSet& active() { return *slot().load(std::memory_order_relaxed); }

void set_active(Isa isa) { slot().store(&kernels_for(isa), std::memory_order_relaxed); }

}  // namespace intz::kernels
