#pragma once

#include "intz/kernels.hpp"

namespace intz::kernels::detail {

const KernelSet* avx2_kernels();
const KernelSet* neon_kernels();

}  // namespace intz::kernels::detail
