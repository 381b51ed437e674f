#pragma once

#include "trifree/kernels.hpp"

namespace trifree::kernels::detail {

const KernelTable& scalar_table();
// Only callable when available(Isa::Avx2).
const KernelTable& avx2_table();
bool avx2_compiled();

}  // namespace trifree::kernels::detail
