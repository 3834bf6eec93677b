#pragma once

#include "qcount/kernels/perm16.hpp"

namespace qcount::kernels::detail {

#if defined(QCOUNT_HAVE_X86_KERNELS)
const KernelSet& sse42_kernels();
const KernelSet& avx2_kernels();
#endif

#if defined(QCOUNT_HAVE_NEON_KERNELS)
const KernelSet& neon_kernels();
#endif

}  // namespace qcount::kernels::detail
