#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels_internal.hpp"

namespace qcount::kernels {

std::vector<const KernelSet*> available_kernels() {
    std::vector<const KernelSet*> sets{&scalar_kernels()};
#if defined(QCOUNT_HAVE_X86_KERNELS)
    __builtin_cpu_init();
    const bool popcnt = __builtin_cpu_supports("popcnt");
    if (popcnt && __builtin_cpu_supports("sse4.2") && __builtin_cpu_supports("ssse3"))
        sets.push_back(&detail::sse42_kernels());
    if (popcnt && __builtin_cpu_supports("avx2")) sets.push_back(&detail::avx2_kernels());
#endif
#if defined(QCOUNT_HAVE_NEON_KERNELS)
    sets.push_back(&detail::neon_kernels());
#endif
    return sets;
}

const KernelSet* find_kernels(std::string_view name) {
    for (const KernelSet* set : available_kernels())
        if (set->name == name) return set;
    return nullptr;
}

namespace {

const KernelSet& resolve_active() {
    if (const char* forced = std::getenv("QCOUNT_KERNELS"); forced != nullptr && *forced != '\0') {
        if (const KernelSet* set = find_kernels(forced)) return *set;
        throw std::invalid_argument(std::string("QCOUNT_KERNELS: unknown or unsupported kernel set '") +
                                    forced + "'");
    }
    return *available_kernels().back();
}

}  // namespace

const KernelSet& active_kernels() {
    static const KernelSet& set = resolve_active();
    return set;
}

}  // namespace qcount::kernels
