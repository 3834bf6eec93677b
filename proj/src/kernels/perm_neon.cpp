// AArch64 only. vqtbl1q_u8 is the NEON counterpart of pshufb for 16-byte tables.
#include <arm_neon.h>

#include "kernels_internal.hpp"

namespace qcount::kernels::detail {

namespace {

inline uint8x16_t load(const Perm16& p) { return vld1q_u8(reinterpret_cast<const std::uint8_t*>(&p.b)); }
inline void store(Perm16& p, uint8x16_t v) { vst1q_u8(reinterpret_cast<std::uint8_t*>(&p.b), v); }

inline std::uint64_t rank_vec(uint8x16_t v, const RankWeights& w) {
    static const std::uint8_t kIota[16] = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15};
    const uint8x16_t iota = vld1q_u8(kIota);
    const uint8x16_t one = vdupq_n_u8(1);
    const auto* weight = reinterpret_cast<const std::uint64_t*>(&w.w);
    std::uint64_t rank = 0;
    for (int i = 0; i + 1 < w.n; ++i) {
        const uint8x16_t lane = vdupq_n_u8(static_cast<std::uint8_t>(i));
        const uint8x16_t pivot = vqtbl1q_u8(v, lane);
        const uint8x16_t less = vcltq_u8(v, pivot);
        const uint8x16_t after = vcgtq_u8(iota, lane);
        const std::uint8_t digit = vaddvq_u8(vandq_u8(vandq_u8(less, after), one));
        rank += static_cast<std::uint64_t>(digit) * weight[i];
    }
    return rank;
}

void compose_neon(const Perm16& outer, const Perm16& inner, Perm16& out) {
    store(out, vqtbl1q_u8(load(outer), load(inner)));
}

std::uint64_t rank_neon(const Perm16& p, const RankWeights& w) { return rank_vec(load(p), w); }

void expand_neon(const Perm16& alpha, const Perm16& sigma, const RankWeights& w, Expansion& out) {
    const uint8x16_t a = load(alpha);
    const uint8x16_t s = load(sigma);
    const uint8x16_t left = vqtbl1q_u8(s, a);
    const uint8x16_t right = vqtbl1q_u8(a, s);
    store(out.left, left);
    store(out.right, right);
    out.left_rank = rank_vec(left, w);
    out.right_rank = rank_vec(right, w);
}

}  // namespace

const KernelSet& neon_kernels() {
    static const KernelSet set{"neon", compose_neon, rank_neon, expand_neon};
    return set;
}

}  // namespace qcount::kernels::detail
