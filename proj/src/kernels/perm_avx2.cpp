// Built with -mavx2 -mpopcnt; reached only through the dispatcher after a CPU
// feature check. vpshufb shuffles within 128-bit lanes, so one 256-bit register
// carries both neighbours of alpha: low lane sigma o alpha, high lane alpha o sigma.
#include <immintrin.h>

#include "kernels_internal.hpp"

namespace qcount::kernels::detail {

namespace {

inline __m128i load(const Perm16& p) { return _mm_load_si128(reinterpret_cast<const __m128i*>(&p.b)); }
inline void store(Perm16& p, __m128i v) { _mm_store_si128(reinterpret_cast<__m128i*>(&p.b), v); }

inline std::uint64_t rank_vec(__m128i v, const RankWeights& w) {
    const auto* weight = reinterpret_cast<const std::uint64_t*>(&w.w);
    std::uint64_t rank = 0;
    for (int i = 0; i + 1 < w.n; ++i) {
        __m128i pivot = _mm_shuffle_epi8(v, _mm_set1_epi8(static_cast<char>(i)));
        unsigned less = static_cast<unsigned>(_mm_movemask_epi8(_mm_cmpgt_epi8(pivot, v)));
        less &= (0xFFFEu << i) & 0xFFFFu;
        rank += static_cast<std::uint64_t>(__builtin_popcount(less)) * weight[i];
    }
    return rank;
}

void compose_avx2(const Perm16& outer, const Perm16& inner, Perm16& out) {
    store(out, _mm_shuffle_epi8(load(outer), load(inner)));
}

std::uint64_t rank_avx2(const Perm16& p, const RankWeights& w) { return rank_vec(load(p), w); }

void expand_avx2(const Perm16& alpha, const Perm16& sigma, const RankWeights& w, Expansion& out) {
    const __m128i a = load(alpha);
    const __m128i s = load(sigma);
    const __m256i tables = _mm256_set_m128i(a, s);
    const __m256i index = _mm256_set_m128i(s, a);
    const __m256i both = _mm256_shuffle_epi8(tables, index);
    store(out.left, _mm256_castsi256_si128(both));
    store(out.right, _mm256_extracti128_si256(both, 1));

    const auto* weight = reinterpret_cast<const std::uint64_t*>(&w.w);
    std::uint64_t left_rank = 0;
    std::uint64_t right_rank = 0;
    for (int i = 0; i + 1 < w.n; ++i) {
        __m256i pivot = _mm256_shuffle_epi8(both, _mm256_set1_epi8(static_cast<char>(i)));
        auto less = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpgt_epi8(pivot, both)));
        const unsigned after = (0xFFFEu << i) & 0xFFFFu;
        less &= after | (after << 16);
        left_rank += static_cast<std::uint64_t>(__builtin_popcount(less & 0xFFFFu)) * weight[i];
        right_rank += static_cast<std::uint64_t>(__builtin_popcount(less >> 16)) * weight[i];
    }
    out.left_rank = left_rank;
    out.right_rank = right_rank;
}

}  // namespace

const KernelSet& avx2_kernels() {
    static const KernelSet set{"avx2", compose_avx2, rank_avx2, expand_avx2};
    return set;
}

}  // namespace qcount::kernels::detail
