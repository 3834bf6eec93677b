// Built with -msse4.2 -mpopcnt; reached only through the dispatcher after a
// CPU feature check.
#include <immintrin.h>

#include "kernels_internal.hpp"

namespace qcount::kernels::detail {

namespace {

inline __m128i load(const Perm16& p) { return _mm_load_si128(reinterpret_cast<const __m128i*>(&p.b)); }
inline void store(Perm16& p, __m128i v) { _mm_store_si128(reinterpret_cast<__m128i*>(&p.b), v); }

// Lehmer digit i = #{j > i : p[j] < p[i]}, one compare per position.
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

void compose_sse42(const Perm16& outer, const Perm16& inner, Perm16& out) {
    store(out, _mm_shuffle_epi8(load(outer), load(inner)));
}

std::uint64_t rank_sse42(const Perm16& p, const RankWeights& w) { return rank_vec(load(p), w); }

void expand_sse42(const Perm16& alpha, const Perm16& sigma, const RankWeights& w, Expansion& out) {
    const __m128i a = load(alpha);
    const __m128i s = load(sigma);
    const __m128i left = _mm_shuffle_epi8(s, a);
    const __m128i right = _mm_shuffle_epi8(a, s);
    store(out.left, left);
    store(out.right, right);
    out.left_rank = rank_vec(left, w);
    out.right_rank = rank_vec(right, w);
}

}  // namespace

const KernelSet& sse42_kernels() {
    static const KernelSet set{"sse42", compose_sse42, rank_sse42, expand_sse42};
    return set;
}

}  // namespace qcount::kernels::detail
