#include "qcount/kernels/perm16.hpp"

namespace qcount::kernels {

namespace {

void compose_scalar(const Perm16& outer, const Perm16& inner, Perm16& out) {
    Perm16 r;
    for (int i = 0; i < kMaxPoints; ++i) r.b[i] = outer.b[inner.b[i]];
    out = r;
}

std::uint64_t rank_scalar(const Perm16& p, const RankWeights& w) {
    std::uint64_t rank = 0;
    for (int i = 0; i < w.n; ++i) {
        std::uint64_t digit = 0;
        for (int j = i + 1; j < w.n; ++j) digit += p.b[j] < p.b[i];
        rank += digit * w.w[i];
    }
    return rank;
}

void expand_scalar(const Perm16& alpha, const Perm16& sigma, const RankWeights& w,
                   Expansion& out) {
    compose_scalar(sigma, alpha, out.left);
    compose_scalar(alpha, sigma, out.right);
    out.left_rank = rank_scalar(out.left, w);
    out.right_rank = rank_scalar(out.right, w);
}

}  // namespace

RankWeights make_rank_weights(int n) {
    RankWeights w;
    w.n = n;
    std::uint64_t f = 1;
    for (int i = n - 1; i >= 0; --i) {
        w.w[i] = f;
        f *= static_cast<std::uint64_t>(n - i);
    }
    return w;
}

Perm16 unrank(std::uint64_t rank, const RankWeights& w) {
    Perm16 p = Perm16::identity();
    std::array<std::uint8_t, kMaxPoints> pool{};
    for (int i = 0; i < w.n; ++i) pool[i] = static_cast<std::uint8_t>(i);
    int remaining = w.n;
    for (int i = 0; i < w.n; ++i) {
        auto digit = static_cast<int>(rank / w.w[i]);
        rank %= w.w[i];
        p.b[i] = pool[digit];
        for (int j = digit; j + 1 < remaining; ++j) pool[j] = pool[j + 1];
        --remaining;
    }
    return p;
}

const KernelSet& scalar_kernels() {
    static const KernelSet set{"scalar", compose_scalar, rank_scalar, expand_scalar};
    return set;
}

}  // namespace qcount::kernels
