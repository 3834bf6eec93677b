#include "qcount/permutation.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

namespace qcount {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = size();
    if (n < 1) throw std::invalid_argument("Permutation: empty image list");
    std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
    for (int v : images_) {
        if (v < 1 || v > n || hit[static_cast<std::size_t>(v)])
            throw std::invalid_argument("Permutation: images are not a bijection on {1..n}");
        hit[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 1) throw std::invalid_argument("Permutation::identity: n must be >= 1");
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> images(static_cast<std::size_t>(a.size()));
    for (int i = 1; i <= a.size(); ++i) images[static_cast<std::size_t>(i - 1)] = a(b(i));
    return Permutation(std::move(images));
}

Permutation sigma_cycle(Int n) {
    if (n < 1) throw std::invalid_argument("sigma_cycle: n must be >= 1");
    std::vector<int> images(static_cast<std::size_t>(n));
    for (Int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = static_cast<int>((i + 1) % n + 1);
    return Permutation(std::move(images));
}

bool is_n_cycle(const Permutation& p) {
    int len = 1;
    for (int x = p(1); x != 1; x = p(x)) ++len;
    return len == p.size();
}

Permutation random_n_cycle(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_n_cycle: n must be >= 1");
    std::mt19937_64 engine(seed);
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    // Fisher-Yates with raw engine output; std::shuffle's draws are library-specific.
    for (std::size_t i = order.size() - 1; i > 0; --i) {
        std::size_t j = static_cast<std::size_t>(engine() % (i + 1));
        std::swap(order[i], order[j]);
    }
    std::vector<int> images(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        images[static_cast<std::size_t>(order[i] - 1)] = order[(i + 1) % order.size()];
    return Permutation(std::move(images));
}

}  // namespace qcount
