#include "qcount/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "qcount/kernels/perm16.hpp"

namespace qcount {

namespace {

class VisitedSet {
public:
    explicit VisitedSet(std::uint64_t size) : words_((size + 63) / 64, 0) {}

    // Returns true if `i` was not yet marked.
    bool mark(std::uint64_t i) {
        std::uint64_t& word = words_[i >> 6];
        const std::uint64_t bit = std::uint64_t{1} << (i & 63);
        if (word & bit) return false;
        word |= bit;
        return true;
    }
    bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

private:
    std::vector<std::uint64_t> words_;
};

std::vector<std::uint64_t> seed_order(std::uint64_t total, const std::optional<std::uint64_t>& seed) {
    std::vector<std::uint64_t> order(total);
    std::iota(order.begin(), order.end(), std::uint64_t{0});
    if (seed) {
        std::mt19937_64 engine(*seed);
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[static_cast<std::size_t>(engine() % i)]);
    }
    return order;
}

}  // namespace

OrbitReport brute_force_count(Int n, const Permutation& sigma, const OracleOptions& options) {
    if (options.max_n < 1 || options.max_n > kOracleHardLimit) {
        throw std::invalid_argument("brute_force_count: max_n must be in 1.." +
                                    std::to_string(kOracleHardLimit));
    }
    if (n < 1) throw std::invalid_argument("brute_force_count: n must be >= 1");
    if (n > options.max_n) {
        throw std::out_of_range("brute_force_count: n = " + std::to_string(n) +
                                " exceeds the oracle limit " + std::to_string(options.max_n));
    }
    if (sigma.size() != n || !is_n_cycle(sigma))
        throw std::invalid_argument("brute_force_count: sigma must be an n-cycle on n points");

    const kernels::KernelSet& k = options.kernels ? *options.kernels : kernels::active_kernels();
    const int points = static_cast<int>(n);
    const kernels::RankWeights weights = kernels::make_rank_weights(points);

    kernels::Perm16 cycle = kernels::Perm16::identity();
    for (int i = 0; i < points; ++i) cycle.b[i] = static_cast<std::uint8_t>(sigma(i + 1) - 1);

    std::uint64_t total = 1;
    for (int i = 2; i <= points; ++i) total *= static_cast<std::uint64_t>(i);

    VisitedSet visited(total);
    std::vector<kernels::Perm16> queue;
    OrbitReport report;
    report.n = n;

    for (std::uint64_t start : seed_order(total, options.exploration_seed)) {
        if (!visited.mark(start)) continue;
        queue.clear();
        queue.push_back(kernels::unrank(start, weights));
        kernels::Expansion step;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            k.expand(queue[head], cycle, weights, step);
            if (visited.mark(step.left_rank)) queue.push_back(step.left);
            if (visited.mark(step.right_rank)) queue.push_back(step.right);
        }
        report.class_sizes.push_back(queue.size());
        // Rank 0 is the identity.
        if (report.identity_class_size == 0 && visited.test(0)) report.identity_class_size = queue.size();
    }

    std::sort(report.class_sizes.begin(), report.class_sizes.end());
    report.class_count = report.class_sizes.size();
    return report;
}

}  // namespace qcount
