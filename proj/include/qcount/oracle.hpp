#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qcount/big_count.hpp"
#include "qcount/numtheory.hpp"
#include "qcount/permutation.hpp"

namespace qcount {

namespace kernels {
struct KernelSet;
}

// The visited set needs n! bits and ranks must fit 64 bits; 12! bits is 60 MB.
inline constexpr int kOracleHardLimit = 12;

struct OracleOptions {
    // Largest n accepted; must not exceed kOracleHardLimit.
    int max_n = 9;
    // When set, class seeds are visited in a shuffled order instead of by rank.
    std::optional<std::uint64_t> exploration_seed;
    // Defaults to kernels::active_kernels().
    const kernels::KernelSet* kernels = nullptr;
};

struct OrbitReport {
    Int n = 1;
    BigCount class_count;
    // One entry per class, ascending.
    std::vector<std::uint64_t> class_sizes;
    // Size of the class containing the identity, i.e. of the cyclic group <sigma>.
    std::uint64_t identity_class_size = 0;
};

/// Partitions S_n into the classes {sigma^k beta sigma^l} by breadth-first
/// closure under beta -> sigma o beta and beta -> beta o sigma.
///
/// Throws std::out_of_range if n exceeds options.max_n and
/// std::invalid_argument if sigma is not an n-cycle on n points.
OrbitReport brute_force_count(Int n, const Permutation& sigma, const OracleOptions& options = {});

}  // namespace qcount
