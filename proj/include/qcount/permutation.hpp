#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qcount/numtheory.hpp"

namespace qcount {

// Bijection on {1..n}; images()[i - 1] is the image of i.
class Permutation {
public:
    // Throws std::invalid_argument unless `images` is a bijection on {1..size}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    std::span<const int> images() const { return images_; }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

// i -> a(b(i)): apply b first, then a. Throws on size mismatch.
Permutation compose(const Permutation& a, const Permutation& b);

// The cycle 1 -> 2 -> ... -> n -> 1.
Permutation sigma_cycle(Int n);

// True iff p consists of one cycle through all points (the 1-point identity counts).
bool is_n_cycle(const Permutation& p);

// A uniformly chosen n-cycle drawn from a mt19937_64 stream seeded with `seed`.
// The same seed gives the same cycle on every platform.
Permutation random_n_cycle(int n, std::uint64_t seed);

}  // namespace qcount
