#pragma once

// Permutation kernels for the orbit oracle.
//
// A Perm16 holds a permutation of up to 16 points as 0-based byte images.
// Points n..15 are fixed (byte i holds i), which lets every kernel work on the
// full 16 bytes: byte shuffles keep the padding fixed, and padding never
// contributes to a Lehmer digit.
//
// Each KernelSet is a complete implementation of the same three operations.
// The scalar set is the reference; the vector sets must agree with it bit for
// bit (see tests/test_kernels.cpp).

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

namespace qcount::kernels {

inline constexpr int kMaxPoints = 16;

struct alignas(16) Perm16 {
    std::array<std::uint8_t, kMaxPoints> b{};

    static Perm16 identity() {
        Perm16 p;
        for (int i = 0; i < kMaxPoints; ++i) p.b[i] = static_cast<std::uint8_t>(i);
        return p;
    }
    bool operator==(const Perm16&) const = default;
};

// weights[i] = (n - 1 - i)! for i < n and 0 otherwise, so that
// rank(p) = sum_i digit_i(p) * weights[i] is the lexicographic rank in [0, n!).
struct alignas(32) RankWeights {
    std::array<std::uint64_t, kMaxPoints> w{};
    int n = 0;
};

RankWeights make_rank_weights(int n);

// Both one-step neighbours of alpha under a fixed cycle sigma, with ranks:
//   left  = sigma o alpha   (left[i]  = sigma[alpha[i]])
//   right = alpha o sigma   (right[i] = alpha[sigma[i]])
struct Expansion {
    Perm16 left;
    Perm16 right;
    std::uint64_t left_rank = 0;
    std::uint64_t right_rank = 0;
};

struct KernelSet {
    std::string_view name;
    // out[i] = outer[inner[i]]
    void (*compose)(const Perm16& outer, const Perm16& inner, Perm16& out);
    std::uint64_t (*rank)(const Perm16& p, const RankWeights& w);
    void (*expand)(const Perm16& alpha, const Perm16& sigma, const RankWeights& w,
                   Expansion& out);
};

// Inverse of rank for the scalar path; the oracle only unranks class seeds.
Perm16 unrank(std::uint64_t rank, const RankWeights& w);

const KernelSet& scalar_kernels();

// Every kernel set compiled in and supported by the running CPU, scalar first.
std::vector<const KernelSet*> available_kernels();

// Lookup among available_kernels(); nullptr if unknown or unsupported.
const KernelSet* find_kernels(std::string_view name);

// Widest supported set, unless the QCOUNT_KERNELS environment variable names
// an available one. Resolved once per process.
const KernelSet& active_kernels();

}  // namespace qcount::kernels
