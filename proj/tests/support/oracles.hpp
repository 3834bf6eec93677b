#pragma once

// Independent reference computations used only by tests. None of these call
// into the library code paths they are compared against.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qcount::reference {

using Big = boost::multiprecision::cpp_int;

inline std::int64_t naive_gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

inline std::int64_t count_coprime(std::int64_t m) {
    std::int64_t c = 0;
    for (std::int64_t x = 1; x <= m; ++x) c += naive_gcd(x, m) == 1;
    return c;
}

inline std::vector<std::int64_t> naive_divisors(std::int64_t n) {
    std::vector<std::int64_t> d;
    for (std::int64_t t = 1; t <= n; ++t)
        if (n % t == 0) d.push_back(t);
    return d;
}

// Burnside's lemma for the action (a, b) . x = sigma^a x sigma^-b of Z_n x Z_n on
// S_n. A pair fixes x iff x conjugates sigma^-b to sigma^a, possible only when
// gcd(a, n) = gcd(b, n) = d; then there are |C(sigma^a)| = (n/d)^d d! such x.
inline Big burnside_class_count(std::int64_t n) {
    Big sum = 0;
    for (std::int64_t d : naive_divisors(n)) {
        const std::int64_t cycle_len = n / d;
        const std::int64_t pairs = count_coprime(cycle_len) * count_coprime(cycle_len);
        Big centralizer = boost::multiprecision::pow(Big(cycle_len), static_cast<unsigned>(d));
        for (std::int64_t i = 2; i <= d; ++i) centralizer *= i;
        sum += centralizer * pairs;
    }
    return sum / (Big(n) * n);
}

// Vertex set written directly as {<k, (m k mod n) or n> : k | n, gcd(m, n) = 1}.
inline std::set<std::pair<std::int64_t, std::int64_t>> closed_form_vertices(std::int64_t n) {
    std::set<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t k : naive_divisors(n)) {
        for (std::int64_t m = 1; m <= n; ++m) {
            if (naive_gcd(m, n) != 1) continue;
            std::int64_t l = (m * k) % n;
            out.insert({k, l == 0 ? n : l});
        }
    }
    return out;
}

// Lexicographic rank of every permutation of {0..n-1}, by enumeration.
inline std::vector<std::vector<std::uint8_t>> permutations_in_lex_order(int n) {
    std::vector<std::uint8_t> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), std::uint8_t{0});
    std::vector<std::vector<std::uint8_t>> all;
    do {
        all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return all;
}

// Known class counts for n = 2..19 (index n - 2).
inline const std::vector<Big>& reference_class_counts() {
    static const std::vector<Big> table = {
        Big(1),
        Big(2),
        Big(3),
        Big(8),
        Big(24),
        Big(108),
        Big(640),
        Big(4492),
        Big(36336),
        Big(329900),
        Big(3326788),
        Big(36846288),
        Big(444790512),
        Big("5811886656"),
        Big("81729688428"),
        Big("1230752346368"),
        Big("19760413251956"),
        Big("336967037143596"),
    };
    return table;
}

}  // namespace qcount::reference
