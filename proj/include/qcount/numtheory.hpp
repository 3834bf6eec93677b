#pragma once

#include <cstdint>
#include <vector>

namespace qcount {

// Machine-word integer for orders, divisors and residues. Values that must be
// positive are checked at each public entry point; counts live in BigCount.
using Int = std::int64_t;

// Greatest common divisor (division-based Euclid). Both arguments must be >= 1.
Int gcd(Int a, Int b);

// Number of x in {1..m} with gcd(x, m) == 1; euler_phi(1) == 1.
Int euler_phi(Int m);

// All positive divisors of n in strictly ascending order, 1 and n included.
std::vector<Int> divisors(Int n);

// Distinct primes dividing m, ascending. Empty for m == 1.
std::vector<Int> distinct_prime_factors(Int m);

}  // namespace qcount
