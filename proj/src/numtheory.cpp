#include "qcount/numtheory.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qcount {

namespace {

void require_positive(Int v, const char* what) {
    if (v < 1) {
        throw std::invalid_argument(std::string(what) + " must be a positive integer, got " +
                                    std::to_string(v));
    }
}

}  // namespace

Int gcd(Int a, Int b) {
    require_positive(a, "gcd: a");
    require_positive(b, "gcd: b");
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

std::vector<Int> distinct_prime_factors(Int m) {
    require_positive(m, "distinct_prime_factors: m");
    std::vector<Int> primes;
    for (Int p = 2; p <= m / p; ++p) {
        if (m % p == 0) {
            primes.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) primes.push_back(m);
    return primes;
}

Int euler_phi(Int m) {
    require_positive(m, "euler_phi: m");
    // phi(m) = m * prod (1 - 1/p)
    Int result = m;
    for (Int p : distinct_prime_factors(m)) result = result / p * (p - 1);
    return result;
}

std::vector<Int> divisors(Int n) {
    require_positive(n, "divisors: n");
    std::vector<Int> small, large;
    for (Int d = 1; d <= n / d; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace qcount
