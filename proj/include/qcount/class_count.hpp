#pragma once

#include <map>
#include <vector>

#include "qcount/big_count.hpp"
#include "qcount/numtheory.hpp"

namespace qcount {

/// Memoized values of h(n, k) for the divisors k of a fixed n.
///
/// h(n, 1) = 1 and, for k > 1,
///
///     h(n, k) = ( (k-1)! (n/k)^(k-1) - sum_{r | k, r < k} r tau(n, k, r) h(n, r) ) / k
///
/// The division is checked to be exact and the numerator nonnegative; a
/// violation throws std::logic_error since it can only come from a bug.
/// h depends on the level k only, never on the residue coordinate.
///
/// Not thread-safe: the memo is filled lazily. Use one instance per thread.
class LevelWeights {
public:
    explicit LevelWeights(Int n);

    Int order() const { return n_; }

    // Throws std::invalid_argument if k does not divide the order.
    const BigCount& at(Int k);

private:
    Int n_;
    std::map<Int, BigCount> memo_;
};

// h(n, k) with a fresh memo.
BigCount h_value(Int n, Int k);

struct MatrixColumn {
    Int divisor = 1;
    Int phi = 1;        // euler_phi(n / divisor)
    BigCount h;         // h(n, divisor)
    BigCount product;   // phi * h
};

// The 4 x q working matrix: one column per divisor of n, ascending.
struct CountMatrix {
    Int n = 1;
    std::vector<MatrixColumn> columns;

    // Sum of the product row.
    BigCount total() const;
};

CountMatrix count_matrix(Int n);

// Number of classes as the sum over divisors k of h(n, k) * euler_phi(n / k).
BigCount count_classes(Int n);

// Same number as a sum of h(n, k) over every vertex <k, l> of the built graph.
BigCount count_classes_via_vertices(Int n);

}  // namespace qcount
