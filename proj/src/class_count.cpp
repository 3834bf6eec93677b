#include "qcount/class_count.hpp"

#include <stdexcept>
#include <string>

#include "qcount/gamma_graph.hpp"

namespace qcount {

namespace {

void require_order(Int n, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + ": order must be >= 1");
}

}  // namespace

LevelWeights::LevelWeights(Int n) : n_(n) { require_order(n, "LevelWeights"); }

const BigCount& LevelWeights::at(Int k) {
    if (k < 1 || n_ % k != 0) {
        throw std::invalid_argument("h: " + std::to_string(k) + " does not divide " +
                                    std::to_string(n_));
    }
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;

    BigCount value = 1;
    if (k > 1) {
        BigCount numerator = 1;
        for (Int i = 2; i <= k - 1; ++i) numerator *= i;
        numerator *= boost::multiprecision::pow(BigCount(n_ / k), static_cast<unsigned>(k - 1));

        for (Int r : divisors(k)) {
            if (r == k) break;
            numerator -= BigCount(r) * tau(n_, k, r) * at(r);
        }
        if (numerator < 0) {
            throw std::logic_error("h(" + std::to_string(n_) + "," + std::to_string(k) +
                                   "): negative numerator");
        }
        BigCount remainder;
        boost::multiprecision::divide_qr(numerator, BigCount(k), value, remainder);
        if (remainder != 0) {
            throw std::logic_error("h(" + std::to_string(n_) + "," + std::to_string(k) +
                                   "): numerator not divisible by k");
        }
    }
    return memo_.emplace(k, std::move(value)).first->second;
}

BigCount h_value(Int n, Int k) {
    LevelWeights weights(n);
    return weights.at(k);
}

BigCount CountMatrix::total() const {
    BigCount sum = 0;
    for (const auto& c : columns) sum += c.product;
    return sum;
}

CountMatrix count_matrix(Int n) {
    require_order(n, "count_matrix");
    LevelWeights weights(n);
    CountMatrix m;
    m.n = n;
    for (Int k : divisors(n)) {
        MatrixColumn col;
        col.divisor = k;
        col.phi = euler_phi(n / k);
        col.h = weights.at(k);
        col.product = col.h * col.phi;
        m.columns.push_back(std::move(col));
    }
    return m;
}

BigCount count_classes(Int n) {
    require_order(n, "count_classes");
    return count_matrix(n).total();
}

BigCount count_classes_via_vertices(Int n) {
    require_order(n, "count_classes_via_vertices");
    const GammaGraph g = build_gamma(n);
    LevelWeights weights(n);
    BigCount sum = 0;
    for (const Vertex& v : g.vertices()) sum += weights.at(v.k);
    return sum;
}

}  // namespace qcount
