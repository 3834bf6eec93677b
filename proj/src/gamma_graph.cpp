#include "qcount/gamma_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qcount {

namespace {

// Residue of x mod n written in {1..n}.
Int display_residue(Int x, Int n) {
    Int r = x % n;
    return r == 0 ? n : r;
}

void require_divides(Int d, Int n, const char* what) {
    if (d < 1 || n % d != 0) {
        throw std::invalid_argument(std::string(what) + ": " + std::to_string(d) +
                                    " does not divide " + std::to_string(n));
    }
}

}  // namespace

std::optional<std::size_t> GammaGraph::index_of(const Vertex& v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::span<const std::size_t> GammaGraph::successors(std::size_t index) const {
    if (index >= vertices_.size()) throw std::out_of_range("GammaGraph::successors: bad index");
    return std::span<const std::size_t>(succ_).subspan(offsets_[index],
                                                       offsets_[index + 1] - offsets_[index]);
}

Int GammaGraph::level_size(Int k) const {
    auto lo = std::lower_bound(vertices_.begin(), vertices_.end(), Vertex{k, 0});
    auto hi = std::lower_bound(vertices_.begin(), vertices_.end(), Vertex{k + 1, 0});
    return static_cast<Int>(hi - lo);
}

std::vector<Vertex> GammaGraph::minimal_vertices() const {
    std::vector<bool> has_in(vertices_.size(), false);
    for (std::size_t s : succ_) has_in[s] = true;
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (!has_in[i]) out.push_back(vertices_[i]);
    return out;
}

std::vector<Vertex> GammaGraph::maximal_vertices() const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (offsets_[i] == offsets_[i + 1]) out.push_back(vertices_[i]);
    return out;
}

GammaGraph build_gamma(Int n) {
    if (n < 1) throw std::invalid_argument("build_gamma: order must be >= 1");

    std::set<Vertex> seen;
    std::deque<Vertex> queue;
    for (Int m = 1; m <= n; ++m) {
        if (gcd(m, n) == 1 && seen.insert({1, display_residue(m, n)}).second)
            queue.push_back({1, display_residue(m, n)});
    }

    std::vector<Arc> arcs;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Int p : distinct_prime_factors(n / v.k)) {
            Vertex target{p * v.k, display_residue(p * v.l, n)};
            arcs.push_back({v, target, p});
            if (seen.insert(target).second) queue.push_back(target);
        }
    }

    GammaGraph g;
    g.n_ = n;
    g.vertices_.assign(seen.begin(), seen.end());
    std::sort(arcs.begin(), arcs.end());
    g.arcs_ = std::move(arcs);

    g.offsets_.assign(g.vertices_.size() + 1, 0);
    for (const Arc& a : g.arcs_) ++g.offsets_[*g.index_of(a.from) + 1];
    for (std::size_t i = 1; i < g.offsets_.size(); ++i) g.offsets_[i] += g.offsets_[i - 1];
    g.succ_.reserve(g.arcs_.size());
    // arcs_ is sorted by source, so successors land in CSR order directly.
    for (const Arc& a : g.arcs_) g.succ_.push_back(*g.index_of(a.to));
    return g;
}

bool is_vertex(Int n, Int k, Int l) {
    if (n < 1 || k < 1 || k > n || l < 1 || l > n || n % k != 0) return false;
    if (k == n) return l == n;
    for (Int m = 1; m <= n; ++m) {
        if (gcd(m, n) == 1 && display_residue(m * k, n) == l) return true;
    }
    return false;
}

bool reachable(const GammaGraph& g, const Vertex& from, const Vertex& to, PathMode mode) {
    auto src = g.index_of(from);
    auto dst = g.index_of(to);
    if (!src || !dst) throw std::invalid_argument("reachable: vertex not in graph");
    if (*src == *dst && mode == PathMode::allow_empty) return true;

    std::vector<bool> visited(g.vertices().size(), false);
    std::vector<std::size_t> stack(g.successors(*src).begin(), g.successors(*src).end());
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        if (v == *dst) return true;
        if (visited[v]) continue;
        visited[v] = true;
        for (std::size_t w : g.successors(v))
            if (!visited[w]) stack.push_back(w);
    }
    return false;
}

Int tau(Int n, Int k, Int r) {
    if (n < 1) throw std::invalid_argument("tau: order must be >= 1");
    require_divides(k, n, "tau: k");
    require_divides(r, k, "tau: r");
    if (r >= k) throw std::invalid_argument("tau: requires r < k");

    // Level r is {s in 1..n : gcd(s, n) = r} = {r u : 1 <= u <= n/r, gcd(u, n/r) = 1}.
    const Int step = k / r;
    const Int target = k % n;
    const Int cofactor = n / r;
    Int count = 0;
    for (Int u = 1; u <= cofactor; ++u) {
        if (gcd(u, cofactor) != 1) continue;
        Int s = r * u;
        if ((s % n) * step % n == target) ++count;
    }
    return count;
}

Int tau_by_search(const GammaGraph& g, Int k, Int r) {
    const Int n = g.order();
    require_divides(k, n, "tau_by_search: k");
    require_divides(r, k, "tau_by_search: r");
    if (r >= k) throw std::invalid_argument("tau_by_search: requires r < k");

    const Vertex top{k, display_residue(k, n)};
    Int count = 0;
    for (const Vertex& v : g.vertices()) {
        if (v.k == r && reachable(g, v, top, PathMode::nonempty)) ++count;
    }
    return count;
}

Int level_count(Int n, Int k) {
    if (n < 1) throw std::invalid_argument("level_count: order must be >= 1");
    require_divides(k, n, "level_count: k");
    return build_gamma(n).level_size(k);
}

std::string to_dot(const GammaGraph& g) {
    auto id = [](const Vertex& v) {
        return "\"" + std::to_string(v.k) + "_" + std::to_string(v.l) + "\"";
    };
    std::ostringstream os;
    os << "digraph Gamma_" << g.order() << " {\n";
    for (const Vertex& v : g.vertices()) {
        os << "  " << id(v) << " [label=\"⟨" << v.k << "," << v.l << "⟩\"];\n";
    }
    for (const Arc& a : g.arcs()) {
        os << "  " << id(a.from) << " -> " << id(a.to) << " [label=\"" << a.prime << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace qcount
