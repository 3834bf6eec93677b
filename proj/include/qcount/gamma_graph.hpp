#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcount/numtheory.hpp"

namespace qcount {

// Vertex <k, l> of the divisor digraph. k divides n; l is a residue written in
// {1..n}, so residue 0 appears as n (the top vertex is <n, n>).
struct Vertex {
    Int k = 1;
    Int l = 1;

    auto operator<=>(const Vertex&) const = default;
};

// Arc created by multiplying both coordinates of `from` by a prime dividing n / from.k.
struct Arc {
    Vertex from;
    Vertex to;
    Int prime = 2;

    // Orders by (from, prime); `to` is determined by those two.
    auto operator<=>(const Arc&) const = default;
};

/// The digraph on pairs <k, l> generated from the units <1, m> (gcd(m, n) = 1)
/// by the rule <k, l> -> <p k, p l mod n> for every prime p dividing n / k.
///
/// Vertices are kept sorted by (k, l) and arcs by (from, prime), so two graphs
/// of the same order compare equal element by element. Immutable once built.
class GammaGraph {
public:
    Int order() const { return n_; }
    std::span<const Vertex> vertices() const { return vertices_; }
    std::span<const Arc> arcs() const { return arcs_; }

    std::optional<std::size_t> index_of(const Vertex& v) const;
    bool contains(const Vertex& v) const { return index_of(v).has_value(); }

    // Indices of the direct successors of vertices()[index], ascending by prime.
    std::span<const std::size_t> successors(std::size_t index) const;

    // Number of vertices <k, .>; zero when k does not divide the order.
    Int level_size(Int k) const;

    // Vertices with no incoming arc / no outgoing arc.
    std::vector<Vertex> minimal_vertices() const;
    std::vector<Vertex> maximal_vertices() const;

private:
    friend GammaGraph build_gamma(Int n);

    Int n_ = 1;
    std::vector<Vertex> vertices_;
    std::vector<Arc> arcs_;
    // CSR adjacency: successors of vertex i are succ_[offsets_[i] .. offsets_[i+1]).
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> succ_;
};

// Closure of the generation rules starting from the units of Z_n. Throws
// std::invalid_argument for n < 1.
GammaGraph build_gamma(Int n);

// Membership test that does not build the graph. Total: malformed input gives false.
bool is_vertex(Int n, Int k, Int l);

enum class PathMode {
    nonempty,     // strict order: at least one arc, so reachable(v, v) is false
    allow_empty,  // reflexive closure: reachable(v, v) is true
};

// True iff a directed path leads from `from` to `to`. Throws
// std::invalid_argument if either vertex is not in the graph.
bool reachable(const GammaGraph& g, const Vertex& from, const Vertex& to,
               PathMode mode = PathMode::nonempty);

// Number of level-r vertices strictly below <k, k>, i.e. the count of <r, s>
// with s * (k / r) == k (mod n). Requires k | n, r | k and r < k.
Int tau(Int n, Int k, Int r);

// Same quantity as tau, counted by graph search over an already built graph.
Int tau_by_search(const GammaGraph& g, Int k, Int r);

// Number of vertices at level k of the graph of order n. Requires k | n.
Int level_count(Int n, Int k);

// Deterministic Graphviz rendering: node ids "k_l", labels "⟨k,l⟩", one edge
// per arc labelled with its prime.
std::string to_dot(const GammaGraph& g);

}  // namespace qcount
