#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "loopenergy/matrix.hpp"

namespace loopenergy {

using Vertex = int;

// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1: no self pairs, no duplicate
// edges. Edges are kept sorted.
class Graph {
public:
    Graph() = default;

    // Edgeless graph of order n.
    explicit Graph(std::size_t n) : n_(n) {}

    // Throws std::invalid_argument on a self pair, a duplicate edge or an
    // endpoint outside [0, n).
    Graph(std::size_t n, std::vector<Edge> edges);

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool has_edge(Vertex a, Vertex b) const;
    std::size_t degree(Vertex v) const;

    // Relabels vertex i as perm[i]; perm must be a permutation of 0..n-1.
    Graph relabeled(std::span<const std::size_t> perm) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

// A Graph plus the set of vertices carrying a self-loop. sigma() is the
// number of loops.
class LoopedGraph {
public:
    LoopedGraph() = default;

    // Throws std::out_of_range naming the first index outside [0, n), and
    // std::invalid_argument on a repeated index.
    LoopedGraph(Graph base, std::vector<Vertex> loops);

    const Graph& base() const noexcept { return base_; }
    const std::vector<Vertex>& loops() const noexcept { return loops_; }
    std::size_t order() const noexcept { return base_.order(); }
    std::size_t sigma() const noexcept { return loops_.size(); }
    bool has_loop(Vertex v) const;

    LoopedGraph relabeled(std::span<const std::size_t> perm) const;

    friend bool operator==(const LoopedGraph&, const LoopedGraph&) = default;

private:
    Graph base_;
    std::vector<Vertex> loops_;
};

// Named families. complete_graph and path_graph need n >= 1, cycle_graph
// needs n >= 3; violations throw std::invalid_argument.
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

// b's vertices are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

// G^l: every vertex carries a loop.
LoopedGraph with_all_loops(const Graph& g);
LoopedGraph with_loops(const Graph& g, std::vector<Vertex> loops);
LoopedGraph without_loops(const Graph& g);

// Parts are laid out in order with cumulative vertex offsets; loop sets move
// with their part.
LoopedGraph union_looped(std::span<const LoopedGraph> parts);

// p loopless copies of g followed by q fully looped copies.
LoopedGraph union_family(const Graph& g, std::size_t p, std::size_t q);

// A(G) + I_sigma with 0/1 entries; trace equals sigma.
SymmetricMatrix adjacency_matrix(const LoopedGraph& g);
SymmetricMatrix adjacency_matrix(const Graph& g);

// Inverse of adjacency_matrix. Throws std::invalid_argument naming the
// offending cell if an entry is not 0/1.
LoopedGraph from_adjacency_matrix(const SymmetricMatrix& m);

}  // namespace loopenergy
