#include "loopenergy/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace loopenergy {

namespace {

void check_permutation(std::span<const std::size_t> perm, std::size_t n) {
    if (perm.size() != n) throw std::invalid_argument("permutation size does not match order");
    std::vector<bool> seen(n, false);
    for (std::size_t p : perm) {
        if (p >= n || seen[p]) throw std::invalid_argument("not a permutation");
        seen[p] = true;
    }
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (auto& e : edges_) {
        if (e.u == e.v) {
            throw std::invalid_argument("self pair {" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + "} is not a simple edge");
        }
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || static_cast<std::size_t>(e.v) >= n_) {
            throw std::invalid_argument("edge {" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + "} out of range for n=" +
                                        std::to_string(n_));
        }
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        throw std::invalid_argument("duplicate edge {" + std::to_string(dup->u) + "," +
                                    std::to_string(dup->v) + "}");
    }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

std::size_t Graph::degree(Vertex v) const {
    return static_cast<std::size_t>(std::count_if(
        edges_.begin(), edges_.end(), [v](const Edge& e) { return e.u == v || e.v == v; }));
}

Graph Graph::relabeled(std::span<const std::size_t> perm) const {
    check_permutation(perm, n_);
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) {
        out.push_back({static_cast<Vertex>(perm[e.u]), static_cast<Vertex>(perm[e.v])});
    }
    return Graph(n_, std::move(out));
}

LoopedGraph::LoopedGraph(Graph base, std::vector<Vertex> loops)
    : base_(std::move(base)), loops_(std::move(loops)) {
    for (Vertex v : loops_) {
        if (v < 0 || static_cast<std::size_t>(v) >= base_.order()) {
            throw std::out_of_range("loop index " + std::to_string(v) + " out of range for n=" +
                                    std::to_string(base_.order()));
        }
    }
    std::sort(loops_.begin(), loops_.end());
    auto dup = std::adjacent_find(loops_.begin(), loops_.end());
    if (dup != loops_.end()) {
        throw std::invalid_argument("loop index " + std::to_string(*dup) + " repeated");
    }
}

bool LoopedGraph::has_loop(Vertex v) const {
    return std::binary_search(loops_.begin(), loops_.end(), v);
}

LoopedGraph LoopedGraph::relabeled(std::span<const std::size_t> perm) const {
    Graph g = base_.relabeled(perm);
    std::vector<Vertex> loops;
    loops.reserve(loops_.size());
    for (Vertex v : loops_) loops.push_back(static_cast<Vertex>(perm[v]));
    return LoopedGraph(std::move(g), std::move(loops));
}

Graph complete_graph(std::size_t n) {
    if (n == 0) throw std::invalid_argument("complete_graph needs n >= 1");
    std::vector<Edge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
        }
    }
    return Graph(n, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle_graph needs n >= 3");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
    }
    return Graph(n, std::move(edges));
}

Graph path_graph(std::size_t n) {
    if (n == 0) throw std::invalid_argument("path_graph needs n >= 1");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
    }
    return Graph(n, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    const auto offset = static_cast<Vertex>(a.order());
    for (const auto& e : b.edges()) edges.push_back({e.u + offset, e.v + offset});
    return Graph(a.order() + b.order(), std::move(edges));
}

LoopedGraph with_all_loops(const Graph& g) {
    std::vector<Vertex> loops(g.order());
    for (std::size_t i = 0; i < loops.size(); ++i) loops[i] = static_cast<Vertex>(i);
    return LoopedGraph(g, std::move(loops));
}

LoopedGraph with_loops(const Graph& g, std::vector<Vertex> loops) {
    return LoopedGraph(g, std::move(loops));
}

LoopedGraph without_loops(const Graph& g) { return LoopedGraph(g, {}); }

LoopedGraph union_looped(std::span<const LoopedGraph> parts) {
    std::size_t n = 0;
    std::vector<Edge> edges;
    std::vector<Vertex> loops;
    for (const auto& part : parts) {
        const auto offset = static_cast<Vertex>(n);
        for (const auto& e : part.base().edges()) edges.push_back({e.u + offset, e.v + offset});
        for (Vertex v : part.loops()) loops.push_back(v + offset);
        n += part.order();
    }
    return LoopedGraph(Graph(n, std::move(edges)), std::move(loops));
}

LoopedGraph union_family(const Graph& g, std::size_t p, std::size_t q) {
    std::vector<LoopedGraph> parts;
    parts.reserve(p + q);
    for (std::size_t i = 0; i < p; ++i) parts.push_back(without_loops(g));
    for (std::size_t i = 0; i < q; ++i) parts.push_back(with_all_loops(g));
    return union_looped(parts);
}

SymmetricMatrix adjacency_matrix(const LoopedGraph& g) {
    SymmetricMatrix m(g.order());
    for (const auto& e : g.base().edges()) m.set(e.u, e.v, 1.0);
    for (Vertex v : g.loops()) m.set(v, v, 1.0);
    return m;
}

SymmetricMatrix adjacency_matrix(const Graph& g) { return adjacency_matrix(without_loops(g)); }

LoopedGraph from_adjacency_matrix(const SymmetricMatrix& m) {
    const std::size_t n = m.size();
    std::vector<Edge> edges;
    std::vector<Vertex> loops;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const double x = m(i, j);
            if (x != 0.0 && x != 1.0) {
                throw std::invalid_argument("entry at (" + std::to_string(i) + ", " +
                                            std::to_string(j) + ") is not 0 or 1");
            }
            if (x == 1.0) {
                if (i == j) {
                    loops.push_back(static_cast<Vertex>(i));
                } else {
                    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
                }
            }
        }
    }
    return LoopedGraph(Graph(n, std::move(edges)), std::move(loops));
}

}  // namespace loopenergy
