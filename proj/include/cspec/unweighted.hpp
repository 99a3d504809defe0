#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cspec {

/// Finite simple graph on vertices 0..n-1. Immutable after construction.
class UnweightedGraph {
public:
    UnweightedGraph() = default;
    /// Validates endpoints, rejects self-loops and duplicate edges.
    /// Edges are stored sorted with u < v. Supports n up to 62 (the
    /// range graph6 covers with a single size byte).
    UnweightedGraph(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int u, int v) const { return u != v && (adj_[u] >> v & 1u); }
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;

    friend bool operator==(const UnweightedGraph& a, const UnweightedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }
    friend bool operator<(const UnweightedGraph& a, const UnweightedGraph& b) {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.edges_ < b.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::uint64_t> adj_;  // row bitmasks
};

// named constructions
UnweightedGraph complete_graph(int n);
UnweightedGraph empty_graph(int n);
UnweightedGraph path_graph(int n);
UnweightedGraph cycle_graph(int n);          // n >= 3
UnweightedGraph star_graph(int n);           // K_{1,n-1}, center 0
UnweightedGraph complete_bipartite(int a, int b);  // sides 0..a-1 and a..a+b-1
UnweightedGraph partial_matching(int n, int k);    // k disjoint edges, n-2k isolated
UnweightedGraph disjoint_cliques(const std::vector<int>& sizes);  // zero sizes are skipped

UnweightedGraph disjoint_union(const UnweightedGraph& a, const UnweightedGraph& b);

enum class NamedGraphKind {
    complete,
    empty,
    path,
    cycle,
    star,
    complete_bipartite,
    partial_matching,
    disjoint_cliques,
    disjoint_union,
};

/// Dispatches to the constructions above. `disjoint_union` reads its
/// params as component sizes: 1 = isolated vertex, 2 = single edge,
/// m >= 3 = cycle C_m (the pieces Eulerian-component arguments need).
UnweightedGraph make_named_graph(NamedGraphKind kind, const std::vector<int>& params);

UnweightedGraph complement(const UnweightedGraph& g);

bool is_connected(const UnweightedGraph& g);
/// BFS distances from src; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const UnweightedGraph& g, int src);
/// Throws std::domain_error on disconnected input.
int diameter(const UnweightedGraph& g);

// graph6 interchange format (n <= 62)
UnweightedGraph parse_graph6(std::string_view text);
std::string to_graph6(const UnweightedGraph& g);

}  // namespace cspec
