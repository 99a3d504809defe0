#include "cspec/unweighted.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cspec {

UnweightedGraph::UnweightedGraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n < 0 || n > 62) throw std::domain_error("vertex count out of range 0..62");
    adj_.assign(static_cast<std::size_t>(n), 0);
    for (auto& [u, v] : edges_) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n || u == v) throw std::domain_error("bad edge endpoints");
        if (adj_[u] >> v & 1u) throw std::domain_error("duplicate edge");
        adj_[u] |= std::uint64_t{1} << v;
        adj_[v] |= std::uint64_t{1} << u;
    }
    std::sort(edges_.begin(), edges_.end());
}

int UnweightedGraph::degree(int v) const {
    if (v < 0 || v >= n_) throw std::domain_error("vertex out of range");
    return static_cast<int>(std::popcount(adj_[v]));
}

std::vector<int> UnweightedGraph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (has_edge(u, v)) out.push_back(u);
    return out;
}

UnweightedGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < v; ++u) e.emplace_back(u, v);
    return {n, std::move(e)};
}

UnweightedGraph empty_graph(int n) { return {n, {}}; }

UnweightedGraph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return {n, std::move(e)};
}

UnweightedGraph cycle_graph(int n) {
    if (n < 3) throw std::domain_error("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return {n, std::move(e)};
}

UnweightedGraph star_graph(int n) {
    if (n < 1) throw std::domain_error("star needs at least 1 vertex");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return {n, std::move(e)};
}

UnweightedGraph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw std::domain_error("negative side size");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) e.emplace_back(u, v);
    return {a + b, std::move(e)};
}

UnweightedGraph partial_matching(int n, int k) {
    if (k < 0 || 2 * k > n) throw std::domain_error("matching needs 2k <= n");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.emplace_back(2 * i, 2 * i + 1);
    return {n, std::move(e)};
}

UnweightedGraph disjoint_cliques(const std::vector<int>& sizes) {
    std::vector<std::pair<int, int>> e;
    int base = 0;
    for (int s : sizes) {
        if (s < 0) throw std::domain_error("negative clique size");
        for (int v = 0; v < s; ++v)
            for (int u = 0; u < v; ++u) e.emplace_back(base + u, base + v);
        base += s;
    }
    return {base, std::move(e)};
}

UnweightedGraph disjoint_union(const UnweightedGraph& a, const UnweightedGraph& b) {
    std::vector<std::pair<int, int>> e = a.edges();
    for (auto [u, v] : b.edges()) e.emplace_back(a.n() + u, a.n() + v);
    return {a.n() + b.n(), std::move(e)};
}

UnweightedGraph make_named_graph(NamedGraphKind kind, const std::vector<int>& params) {
    auto want = [&](std::size_t k) {
        if (params.size() != k) throw std::domain_error("wrong parameter count for named graph");
    };
    switch (kind) {
        case NamedGraphKind::complete: want(1); return complete_graph(params[0]);
        case NamedGraphKind::empty: want(1); return empty_graph(params[0]);
        case NamedGraphKind::path: want(1); return path_graph(params[0]);
        case NamedGraphKind::cycle: want(1); return cycle_graph(params[0]);
        case NamedGraphKind::star: want(1); return star_graph(params[0]);
        case NamedGraphKind::complete_bipartite: want(2); return complete_bipartite(params[0], params[1]);
        case NamedGraphKind::partial_matching: want(2); return partial_matching(params[0], params[1]);
        case NamedGraphKind::disjoint_cliques: return disjoint_cliques(params);
        case NamedGraphKind::disjoint_union: {
            UnweightedGraph g = empty_graph(0);
            for (int s : params) {
                if (s < 1) throw std::domain_error("component size must be positive");
                UnweightedGraph part = s == 1 ? empty_graph(1)
                                    : s == 2 ? path_graph(2)
                                             : cycle_graph(s);
                g = disjoint_union(g, part);
            }
            return g;
        }
    }
    throw std::domain_error("unknown named graph kind");
}

UnweightedGraph complement(const UnweightedGraph& g) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < g.n(); ++v)
        for (int u = 0; u < v; ++u)
            if (!g.has_edge(u, v)) e.emplace_back(u, v);
    return {g.n(), std::move(e)};
}

std::vector<int> bfs_distances(const UnweightedGraph& g, int src) {
    if (src < 0 || src >= g.n()) throw std::domain_error("source vertex out of range");
    std::vector<int> dist(g.n(), -1);
    dist[src] = 0;
    std::vector<int> frontier{src};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int y = 0; y < g.n(); ++y)
                if (g.has_edge(x, y) && dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    next.push_back(y);
                }
        frontier = std::move(next);
    }
    return dist;
}

bool is_connected(const UnweightedGraph& g) {
    if (g.n() <= 1) return true;
    auto d = bfs_distances(g, 0);
    return std::find(d.begin(), d.end(), -1) == d.end();
}

int diameter(const UnweightedGraph& g) {
    int best = 0;
    for (int v = 0; v < g.n(); ++v) {
        auto d = bfs_distances(g, v);
        for (int x : d) {
            if (x < 0) throw std::domain_error("diameter undefined: graph is disconnected");
            best = std::max(best, x);
        }
    }
    return best;
}

UnweightedGraph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.rfind(">>graph6<<", 0) == 0) text.remove_prefix(10);
    if (text.empty()) throw std::invalid_argument("empty graph6 string");
    const int n = static_cast<int>(text[0]) - 63;
    if (n < 0 || n > 62) throw std::invalid_argument("graph6: unsupported vertex count");
    const int bits = n * (n - 1) / 2;
    const int want = (bits + 5) / 6;
    if (static_cast<int>(text.size()) != 1 + want)
        throw std::invalid_argument("graph6: wrong length");
    std::vector<std::pair<int, int>> edges;
    int t = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++t) {
            const char c = text[1 + t / 6];
            if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
            if ((c - 63) >> (5 - t % 6) & 1) edges.emplace_back(u, v);
        }
    return {n, std::move(edges)};
}

std::string to_graph6(const UnweightedGraph& g) {
    const int n = g.n();
    const int bits = n * (n - 1) / 2;
    std::string out(1 + (bits + 5) / 6, static_cast<char>(63));
    out[0] = static_cast<char>(63 + n);
    int t = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++t)
            if (g.has_edge(u, v)) out[1 + t / 6] += static_cast<char>(1 << (5 - t % 6));
    return out;
}

}  // namespace cspec
