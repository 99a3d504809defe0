#include "cspec/weighted.hpp"

#include <algorithm>
#include <stdexcept>

namespace cspec {

WeightedCompleteGraph::WeightedCompleteGraph(int n, std::vector<Rational> weights)
    : n_(n), w_(std::move(weights)) {
    if (n < 0) throw std::domain_error("negative vertex count");
    if (static_cast<int>(w_.size()) != pair_count(n))
        throw std::domain_error("weight vector has wrong length");
}

int WeightedCompleteGraph::pair_index(int u, int v) {
    if (u > v) std::swap(u, v);
    if (u < 0 || u == v) throw std::domain_error("bad vertex pair");
    return v * (v - 1) / 2 + u;
}

WeightedCompleteGraph indicator(const UnweightedGraph& g) {
    WeightedCompleteGraph w(g.n());
    for (auto [u, v] : g.edges()) w.set_weight(u, v, 1);
    return w;
}

WeightedCompleteGraph distance_graph(const UnweightedGraph& g) {
    if (!is_connected(g)) throw std::domain_error("distance undefined: graph is disconnected");
    WeightedCompleteGraph w(g.n());
    for (int v = 0; v < g.n(); ++v) {
        auto d = bfs_distances(g, v);
        for (int u = 0; u < v; ++u) w.set_weight(u, v, d[u]);
    }
    return w;
}

UnweightedGraph level_set(const WeightedCompleteGraph& g, const Rational& a) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < g.n(); ++v)
        for (int u = 0; u < v; ++u)
            if (g.weight(u, v) == a) e.emplace_back(u, v);
    return {g.n(), std::move(e)};
}

WeightedCompleteGraph graph_add(const WeightedCompleteGraph& a, const WeightedCompleteGraph& b) {
    if (a.n() != b.n()) throw std::domain_error("adding graphs of different sizes");
    std::vector<Rational> w(a.weights());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += b.weights()[i];
    return {a.n(), std::move(w)};
}

WeightedCompleteGraph scalar_mul(const Rational& r, const WeightedCompleteGraph& g) {
    std::vector<Rational> w(g.weights());
    for (auto& x : w) x *= r;
    return {g.n(), std::move(w)};
}

WeightedCompleteGraph edgewise_product(const WeightedCompleteGraph& h,
                                       const WeightedCompleteGraph& g,
                                       const VertexBijection& f) {
    if (h.n() != g.n() || h.n() != f.n())
        throw std::domain_error("edgewise product needs matching sizes");
    WeightedCompleteGraph out(h.n());
    for (int v = 0; v < h.n(); ++v)
        for (int u = 0; u < v; ++u) out.set_weight(u, v, h.weight(u, v) * g.weight(f(u), f(v)));
    return out;
}

Rational weight_sum(const WeightedCompleteGraph& g) {
    Rational s;
    for (const auto& x : g.weights()) s += x;
    return s;
}

WeightedCompleteGraph relabel(const WeightedCompleteGraph& g, const VertexBijection& f) {
    if (g.n() != f.n()) throw std::domain_error("relabeling with wrong-size bijection");
    WeightedCompleteGraph out(g.n());
    for (int v = 0; v < g.n(); ++v)
        for (int u = 0; u < v; ++u) out.set_weight(f(u), f(v), g.weight(u, v));
    return out;
}

std::vector<Rational> distinct_weights(const WeightedCompleteGraph& g) {
    std::vector<Rational> w(g.weights());
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    return w;
}

}  // namespace cspec
