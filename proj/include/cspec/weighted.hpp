#pragma once

#include <vector>

#include "cspec/bijection.hpp"
#include "cspec/rational.hpp"
#include "cspec/unweighted.hpp"

namespace cspec {

/// Complete graph on 0..n-1 with a rational weight on every unordered
/// pair. Weights are stored flat in column order: (0,1),(0,2),(1,2),
/// (0,3),... — the same pair order graph6 uses and the order canonical
/// keys are compared in.
class WeightedCompleteGraph {
public:
    WeightedCompleteGraph() = default;
    explicit WeightedCompleteGraph(int n) : WeightedCompleteGraph(n, std::vector<Rational>(pair_count(std::max(n, 0)))) {}
    WeightedCompleteGraph(int n, std::vector<Rational> weights);

    static int pair_count(int n) { return n * (n - 1) / 2; }
    static int pair_index(int u, int v);  // u != v, order-insensitive

    int n() const { return n_; }
    const Rational& weight(int u, int v) const { return w_[pair_index(u, v)]; }
    void set_weight(int u, int v, Rational r) { w_[pair_index(u, v)] = std::move(r); }
    const std::vector<Rational>& weights() const { return w_; }

    friend bool operator==(const WeightedCompleteGraph& a, const WeightedCompleteGraph& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }
    friend bool operator<(const WeightedCompleteGraph& a, const WeightedCompleteGraph& b) {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.w_ < b.w_;
    }

private:
    int n_ = 0;
    std::vector<Rational> w_;
};

/// I(G): 1 on edges, 0 on non-edges.
WeightedCompleteGraph indicator(const UnweightedGraph& g);

/// rho(G): shortest-path distance on every pair. Throws
/// std::domain_error when g is disconnected.
WeightedCompleteGraph distance_graph(const UnweightedGraph& g);

/// U_a(G): the unweighted graph of pairs whose weight equals a exactly.
UnweightedGraph level_set(const WeightedCompleteGraph& g, const Rational& a);

/// Pointwise sum; both graphs must live on the same vertex count.
WeightedCompleteGraph graph_add(const WeightedCompleteGraph& a, const WeightedCompleteGraph& b);

WeightedCompleteGraph scalar_mul(const Rational& r, const WeightedCompleteGraph& g);

/// H *_f G: weight(e) = v_H(e) * v_G(f(e)).
WeightedCompleteGraph edgewise_product(const WeightedCompleteGraph& h,
                                       const WeightedCompleteGraph& g,
                                       const VertexBijection& f);

/// s(G): sum over all pairs; 0 when n <= 1.
Rational weight_sum(const WeightedCompleteGraph& g);

/// The image of g under a relabeling: result(f(u), f(v)) = g(u, v).
WeightedCompleteGraph relabel(const WeightedCompleteGraph& g, const VertexBijection& f);

/// Sorted distinct weights of g.
std::vector<Rational> distinct_weights(const WeightedCompleteGraph& g);

}  // namespace cspec
