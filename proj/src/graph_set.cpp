#include "cspec/graph_set.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cspec {

namespace {

constexpr int kMaxStarVertices = 10;

void require_star_size(int n) {
    if (n > kMaxStarVertices)
        throw std::domain_error("spectrum enumeration supports at most 10 vertices");
}

void require_same(const GraphSet& a, const GraphSet& b) {
    if (a.n() != b.n()) throw std::domain_error("graph sets live on different vertex counts");
    if (a.mode() != b.mode()) throw std::domain_error("mixing labeled and iso graph sets");
}

/// Expands an iso set to the labeled set of all relabelings.
GraphSet iso_expansion(const GraphSet& a) {
    require_star_size(a.n());
    GraphSet out(a.n(), SetMode::labeled);
    std::vector<int> img(a.n());
    for (const auto& m : a.members()) {
        std::iota(img.begin(), img.end(), 0);
        do {
            out.insert(relabel(m, VertexBijection(img)));
        } while (std::next_permutation(img.begin(), img.end()));
    }
    return out;
}

}  // namespace

SpectrumValues::SpectrumValues(std::initializer_list<Rational> vals) : vals_(vals) {}

const Rational& SpectrumValues::min() const {
    if (vals_.empty()) throw std::domain_error("min of empty spectrum");
    return *vals_.begin();
}

const Rational& SpectrumValues::max() const {
    if (vals_.empty()) throw std::domain_error("max of empty spectrum");
    return *vals_.rbegin();
}

SpectrumValues sumset(const SpectrumValues& a, const SpectrumValues& b) {
    SpectrumValues out;
    for (const auto& x : a.values())
        for (const auto& y : b.values()) out.insert(x + y);
    return out;
}

SpectrumValues scale_values(const Rational& r, const SpectrumValues& a) {
    SpectrumValues out;
    for (const auto& x : a.values()) out.insert(r * x);
    return out;
}

GraphSet GraphSet::single(SetMode mode, const WeightedCompleteGraph& g) {
    GraphSet out(g.n(), mode);
    out.insert(g);
    return out;
}

bool GraphSet::insert(const WeightedCompleteGraph& g) {
    if (g.n() != n_) throw std::domain_error("member has wrong vertex count");
    return members_.insert(mode_ == SetMode::iso ? canonical_representative(g) : g).second;
}

bool GraphSet::contains(const WeightedCompleteGraph& g) const {
    if (g.n() != n_) return false;
    return members_.count(mode_ == SetMode::iso ? canonical_representative(g) : g) != 0;
}

GraphSet star_labeled(const WeightedCompleteGraph& h, const WeightedCompleteGraph& g) {
    if (h.n() != g.n()) throw std::domain_error("star needs equal vertex counts");
    require_star_size(h.n());
    GraphSet out(h.n(), SetMode::labeled);
    std::vector<int> img(h.n());
    std::iota(img.begin(), img.end(), 0);
    do {
        out.insert(edgewise_product(h, g, VertexBijection(img)));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

GraphSet star_iso(const WeightedCompleteGraph& h, const WeightedCompleteGraph& g) {
    if (h.n() != g.n()) throw std::domain_error("star needs equal vertex counts");
    GraphSet out(h.n(), SetMode::iso);
    for (const auto& cls : pso_representatives(h, g))
        out.insert(edgewise_product(h, g, cls.representative));
    return out;
}

GraphSet set_star(const GraphSet& a, const GraphSet& b) {
    require_same(a, b);
    GraphSet out(a.n(), a.mode());
    for (const auto& h : a.members())
        for (const auto& g : b.members()) {
            const GraphSet part =
                a.mode() == SetMode::labeled ? star_labeled(h, g) : star_iso(h, g);
            for (const auto& m : part.members()) out.insert(m);
        }
    return out;
}

GraphSet set_add(const GraphSet& a, const GraphSet& b) {
    if (a.n() != b.n()) throw std::domain_error("graph sets live on different vertex counts");
    const GraphSet la = a.mode() == SetMode::iso ? iso_expansion(a) : a;
    const GraphSet lb = b.mode() == SetMode::iso ? iso_expansion(b) : b;
    GraphSet out(a.n(), SetMode::labeled);
    for (const auto& x : la.members())
        for (const auto& y : lb.members()) out.insert(graph_add(x, y));
    return out;
}

GraphSet set_scalar(const Rational& r, const GraphSet& a) {
    GraphSet out(a.n(), a.mode());
    for (const auto& m : a.members()) out.insert(scalar_mul(r, m));
    return out;
}

GraphSet closure(const GraphSet& a) {
    if (a.mode() != SetMode::labeled)
        throw std::domain_error("closure acts on labeled sets");
    return iso_expansion(a);
}

GraphSet star_power(const GraphSet& a, int k) {
    if (k < 1) throw std::domain_error("star power needs k >= 1");
    GraphSet out = a;
    for (int i = 1; i < k; ++i) out = set_star(out, a);
    return out;
}

GraphSet star_infinity(const GraphSet& a, int cap) {
    if (a.mode() != SetMode::iso)
        throw std::domain_error("star fixpoints are computed in iso mode");
    if (cap <= 0) cap = WeightedCompleteGraph::pair_count(a.n()) + 2;
    GraphSet power = a;
    for (int i = 0; i < cap; ++i) {
        GraphSet next = set_star(power, a);
        if (next == power) return power;
        power = std::move(next);
    }
    throw std::runtime_error("fixpoint not reached within cap");
}

SpectrumValues sum_spectrum(const GraphSet& a) {
    SpectrumValues out;
    for (const auto& m : a.members()) out.insert(weight_sum(m));
    return out;
}

}  // namespace cspec
