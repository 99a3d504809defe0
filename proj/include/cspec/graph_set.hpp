#pragma once

#include <initializer_list>
#include <set>

#include "cspec/canon.hpp"
#include "cspec/weighted.hpp"

namespace cspec {

/// Finite set of rationals, kept sorted and deduplicated.
class SpectrumValues {
public:
    SpectrumValues() = default;
    SpectrumValues(std::initializer_list<Rational> vals);

    void insert(const Rational& r) { vals_.insert(r); }
    bool contains(const Rational& r) const { return vals_.count(r) != 0; }
    std::size_t size() const { return vals_.size(); }
    bool empty() const { return vals_.empty(); }
    const std::set<Rational>& values() const { return vals_; }
    const Rational& min() const;
    const Rational& max() const;

    friend bool operator==(const SpectrumValues&, const SpectrumValues&) = default;

private:
    std::set<Rational> vals_;
};

/// Minkowski sum {a + b}.
SpectrumValues sumset(const SpectrumValues& a, const SpectrumValues& b);
SpectrumValues scale_values(const Rational& r, const SpectrumValues& a);

enum class SetMode { labeled, iso };

/// Set of weighted complete graphs on a common vertex count. In labeled
/// mode members are keyed by their exact weight maps; in iso mode every
/// member is stored as its canonical representative, so set equality is
/// equality of isomorphism-class sets.
class GraphSet {
public:
    GraphSet(int n, SetMode mode) : n_(n), mode_(mode) {}

    static GraphSet single(SetMode mode, const WeightedCompleteGraph& g);

    int n() const { return n_; }
    SetMode mode() const { return mode_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::set<WeightedCompleteGraph>& members() const { return members_; }

    /// Inserts g (canonicalizing first in iso mode). Returns true when
    /// the member is new.
    bool insert(const WeightedCompleteGraph& g);
    bool contains(const WeightedCompleteGraph& g) const;

    friend bool operator==(const GraphSet&, const GraphSet&) = default;

private:
    int n_;
    SetMode mode_;
    std::set<WeightedCompleteGraph> members_;
};

/// H * G over all n! bijections, deduplicated by exact weight map.
GraphSet star_labeled(const WeightedCompleteGraph& h, const WeightedCompleteGraph& g);

/// The iso quotient of H * G, enumerated through double-coset
/// representatives only.
GraphSet star_iso(const WeightedCompleteGraph& h, const WeightedCompleteGraph& g);

/// Union of pairwise stars; both sets must share n and mode.
GraphSet set_star(const GraphSet& a, const GraphSet& b);

/// All pairwise sums. Addition is labeled-pointwise, so iso-mode inputs
/// are first expanded to their isomorphism closure; the result is
/// always labeled.
GraphSet set_add(const GraphSet& a, const GraphSet& b);

GraphSet set_scalar(const Rational& r, const GraphSet& a);

/// All relabelings of all members (labeled mode only); isotone and
/// idempotent.
GraphSet closure(const GraphSet& a);

/// k-fold set_star, k >= 1. There is no empty product: k = 0 throws.
GraphSet star_power(const GraphSet& a, int k);

/// First power m with A^{*(m+1)} = A^{*m}, iso mode only. cap = 0 uses
/// the default C(n,2) + 2 iterations; exceeding the cap throws.
GraphSet star_infinity(const GraphSet& a, int cap = 0);

SpectrumValues sum_spectrum(const GraphSet& a);

}  // namespace cspec
