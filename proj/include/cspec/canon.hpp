#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cspec/bijection.hpp"
#include "cspec/weighted.hpp"

namespace cspec {

/// The lexicographically minimal flattened weight sequence over all
/// relabelings, in the library's pair order. Two weighted complete
/// graphs are isomorphic exactly when their keys are equal.
struct CanonicalKey {
    int n = 0;
    std::vector<Rational> weights;

    /// "n:w1,w2,...,wC(n,2)" with rationals as p/q.
    std::string str() const;

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    friend bool operator<(const CanonicalKey& a, const CanonicalKey& b) {
        return a.n != b.n ? a.n < b.n : a.weights < b.weights;
    }
};

CanonicalKey canonical_form(const WeightedCompleteGraph& g);

/// The minimal relabeling of g itself: canonical_form(g).weights read
/// back as a graph.
WeightedCompleteGraph canonical_representative(const WeightedCompleteGraph& g);

bool is_isomorphic(const WeightedCompleteGraph& a, const WeightedCompleteGraph& b);

/// Full element set of the weight-preserving permutations, in
/// lexicographic image order. Sizes up to n = 10 are supported.
struct AutomorphismGroup {
    int n = 0;
    std::vector<VertexBijection> elements;

    std::size_t order() const { return elements.size(); }
};

AutomorphismGroup automorphism_group(const WeightedCompleteGraph& g);

/// One pseudoordering per double coset Aut(G) . f . Aut(H), found by a
/// lexicographic scan that skips bijections covered by earlier orbits.
struct PsoClass {
    VertexBijection representative;
    std::uint64_t orbit_size = 0;
};

std::vector<PsoClass> pso_representatives(const WeightedCompleteGraph& h,
                                          const WeightedCompleteGraph& g);

/// Whether {psi . phi : psi in Aut(G), phi in Aut(H)} is all of S_n.
bool aut_composition_covers(const WeightedCompleteGraph& h, const WeightedCompleteGraph& g);

}  // namespace cspec
