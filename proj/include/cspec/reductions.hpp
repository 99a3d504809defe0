#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cspec/graph_set.hpp"
#include "cspec/unweighted.hpp"
#include "cspec/weighted.hpp"

namespace cspec::reductions {

/// Outcome of running one predicate through both routes: the spectrum
/// formula and the classical brute-force oracle.
struct ReductionReport {
    std::string predicate;
    std::optional<bool> spectral_flag;
    std::optional<bool> oracle_flag;
    std::optional<SpectrumValues> spectral_values;
    std::optional<SpectrumValues> oracle_values;
    bool agree = false;
    std::string witness;  // optional human-readable detail
};

// ---- H-Hamiltonian spectra ----------------------------------------

/// s({I(H)} * {rho(G)}) via the pruned spectrum machinery.
SpectrumValues hamiltonian_spectrum(const UnweightedGraph& h, const UnweightedGraph& g);
/// Direct enumeration of sum_{{x,y} in E(H)} dist_G(f(x), f(y)).
SpectrumValues hamiltonian_spectrum_oracle(const UnweightedGraph& h, const UnweightedGraph& g);
ReductionReport check_hamiltonian(const UnweightedGraph& h, const UnweightedGraph& g);

// ---- matchings, degrees -------------------------------------------

SpectrumValues matching_cardinalities(const UnweightedGraph& g);
SpectrumValues matching_cardinalities_oracle(const UnweightedGraph& g);
ReductionReport check_matchings(const UnweightedGraph& g);

SpectrumValues degree_set(const UnweightedGraph& g);  // n >= 2
SpectrumValues degree_set_oracle(const UnweightedGraph& g);
ReductionReport check_degrees(const UnweightedGraph& g);

// ---- colorability --------------------------------------------------

bool vertex_k_colorable(const UnweightedGraph& g, int k);
bool vertex_k_colorable_oracle(const UnweightedGraph& g, int k);
ReductionReport check_vertex_coloring(const UnweightedGraph& g, int k);

bool edge_k_colorable(const UnweightedGraph& g, int k, int cap = 0);  // n >= 2
bool edge_k_colorable_oracle(const UnweightedGraph& g, int k);
ReductionReport check_edge_coloring(const UnweightedGraph& g, int k, int cap = 0);

// ---- friendly bisection ---------------------------------------------

bool friendly_bisection(const UnweightedGraph& g);  // n even
bool friendly_bisection_oracle(const UnweightedGraph& g);
ReductionReport check_bisection(const UnweightedGraph& g);

// ---- connectivity ---------------------------------------------------

bool edge_k_connected(const UnweightedGraph& g, int k_plus_1);  // n >= 2
bool edge_k_connected_oracle(const UnweightedGraph& g, int k_plus_1);
ReductionReport check_edge_connectivity(const UnweightedGraph& g, int k_plus_1);

/// Throws std::domain_error when g is complete.
bool vertex_k_connected(const UnweightedGraph& g, int k_plus_1);
bool vertex_k_connected_oracle(const UnweightedGraph& g, int k_plus_1);
ReductionReport check_vertex_connectivity(const UnweightedGraph& g, int k_plus_1);

bool complete_via_spectrum(const UnweightedGraph& g);  // n >= 2
bool complete_oracle(const UnweightedGraph& g);
ReductionReport check_completeness(const UnweightedGraph& g);

// ---- Ramsey ----------------------------------------------------------

/// True when some 2-coloring of the edges of K_n has no monochromatic
/// K_k, i.e. n < R(k,k). Requires n > k >= 2.
bool ramsey_avoider_exists(int n, int k, int cap = 0);
bool ramsey_avoider_exists_oracle(int n, int k);
ReductionReport check_ramsey(int n, int k, int cap = 0);

// ---- dense interval ---------------------------------------------------

struct DenseIntervalResult {
    SpectrumValues union_values;  // union over all H of s(I(H) * G), H up to iso
    bool full_interval = false;   // union equals {0..l}
    bool hypothesis_holds = false;  // the weight set of G is {1..k}
    Rational total;               // l = s(I(K_n) * G), a singleton
};

/// Requires integer weights.
DenseIntervalResult dense_union_interval(const WeightedCompleteGraph& g);
ReductionReport check_dense(const WeightedCompleteGraph& g);

// ---- orthogonality -----------------------------------------------------

bool perp(const WeightedCompleteGraph& h, const WeightedCompleteGraph& g);

/// An ideal of value sets: closed under sumset, scalar multiples and
/// subsets. `contains` decides membership of one spectrum.
struct WeightIdeal {
    std::string name;
    std::function<bool(const SpectrumValues&)> contains;
};

/// Sets of even integers.
WeightIdeal even_integer_ideal();

/// Members of `universe` orthogonal to every member of `family`; plain
/// perp when `ideal` is null, perp relative to the ideal otherwise.
std::vector<WeightedCompleteGraph> perp_class(
    const std::vector<WeightedCompleteGraph>& family,
    const std::vector<WeightedCompleteGraph>& universe,
    const WeightIdeal* ideal = nullptr);

/// For connected g of diameter <= 2: perp against I(g) and rho(g) agree
/// on every sample.
bool diameter2_perp_equality(const UnweightedGraph& g,
                             const std::vector<WeightedCompleteGraph>& samples);

// ---- Hamiltonian lower bound -------------------------------------------

struct HamiltonianBound {
    Rational lhs;  // h_H(path) - C(n+1,3) + h_{K_n}(G)
    Rational rhs;  // h_H(G)
    bool inequality_holds = false;
    bool complement_connected = false;
    bool equality_holds = false;
    bool g_is_path_complement = false;
    /// equality_holds == g_is_path_complement (meaningful when the
    /// complement of H is connected)
    bool coincides = false;
};

HamiltonianBound hamiltonian_bound_check(const UnweightedGraph& h, const UnweightedGraph& g);
ReductionReport check_hamiltonian_bound(const UnweightedGraph& h, const UnweightedGraph& g);

// ---- shared constructions ------------------------------------------------

/// All simple graphs on n vertices, one per isomorphism class, in
/// canonical-key order. Supported for n <= 7.
std::vector<UnweightedGraph> graph_catalog(int n);

/// {I(P_{n,k}) : 0 <= k <= n/2}.
GraphSet matching_family(int n);
/// {I of disjoint cliques over partitions of n into at most k parts}.
GraphSet coloring_cliques(int n, int k);
/// {I(K_{m,n-m}) : 1 <= m <= n-1}.
GraphSet bipartite_cut_family(int n, SetMode mode);
/// I(K_n minus an edge)^{*inf} united with {I(K_n)}: indicators of all
/// graphs on n vertices, computed through the star fixpoint.
GraphSet all_graph_indicators(int n, int cap = 0);

/// Runs every reduction against its oracle for all catalog graphs with
/// at most max_n vertices. Returns the failing reports (empty = pass).
std::vector<ReductionReport> selftest(int max_n);

}  // namespace cspec::reductions
