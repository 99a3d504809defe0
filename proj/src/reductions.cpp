#include "cspec/reductions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cspec::reductions {

namespace {

UnweightedGraph complete_minus_edge(int n) {
    if (n < 2) throw std::domain_error("needs at least 2 vertices");
    return complement(partial_matching(n, 1));
}

/// K_k plus n-k isolated vertices.
UnweightedGraph clique_with_isolated(int n, int k) {
    std::vector<int> sizes{k};
    sizes.insert(sizes.end(), static_cast<std::size_t>(n - k), 1);
    return disjoint_cliques(sizes);
}

Rational binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return {num, den};
}

ReductionReport value_report(std::string name, SpectrumValues spectral, SpectrumValues oracle) {
    ReductionReport r;
    r.predicate = std::move(name);
    r.agree = spectral == oracle;
    r.spectral_values = std::move(spectral);
    r.oracle_values = std::move(oracle);
    return r;
}

ReductionReport flag_report(std::string name, bool spectral, bool oracle) {
    ReductionReport r;
    r.predicate = std::move(name);
    r.spectral_flag = spectral;
    r.oracle_flag = oracle;
    r.agree = spectral == oracle;
    return r;
}

void for_each_subset_up_to(int count, int max_size, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> subset;
    auto rec = [&](auto&& self, int next) -> void {
        fn(subset);
        if (static_cast<int>(subset.size()) == max_size) return;
        for (int i = next; i < count; ++i) {
            subset.push_back(i);
            self(self, i + 1);
            subset.pop_back();
        }
    };
    rec(rec, 0);
}

UnweightedGraph delete_edges(const UnweightedGraph& g, const std::vector<int>& edge_ids) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.edge_count(); ++i)
        if (std::find(edge_ids.begin(), edge_ids.end(), i) == edge_ids.end())
            edges.push_back(g.edges()[i]);
    return {g.n(), std::move(edges)};
}

UnweightedGraph delete_vertices(const UnweightedGraph& g, const std::vector<int>& verts) {
    std::vector<int> remap(g.n(), -1);
    int next = 0;
    for (int v = 0; v < g.n(); ++v)
        if (std::find(verts.begin(), verts.end(), v) == verts.end()) remap[v] = next++;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (remap[u] >= 0 && remap[v] >= 0) edges.emplace_back(remap[u], remap[v]);
    return {next, std::move(edges)};
}

}  // namespace

SpectrumValues hamiltonian_spectrum(const UnweightedGraph& h, const UnweightedGraph& g) {
    if (h.n() != g.n()) throw std::domain_error("H-Hamiltonian spectrum needs equal vertex counts");
    return sum_spectrum(star_iso(indicator(h), distance_graph(g)));
}

SpectrumValues hamiltonian_spectrum_oracle(const UnweightedGraph& h, const UnweightedGraph& g) {
    if (h.n() != g.n()) throw std::domain_error("H-Hamiltonian spectrum needs equal vertex counts");
    if (!is_connected(g)) throw std::domain_error("distance undefined: graph is disconnected");
    const int n = g.n();
    std::vector<std::vector<int>> dist;
    dist.reserve(n);
    for (int v = 0; v < n; ++v) dist.push_back(bfs_distances(g, v));

    std::set<long long> sums;
    std::vector<int> f(n);
    std::iota(f.begin(), f.end(), 0);
    do {
        long long s = 0;
        for (auto [x, y] : h.edges()) s += dist[f[x]][f[y]];
        sums.insert(s);
    } while (std::next_permutation(f.begin(), f.end()));

    SpectrumValues out;
    for (long long s : sums) out.insert(Rational(s));
    return out;
}

ReductionReport check_hamiltonian(const UnweightedGraph& h, const UnweightedGraph& g) {
    return value_report("hamiltonian", hamiltonian_spectrum(h, g), hamiltonian_spectrum_oracle(h, g));
}

SpectrumValues matching_cardinalities(const UnweightedGraph& g) {
    return sum_spectrum(set_star(matching_family(g.n()),
                                 GraphSet::single(SetMode::iso, indicator(g))));
}

SpectrumValues matching_cardinalities_oracle(const UnweightedGraph& g) {
    SpectrumValues out;
    std::uint64_t used = 0;
    auto rec = [&](auto&& self, int next, int size) -> void {
        out.insert(size);
        for (int i = next; i < g.edge_count(); ++i) {
            const auto [u, v] = g.edges()[i];
            const std::uint64_t mask = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
            if (used & mask) continue;
            used |= mask;
            self(self, i + 1, size + 1);
            used &= ~mask;
        }
    };
    rec(rec, 0, 0);
    return out;
}

ReductionReport check_matchings(const UnweightedGraph& g) {
    return value_report("matchings", matching_cardinalities(g), matching_cardinalities_oracle(g));
}

SpectrumValues degree_set(const UnweightedGraph& g) {
    if (g.n() < 2) throw std::domain_error("degree spectrum needs at least 2 vertices");
    return sum_spectrum(star_iso(indicator(star_graph(g.n())), indicator(g)));
}

SpectrumValues degree_set_oracle(const UnweightedGraph& g) {
    if (g.n() < 2) throw std::domain_error("degree spectrum needs at least 2 vertices");
    SpectrumValues out;
    for (int v = 0; v < g.n(); ++v) out.insert(g.degree(v));
    return out;
}

ReductionReport check_degrees(const UnweightedGraph& g) {
    return value_report("degrees", degree_set(g), degree_set_oracle(g));
}

bool vertex_k_colorable(const UnweightedGraph& g, int k) {
    if (k < 1) throw std::domain_error("coloring needs k >= 1");
    const auto vals = sum_spectrum(
        set_star(coloring_cliques(g.n(), k), GraphSet::single(SetMode::iso, indicator(g))));
    return !vals.empty() && vals.min() == Rational(0);
}

bool vertex_k_colorable_oracle(const UnweightedGraph& g, int k) {
    if (k < 1) throw std::domain_error("coloring needs k >= 1");
    std::vector<int> color(g.n(), -1);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == g.n()) return true;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (g.has_edge(u, v) && color[u] == c) ok = false;
            if (!ok) continue;
            color[v] = c;
            if (self(self, v + 1)) return true;
            color[v] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

ReductionReport check_vertex_coloring(const UnweightedGraph& g, int k) {
    return flag_report("vcolor", vertex_k_colorable(g, k), vertex_k_colorable_oracle(g, k));
}

bool edge_k_colorable(const UnweightedGraph& g, int k, int cap) {
    if (k < 1) throw std::domain_error("coloring needs k >= 1");
    const int n = g.n();
    if (n < 2) throw std::domain_error("edge coloring spectrum needs at least 2 vertices");

    // all k-colorings of G: I(G) * (sum of k-1 copies of the 0/1
    // universe, plus I(K_n))
    GraphSet palette = GraphSet::single(SetMode::labeled, indicator(complete_graph(n)));
    if (k > 1) {
        const GraphSet universe = all_graph_indicators(n, cap);
        for (int i = 1; i < k; ++i) palette = set_add(palette, universe);
    }
    const GraphSet colorings = set_star(GraphSet::single(SetMode::labeled, indicator(g)), palette);

    const auto star_n = indicator(star_graph(n));
    for (const auto& coloring : colorings.members()) {
        bool proper = true;
        for (int a = 1; a <= k && proper; ++a) {
            const auto cls = indicator(level_set(coloring, a));
            const auto degs = sum_spectrum(star_iso(cls, star_n));
            proper = degs.max() <= Rational(1);
        }
        if (proper) return true;
    }
    return false;
}

bool edge_k_colorable_oracle(const UnweightedGraph& g, int k) {
    if (k < 1) throw std::domain_error("coloring needs k >= 1");
    const auto& edges = g.edges();
    std::vector<int> color(edges.size(), -1);
    auto touch = [&](int i, int j) {
        return edges[i].first == edges[j].first || edges[i].first == edges[j].second ||
               edges[i].second == edges[j].first || edges[i].second == edges[j].second;
    };
    auto rec = [&](auto&& self, std::size_t e) -> bool {
        if (e == edges.size()) return true;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (std::size_t i = 0; i < e && ok; ++i)
                if (color[i] == c && touch(static_cast<int>(i), static_cast<int>(e))) ok = false;
            if (!ok) continue;
            color[e] = c;
            if (self(self, e + 1)) return true;
            color[e] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

ReductionReport check_edge_coloring(const UnweightedGraph& g, int k, int cap) {
    return flag_report("ecolor", edge_k_colorable(g, k, cap), edge_k_colorable_oracle(g, k));
}

bool friendly_bisection(const UnweightedGraph& g) {
    const int n = g.n();
    if (n < 2 || n % 2 != 0) throw std::domain_error("bisection needs an even vertex count");
    const auto flip = graph_add(indicator(complete_graph(n)),
                                scalar_mul(-2, indicator(complete_bipartite(n / 2, n / 2))));
    const auto star_n = indicator(star_graph(n));
    const auto signings = star_labeled(flip, indicator(g));
    for (const auto& h : signings.members()) {
        if (sum_spectrum(star_iso(h, star_n)).min() >= Rational(0)) return true;
    }
    return false;
}

bool friendly_bisection_oracle(const UnweightedGraph& g) {
    const int n = g.n();
    if (n < 2 || n % 2 != 0) throw std::domain_error("bisection needs an even vertex count");
    std::vector<int> side(n, 0);
    auto friendly = [&]() {
        for (int v = 0; v < n; ++v) {
            int in = 0, out = 0;
            for (int u = 0; u < n; ++u)
                if (g.has_edge(u, v)) (side[u] == side[v] ? in : out)++;
            if (in < out) return false;
        }
        return true;
    };
    bool found = false;
    auto rec = [&](auto&& self, int v, int ones) -> void {
        if (found) return;
        if (ones > n / 2 || (v - ones) > n / 2) return;
        if (v == n) {
            if (friendly()) found = true;
            return;
        }
        side[v] = 0;
        self(self, v + 1, ones);
        side[v] = 1;
        self(self, v + 1, ones + 1);
        side[v] = 0;
    };
    rec(rec, 0, 0);
    return found;
}

ReductionReport check_bisection(const UnweightedGraph& g) {
    return flag_report("bisection", friendly_bisection(g), friendly_bisection_oracle(g));
}

bool edge_k_connected(const UnweightedGraph& g, int k_plus_1) {
    if (k_plus_1 < 1) throw std::domain_error("connectivity target must be positive");
    const int n = g.n();
    if (n < 2) throw std::domain_error("connectivity spectrum needs at least 2 vertices");
    const int deletions = k_plus_1 - 1;
    GraphSet family = GraphSet::single(SetMode::iso, indicator(g));
    if (deletions > 0) {
        const auto deleter = GraphSet::single(SetMode::iso, indicator(complete_minus_edge(n)));
        family = set_star(star_power(deleter, deletions), family);
    }
    const auto vals = sum_spectrum(set_star(bipartite_cut_family(n, SetMode::iso), family));
    return vals.min() >= Rational(1);
}

bool edge_k_connected_oracle(const UnweightedGraph& g, int k_plus_1) {
    if (k_plus_1 < 1) throw std::domain_error("connectivity target must be positive");
    if (g.n() < 2) throw std::domain_error("connectivity spectrum needs at least 2 vertices");
    bool ok = true;
    for_each_subset_up_to(g.edge_count(), k_plus_1 - 1, [&](const std::vector<int>& erase) {
        if (ok && !is_connected(delete_edges(g, erase))) ok = false;
    });
    return ok;
}

ReductionReport check_edge_connectivity(const UnweightedGraph& g, int k_plus_1) {
    return flag_report("econn", edge_k_connected(g, k_plus_1), edge_k_connected_oracle(g, k_plus_1));
}

bool vertex_k_connected(const UnweightedGraph& g, int k_plus_1) {
    if (k_plus_1 < 1) throw std::domain_error("connectivity target must be positive");
    const int n = g.n();
    if (g.edge_count() == WeightedCompleteGraph::pair_count(n))
        throw std::domain_error("theorem requires G != K_n");
    const int removals = k_plus_1 - 1;

    const auto all_ones = indicator(complete_graph(n));
    const GraphSet base = GraphSet::single(
        SetMode::labeled, graph_add(indicator(g), scalar_mul(Rational(-1, 2), all_ones)));
    GraphSet family = base;
    if (removals > 0) {
        // every k-fold star vanishes at least one vertex, so the
        // "at most k" family is the union with the unstarred graph
        const auto vanish =
            GraphSet::single(SetMode::labeled, indicator(complement(star_graph(n))));
        family = set_star(base, star_power(vanish, removals));
        for (const auto& m : base.members()) family.insert(m);
    }
    family = set_add(family, GraphSet::single(SetMode::labeled, scalar_mul(half(), all_ones)));
    family = set_star(family, bipartite_cut_family(n, SetMode::labeled));

    std::set<CanonicalKey> half_cuts;
    for (int m = 1; m < n; ++m)
        half_cuts.insert(canonical_form(scalar_mul(half(), indicator(complete_bipartite(m, n - m)))));

    const Rational one(1);
    for (const auto& h : family.members()) {
        const auto& w = h.weights();
        if (std::find(w.begin(), w.end(), one) != w.end()) continue;
        if (half_cuts.count(canonical_form(h))) continue;
        return false;
    }
    return true;
}

bool vertex_k_connected_oracle(const UnweightedGraph& g, int k_plus_1) {
    if (k_plus_1 < 1) throw std::domain_error("connectivity target must be positive");
    if (g.edge_count() == WeightedCompleteGraph::pair_count(g.n()))
        throw std::domain_error("theorem requires G != K_n");
    bool ok = true;
    for_each_subset_up_to(g.n(), k_plus_1 - 1, [&](const std::vector<int>& erase) {
        if (ok && !is_connected(delete_vertices(g, erase))) ok = false;
    });
    return ok;
}

ReductionReport check_vertex_connectivity(const UnweightedGraph& g, int k_plus_1) {
    return flag_report("vconn", vertex_k_connected(g, k_plus_1),
                       vertex_k_connected_oracle(g, k_plus_1));
}

bool complete_via_spectrum(const UnweightedGraph& g) {
    if (g.n() < 2) throw std::domain_error("completeness probe needs at least 2 vertices");
    const auto probe = indicator(partial_matching(g.n(), 1));
    return sum_spectrum(star_iso(indicator(g), probe)) == SpectrumValues{1};
}

bool complete_oracle(const UnweightedGraph& g) {
    if (g.n() < 2) throw std::domain_error("completeness probe needs at least 2 vertices");
    return g.edge_count() == WeightedCompleteGraph::pair_count(g.n());
}

ReductionReport check_completeness(const UnweightedGraph& g) {
    return flag_report("complete", complete_via_spectrum(g), complete_oracle(g));
}

bool ramsey_avoider_exists(int n, int k, int cap) {
    if (k < 2 || n <= k) throw std::domain_error("Ramsey probe needs n > k >= 2");
    // +-1 colorings of K_n: twice the indicators of all non-complete
    // graphs, shifted down by the all-ones graph
    const auto signings = set_add(
        set_scalar(2, star_infinity(GraphSet::single(SetMode::iso, indicator(complete_minus_edge(n))), cap)),
        GraphSet::single(SetMode::labeled, scalar_mul(-1, indicator(complete_graph(n)))));
    GraphSet classes(n, SetMode::iso);
    for (const auto& m : signings.members()) classes.insert(m);

    const auto probe = indicator(clique_with_isolated(n, k));
    const Rational bound = binomial(k, 2);
    for (const auto& coloring : classes.members()) {
        const auto vals = sum_spectrum(star_iso(coloring, probe));
        if (vals.min() > -bound && vals.max() < bound) return true;
    }
    return false;
}

bool ramsey_avoider_exists_oracle(int n, int k) {
    if (k < 2 || n <= k) throw std::domain_error("Ramsey probe needs n > k >= 2");
    const int pairs = WeightedCompleteGraph::pair_count(n);
    if (pairs > 21) throw std::domain_error("Ramsey oracle supports at most 21 pairs");

    // pair-index lists of every k-subset
    std::vector<std::vector<int>> cliques;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(pick.size()) == k) {
            std::vector<int> ids;
            for (std::size_t i = 0; i < pick.size(); ++i)
                for (std::size_t j = 0; j < i; ++j)
                    ids.push_back(WeightedCompleteGraph::pair_index(pick[j], pick[i]));
            cliques.push_back(std::move(ids));
            return;
        }
        for (int v = next; v < n; ++v) {
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);

    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        bool mono = false;
        for (const auto& ids : cliques) {
            bool all = true, none = true;
            for (int id : ids) {
                if (mask >> id & 1)
                    none = false;
                else
                    all = false;
            }
            if (all || none) {
                mono = true;
                break;
            }
        }
        if (!mono) return true;
    }
    return false;
}

ReductionReport check_ramsey(int n, int k, int cap) {
    return flag_report("ramsey", ramsey_avoider_exists(n, k, cap), ramsey_avoider_exists_oracle(n, k));
}

DenseIntervalResult dense_union_interval(const WeightedCompleteGraph& g) {
    for (const auto& w : g.weights())
        if (!w.is_integer()) throw std::domain_error("dense interval needs integer weights");

    DenseIntervalResult out;
    out.total = weight_sum(g);

    const auto weights = distinct_weights(g);
    out.hypothesis_holds = true;
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (weights[i] != Rational(static_cast<long long>(i) + 1)) out.hypothesis_holds = false;

    for (const auto& h : graph_catalog(g.n())) {
        const auto vals = sum_spectrum(star_iso(indicator(h), g));
        for (const auto& v : vals.values()) out.union_values.insert(v);
    }

    // l+1 distinct integers between 0 and l force the full interval
    out.full_interval = !out.union_values.empty() && out.union_values.min() == Rational(0) &&
                        out.union_values.max() == out.total &&
                        Rational(static_cast<long long>(out.union_values.size())) == out.total + 1;
    return out;
}

ReductionReport check_dense(const WeightedCompleteGraph& g) {
    const auto res = dense_union_interval(g);
    ReductionReport r;
    r.predicate = "dense";
    r.spectral_values = res.union_values;
    SpectrumValues target;
    if (res.total >= Rational(0) && res.total <= Rational(100000)) {
        for (Rational i = 0; i <= res.total; i += 1) target.insert(i);
    }
    r.oracle_values = target;
    r.agree = res.full_interval;
    r.witness = res.hypothesis_holds ? "weight set is an initial interval"
                                     : "hypothesis fails: weight set is not {1..k}";
    return r;
}

bool perp(const WeightedCompleteGraph& h, const WeightedCompleteGraph& g) {
    if (h.n() != g.n()) throw std::domain_error("perp needs equal vertex counts");
    return sum_spectrum(star_iso(h, g)).size() == 1;
}

WeightIdeal even_integer_ideal() {
    return {"2Z", [](const SpectrumValues& vals) {
                for (const auto& v : vals.values())
                    if (!v.is_even_integer()) return false;
                return true;
            }};
}

std::vector<WeightedCompleteGraph> perp_class(const std::vector<WeightedCompleteGraph>& family,
                                              const std::vector<WeightedCompleteGraph>& universe,
                                              const WeightIdeal* ideal) {
    std::vector<WeightedCompleteGraph> out;
    for (const auto& candidate : universe) {
        bool ok = true;
        for (const auto& f : family) {
            if (ideal ? !ideal->contains(sum_spectrum(star_iso(f, candidate)))
                      : !perp(f, candidate)) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(candidate);
    }
    return out;
}

bool diameter2_perp_equality(const UnweightedGraph& g,
                             const std::vector<WeightedCompleteGraph>& samples) {
    if (diameter(g) > 2) throw std::domain_error("graph has diameter greater than 2");
    const auto ind = indicator(g);
    const auto dist = distance_graph(g);
    for (const auto& h : samples)
        if (perp(ind, h) != perp(dist, h)) return false;
    return true;
}

HamiltonianBound hamiltonian_bound_check(const UnweightedGraph& h, const UnweightedGraph& g) {
    if (h.n() != g.n()) throw std::domain_error("bound check needs equal vertex counts");
    const int n = g.n();
    HamiltonianBound out;
    out.lhs = hamiltonian_spectrum(h, path_graph(n)).min() - binomial(n + 1, 3) +
              hamiltonian_spectrum(complete_graph(n), g).min();
    out.rhs = hamiltonian_spectrum(h, g).min();
    out.inequality_holds = out.lhs <= out.rhs;
    out.complement_connected = is_connected(complement(h));
    out.equality_holds = out.lhs == out.rhs;
    out.g_is_path_complement = is_isomorphic(indicator(g), indicator(complement(path_graph(n))));
    out.coincides = out.equality_holds == out.g_is_path_complement;
    return out;
}

ReductionReport check_hamiltonian_bound(const UnweightedGraph& h, const UnweightedGraph& g) {
    const auto res = hamiltonian_bound_check(h, g);
    const int n = g.n();
    const Rational lhs_oracle = hamiltonian_spectrum_oracle(h, path_graph(n)).min() -
                                binomial(n + 1, 3) +
                                hamiltonian_spectrum_oracle(complete_graph(n), g).min();
    const Rational rhs_oracle = hamiltonian_spectrum_oracle(h, g).min();

    ReductionReport r;
    r.predicate = "hamiltonian_bound";
    r.spectral_flag = res.inequality_holds;
    r.oracle_flag = lhs_oracle <= rhs_oracle;
    r.agree = res.lhs == lhs_oracle && res.rhs == rhs_oracle && res.inequality_holds == *r.oracle_flag;
    r.witness = "lhs=" + res.lhs.str() + " rhs=" + res.rhs.str() +
                (res.complement_connected
                     ? std::string(", equality ") + (res.equality_holds ? "holds" : "strict") +
                           ", complement-of-path " + (res.g_is_path_complement ? "yes" : "no")
                     : std::string(", complement of H disconnected"));
    return r;
}

std::vector<UnweightedGraph> graph_catalog(int n) {
    if (n < 0 || n > 7) throw std::domain_error("graph catalog supports 0 <= n <= 7");
    const int pairs = WeightedCompleteGraph::pair_count(n);
    std::vector<std::pair<int, int>> all_pairs;
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < v; ++u) all_pairs.emplace_back(u, v);

    std::map<CanonicalKey, UnweightedGraph> classes;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < pairs; ++i)
            if (mask >> i & 1) edges.push_back(all_pairs[i]);
        const UnweightedGraph g(n, std::move(edges));
        const auto rep = canonical_representative(indicator(g));
        classes.emplace(CanonicalKey{n, rep.weights()}, level_set(rep, 1));
    }
    std::vector<UnweightedGraph> out;
    out.reserve(classes.size());
    for (auto& [key, g] : classes) out.push_back(std::move(g));
    return out;
}

GraphSet matching_family(int n) {
    GraphSet out(n, SetMode::iso);
    for (int k = 0; 2 * k <= n; ++k) out.insert(indicator(partial_matching(n, k)));
    return out;
}

GraphSet coloring_cliques(int n, int k) {
    GraphSet out(n, SetMode::iso);
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.insert(indicator(disjoint_cliques(parts)));
            return;
        }
        if (static_cast<int>(parts.size()) == k) return;
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

GraphSet bipartite_cut_family(int n, SetMode mode) {
    GraphSet out(n, mode);
    for (int m = 1; m < n; ++m) out.insert(indicator(complete_bipartite(m, n - m)));
    return out;
}

GraphSet all_graph_indicators(int n, int cap) {
    if (n <= 1) return GraphSet::single(SetMode::iso, indicator(empty_graph(n)));
    GraphSet out = star_infinity(GraphSet::single(SetMode::iso, indicator(complete_minus_edge(n))), cap);
    out.insert(indicator(complete_graph(n)));
    return out;
}

std::vector<ReductionReport> selftest(int max_n) {
    std::vector<ReductionReport> failures;
    auto keep = [&](ReductionReport r, int n, const UnweightedGraph* g) {
        if (r.agree) return;
        r.witness += " [n=" + std::to_string(n) + (g ? ", g6=" + to_graph6(*g) : "") + "]";
        failures.push_back(std::move(r));
    };

    for (int n = 2; n <= max_n; ++n) {
        const auto catalog = graph_catalog(n);
        for (const auto& g : catalog) {
            keep(check_matchings(g), n, &g);
            keep(check_degrees(g), n, &g);
            keep(check_completeness(g), n, &g);
            for (int k = 1; k <= 3; ++k) {
                keep(check_vertex_coloring(g, k), n, &g);
                keep(check_edge_coloring(g, k), n, &g);
                keep(check_edge_connectivity(g, k), n, &g);
                if (!complete_oracle(g)) keep(check_vertex_connectivity(g, k), n, &g);
            }
            if (n % 2 == 0) keep(check_bisection(g), n, &g);
            if (is_connected(g)) {
                keep(check_dense(distance_graph(g)), n, &g);
                for (const auto& h : catalog) keep(check_hamiltonian(h, g), n, &g);
            }
        }
        for (int k = 2; k < n; ++k) keep(check_ramsey(n, k), n, nullptr);
    }
    return failures;
}

}  // namespace cspec::reductions
