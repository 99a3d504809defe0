#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cspec/canon.hpp"
#include "cspec/rational.hpp"
#include "cspec/unweighted.hpp"
#include "cspec/weighted.hpp"
#include "oracles.hpp"

using namespace cspec;

TEST_CASE("rational normalization and parsing") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-1, -2) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, -2).denominator() == 2);
    CHECK(Rational(3, 1).str() == "3");
    CHECK(Rational(-7, 2).str() == "-7/2");
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse("-4") == Rational(-4));
    CHECK(Rational::parse("0/5") == Rational(0));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);

    CHECK(Rational(4).is_even_integer());
    CHECK_FALSE(Rational(3).is_even_integer());
    CHECK_FALSE(Rational(1, 2).is_even_integer());
    CHECK(Rational(1, 2) + Rational(1, 2) == Rational(1));
    CHECK(Rational(1, 3) * Rational(3, 2) == Rational(1, 2));
    CHECK(-Rational(1, 2) < Rational(0));
}

TEST_CASE("named graph constructions") {
    CHECK(complete_graph(3).edge_count() == 3);
    CHECK(complete_graph(3).n() == 3);

    const auto pm = partial_matching(5, 2);
    CHECK(pm.edges() == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
    CHECK(pm.degree(4) == 0);
    CHECK_THROWS_AS(partial_matching(5, 3), std::domain_error);

    const auto s4 = star_graph(4);
    CHECK(s4.degree(0) == 3);
    CHECK(s4.edge_count() == 3);

    CHECK(path_graph(4).edge_count() == 3);
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK_THROWS_AS(cycle_graph(2), std::domain_error);

    CHECK(complete_bipartite(2, 3).edge_count() == 6);
    CHECK(disjoint_cliques({3, 2, 1}).n() == 6);
    CHECK(disjoint_cliques({3, 2, 1}).edge_count() == 4);
    CHECK(disjoint_cliques({3, 0, 1}).n() == 4);  // zero-size parts drop out

    CHECK(make_named_graph(NamedGraphKind::star, {4}) == star_graph(4));
    CHECK(make_named_graph(NamedGraphKind::partial_matching, {5, 2}) == pm);
    // components: a 3-cycle, one edge, one isolated vertex
    const auto du = make_named_graph(NamedGraphKind::disjoint_union, {3, 2, 1});
    CHECK(du.n() == 6);
    CHECK(du.edge_count() == 4);
    CHECK_THROWS_AS(make_named_graph(NamedGraphKind::complete, {1, 2}), std::domain_error);
}

TEST_CASE("graph validation") {
    CHECK_THROWS_AS(UnweightedGraph(3, {{0, 0}}), std::domain_error);
    CHECK_THROWS_AS(UnweightedGraph(3, {{0, 3}}), std::domain_error);
    CHECK_THROWS_AS(UnweightedGraph(3, {{0, 1}, {1, 0}}), std::domain_error);
    const UnweightedGraph g(3, {{2, 0}});  // endpoints normalize to u < v
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(0, 1));
}

TEST_CASE("complement") {
    CHECK(complement(complete_graph(3)) == empty_graph(3));
    CHECK(complement(path_graph(3)).edges() == std::vector<std::pair<int, int>>{{0, 2}});
    CHECK(is_isomorphic(indicator(complement(cycle_graph(5))), indicator(cycle_graph(5))));

    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = oracle::random_unweighted(5, rng);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("indicator weighting") {
    const auto ip3 = indicator(path_graph(3));
    CHECK(ip3.weight(0, 1) == Rational(1));
    CHECK(ip3.weight(1, 2) == Rational(1));
    CHECK(ip3.weight(0, 2) == Rational(0));
    CHECK(weight_sum(indicator(complete_graph(4))) == Rational(6));
    CHECK(indicator(empty_graph(2)).weight(0, 1) == Rational(0));
}

TEST_CASE("distance weighting") {
    const auto rp3 = distance_graph(path_graph(3));
    CHECK(rp3.weight(0, 1) == Rational(1));
    CHECK(rp3.weight(1, 2) == Rational(1));
    CHECK(rp3.weight(0, 2) == Rational(2));

    const auto rc5 = distance_graph(cycle_graph(5));
    int ones = 0, twos = 0;
    for (const auto& w : rc5.weights()) {
        if (w == Rational(1)) ++ones;
        if (w == Rational(2)) ++twos;
    }
    CHECK(ones == 5);
    CHECK(twos == 5);

    CHECK_THROWS_AS(distance_graph(empty_graph(2)), std::domain_error);

    // distance 1 exactly on edges, triangle inequality throughout
    std::mt19937 rng(11);
    int connected_seen = 0;
    while (connected_seen < 20) {
        const auto g = oracle::random_unweighted(5, rng);
        if (!is_connected(g)) continue;
        ++connected_seen;
        const auto d = distance_graph(g);
        for (int v = 0; v < 5; ++v)
            for (int u = 0; u < v; ++u)
                CHECK((d.weight(u, v) == Rational(1)) == g.has_edge(u, v));
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b)
                for (int c = 0; c < 5; ++c) {
                    if (a == b || b == c || a == c) continue;
                    CHECK(d.weight(a, c) <= d.weight(a, b) + d.weight(b, c));
                }
    }
}

TEST_CASE("level sets") {
    const auto rp3 = distance_graph(path_graph(3));
    CHECK(level_set(rp3, 1) == path_graph(3));
    CHECK(level_set(rp3, 2).edges() == std::vector<std::pair<int, int>>{{0, 2}});
    CHECK(level_set(rp3, 5) == empty_graph(3));

    std::mt19937 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = oracle::random_unweighted(4, rng);
        CHECK(level_set(indicator(g), 1) == g);
    }
}

TEST_CASE("pointwise addition and scalar action") {
    const auto ip3 = indicator(path_graph(3));
    const auto twice = graph_add(ip3, ip3);
    CHECK(twice.weight(0, 1) == Rational(2));
    CHECK(twice.weight(0, 2) == Rational(0));

    CHECK(graph_add(ip3, scalar_mul(-1, ip3)) == WeightedCompleteGraph(3));
    CHECK_THROWS_AS(graph_add(ip3, WeightedCompleteGraph(4)), std::domain_error);

    CHECK(scalar_mul(0, ip3) == WeightedCompleteGraph(3));
    CHECK(scalar_mul(1, ip3) == ip3);
    CHECK(scalar_mul(half(), indicator(complete_graph(4))).weight(1, 3) == half());

    // rho(S_n) = 2 I(K_n) - I(S_n)
    for (int n = 2; n <= 5; ++n) {
        const auto expect = graph_add(scalar_mul(2, indicator(complete_graph(n))),
                                      scalar_mul(-1, indicator(star_graph(n))));
        CHECK(distance_graph(star_graph(n)) == expect);
    }
}

TEST_CASE("pointwise ring laws on random graphs") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const auto a = oracle::random_weighted(n, rng);
        const auto b = oracle::random_weighted(n, rng);
        const auto c = oracle::random_weighted(n, rng);
        CHECK(graph_add(a, b) == graph_add(b, a));
        CHECK(graph_add(graph_add(a, b), c) == graph_add(a, graph_add(b, c)));
        CHECK(scalar_mul(half(), graph_add(a, b)) ==
              graph_add(scalar_mul(half(), a), scalar_mul(half(), b)));
    }
}

TEST_CASE("edgewise product") {
    const auto ip3 = indicator(path_graph(3));
    const auto rp3 = distance_graph(path_graph(3));

    const auto prod_id = edgewise_product(ip3, rp3, VertexBijection::identity(3));
    CHECK(prod_id.weight(0, 1) == Rational(1));
    CHECK(prod_id.weight(1, 2) == Rational(1));
    CHECK(prod_id.weight(0, 2) == Rational(0));
    CHECK(weight_sum(prod_id) == Rational(2));

    const auto swap01 = VertexBijection({1, 0, 2});
    CHECK(weight_sum(edgewise_product(ip3, rp3, swap01)) == Rational(3));

    CHECK_THROWS_AS(edgewise_product(ip3, WeightedCompleteGraph(4), VertexBijection::identity(3)),
                    std::domain_error);

    std::mt19937 rng(19);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const auto h = oracle::random_weighted(n, rng);
        const auto f = oracle::random_bijection(n, rng);
        CHECK(edgewise_product(h, indicator(complete_graph(n)), f) == h);

        // independent recomputation of s(H *_f G)
        const auto g = oracle::random_weighted(n, rng);
        Rational expect;
        for (int v = 0; v < n; ++v)
            for (int u = 0; u < v; ++u) expect += h.weight(u, v) * g.weight(f(u), f(v));
        CHECK(weight_sum(edgewise_product(h, g, f)) == expect);
    }
}

TEST_CASE("product composition and flip laws") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const auto a = oracle::random_weighted(n, rng);
        const auto b = oracle::random_weighted(n, rng);
        const auto c = oracle::random_weighted(n, rng);
        const auto f = oracle::random_bijection(n, rng);
        const auto g = oracle::random_bijection(n, rng);

        // F *_f (G *_g H) = (F *_f G) *_{g o f} H
        CHECK(edgewise_product(a, edgewise_product(b, c, g), f) ==
              edgewise_product(edgewise_product(a, b, f), c, compose(g, f)));

        // H *_f G isomorphic to G *_{f^-1} H
        CHECK(is_isomorphic(edgewise_product(a, b, f), edgewise_product(b, a, f.inverse())));
    }
}

TEST_CASE("weight sums") {
    CHECK(weight_sum(distance_graph(path_graph(3))) == Rational(4));
    CHECK(weight_sum(WeightedCompleteGraph(4)) == Rational(0));
    CHECK(weight_sum(WeightedCompleteGraph(0)) == Rational(0));
    CHECK(weight_sum(WeightedCompleteGraph(1)) == Rational(0));
}

TEST_CASE("bijection basics") {
    CHECK_THROWS_AS(VertexBijection({0, 0, 1}), std::domain_error);
    CHECK_THROWS_AS(VertexBijection({0, 3, 1}), std::domain_error);
    const auto f = VertexBijection({2, 0, 1});
    CHECK(compose(f, f.inverse()) == VertexBijection::identity(3));
    CHECK(compose(f.inverse(), f) == VertexBijection::identity(3));
}

TEST_CASE("graph6 parsing and writing") {
    CHECK(parse_graph6("Bg") == path_graph(3));
    CHECK(parse_graph6("Bw") == complete_graph(3));
    CHECK(to_graph6(path_graph(3)) == "Bg");
    CHECK(parse_graph6("?") == empty_graph(0));
    CHECK(parse_graph6(">>graph6<<Bg\n") == path_graph(3));
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("B"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("~??"), std::invalid_argument);

    std::mt19937 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(rng() % 9);
        const auto g = oracle::random_unweighted(n, rng);
        CHECK(parse_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("degenerate sizes") {
    CHECK(WeightedCompleteGraph(0).weights().empty());
    CHECK(WeightedCompleteGraph(1).weights().empty());
    CHECK(indicator(empty_graph(0)).n() == 0);
    CHECK(is_connected(empty_graph(1)));
    CHECK(is_connected(empty_graph(0)));
    CHECK_FALSE(is_connected(empty_graph(2)));
    CHECK(diameter(complete_graph(4)) == 1);
    CHECK(diameter(path_graph(4)) == 3);
}
