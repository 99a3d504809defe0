#pragma once

#include "cspec/unweighted.hpp"

namespace fixtures {

/// Two 5-cycles, each carrying two chords, joined by a single bridge:
/// 3-regular on 10 vertices with 15 edges. Unlike vertex-transitive
/// cubic graphs, its vertices fall into three orbits, so its distance
/// sums take three values — the regression data for the orthogonality
/// converse.
inline cspec::UnweightedGraph bridged_pentagons() {
    std::vector<std::pair<int, int>> edges;
    for (int o : {0, 5}) {
        const int a = o, b = o + 1, c = o + 2, d = o + 3, e = o + 4;
        for (auto [u, v] : {std::pair{a, b}, {b, c}, {c, d}, {d, e}, {e, a}, {e, b}, {a, c}})
            edges.emplace_back(u, v);
    }
    edges.emplace_back(3, 8);  // bridge between the two d-vertices
    return {10, std::move(edges)};
}

}  // namespace fixtures
