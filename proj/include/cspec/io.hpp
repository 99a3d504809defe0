#pragma once

#include <string>

#include <json.hpp>

#include "cspec/graph_set.hpp"
#include "cspec/reductions.hpp"
#include "cspec/unweighted.hpp"
#include "cspec/weighted.hpp"

namespace cspec {

using Json = nlohmann::ordered_json;

// {"n": int, "edges": [[u,v],...]}
Json to_json(const UnweightedGraph& g);
UnweightedGraph unweighted_from_json(const Json& j);

// {"n": int, "weights": [{"u":..,"v":..,"w":"p/q"},...]} with every pair present
Json to_json(const WeightedCompleteGraph& g);
WeightedCompleteGraph weighted_from_json(const Json& j);

/// Sorted array of "p/q" strings.
Json to_json(const SpectrumValues& vals);

/// Labeled sets serialize as arrays of weighted-graph objects, iso sets
/// as arrays of canonical-key strings.
Json to_json(const GraphSet& set);

Json to_json(const reductions::ReductionReport& report);

/// Accepts graph6 or the JSON object form.
UnweightedGraph parse_unweighted(const std::string& text);

}  // namespace cspec
