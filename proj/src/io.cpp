#include "cspec/io.hpp"

#include <stdexcept>

#include "cspec/canon.hpp"

namespace cspec {

Json to_json(const UnweightedGraph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
    return Json{{"n", g.n()}, {"edges", std::move(edges)}};
}

UnweightedGraph unweighted_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("unweighted graph JSON needs \"n\" and \"edges\"");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return {j.at("n").get<int>(), std::move(edges)};
}

Json to_json(const WeightedCompleteGraph& g) {
    Json weights = Json::array();
    for (int v = 0; v < g.n(); ++v)
        for (int u = 0; u < v; ++u)
            weights.push_back(Json{{"u", u}, {"v", v}, {"w", g.weight(u, v).str()}});
    return Json{{"n", g.n()}, {"weights", std::move(weights)}};
}

WeightedCompleteGraph weighted_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("weights"))
        throw std::invalid_argument("weighted graph JSON needs \"n\" and \"weights\"");
    const int n = j.at("n").get<int>();
    WeightedCompleteGraph g(n);
    std::vector<bool> seen(WeightedCompleteGraph::pair_count(n), false);
    for (const auto& entry : j.at("weights")) {
        const int u = entry.at("u").get<int>();
        const int v = entry.at("v").get<int>();
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw std::invalid_argument("bad vertex pair in weights");
        const int idx = WeightedCompleteGraph::pair_index(u, v);
        if (seen[idx]) throw std::invalid_argument("duplicate pair in weights");
        seen[idx] = true;
        g.set_weight(u, v, Rational::parse(entry.at("w").get<std::string>()));
    }
    for (bool s : seen)
        if (!s) throw std::invalid_argument("weighted graph JSON must cover every pair");
    return g;
}

Json to_json(const SpectrumValues& vals) {
    Json out = Json::array();
    for (const auto& v : vals.values()) out.push_back(v.str());
    return out;
}

Json to_json(const GraphSet& set) {
    Json out = Json::array();
    for (const auto& m : set.members()) {
        if (set.mode() == SetMode::labeled)
            out.push_back(to_json(m));
        else
            out.push_back(CanonicalKey{m.n(), m.weights()}.str());
    }
    return out;
}

Json to_json(const reductions::ReductionReport& report) {
    Json out;
    out["predicate"] = report.predicate;
    if (report.spectral_flag)
        out["spectral"] = *report.spectral_flag;
    else if (report.spectral_values)
        out["spectral"] = to_json(*report.spectral_values);
    else
        out["spectral"] = nullptr;
    if (report.oracle_flag)
        out["oracle"] = *report.oracle_flag;
    else if (report.oracle_values)
        out["oracle"] = to_json(*report.oracle_values);
    else
        out["oracle"] = nullptr;
    out["agree"] = report.agree;
    out["witness"] = report.witness.empty() ? Json() : Json(report.witness);
    return out;
}

UnweightedGraph parse_unweighted(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::invalid_argument("empty graph input");
    if (text[first] == '{') return unweighted_from_json(Json::parse(text));
    return parse_graph6(text);
}

}  // namespace cspec
