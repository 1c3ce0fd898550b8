#include "geopc/json_io.hpp"

#include <algorithm>

#include "geopc/error.hpp"

namespace geopc {

using nlohmann::json;

json distance_to_json(double d) {
    if (d == infinite_distance) return json("inf");
    return json(d);
}

double distance_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return infinite_distance;
        throw ValidationError("distance field: expected a number or \"inf\"");
    }
    if (!j.is_number()) throw ValidationError("distance field: expected a number or \"inf\"");
    return j.get<double>();
}

json graph_to_json(const ProximityGraph& graph) {
    json edges = json::array();
    for (int v = 0; v < graph.n(); ++v) {
        for (const GraphNeighbor& nb : graph.adjacency[v]) {
            if (nb.index > v) edges.push_back(json::array({v, nb.index, nb.weight}));
        }
    }
    return json{{"n", graph.n()}, {"edges", edges}};
}

ProximityGraph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
        throw ValidationError("graph json: expected {n, edges}");
    }
    const int n = j.at("n").get<int>();
    if (n < 1) throw ValidationError("graph json: n must be >= 1");
    ProximityGraph graph;
    graph.adjacency.resize(n);
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 3) throw ValidationError("graph json: bad edge record");
        const int a = e[0].get<int>();
        const int b = e[1].get<int>();
        const double w = e[2].get<double>();
        if (a < 0 || a >= n || b < 0 || b >= n || a == b || !(w > 0.0)) {
            throw ValidationError("graph json: invalid edge");
        }
        graph.adjacency[a].push_back({b, w});
        graph.adjacency[b].push_back({a, w});
        ++graph.edge_count;
    }
    for (auto& list : graph.adjacency) {
        std::sort(list.begin(), list.end(),
                  [](const GraphNeighbor& x, const GraphNeighbor& y) { return x.index < y.index; });
    }
    graph.validate();
    return graph;
}

json engine_to_json(const GeodesicEngine& engine) {
    json matrix = json::array();
    for (int u = 0; u < engine.m(); ++u) {
        json row = json::array();
        for (int v = 0; v < engine.m(); ++v) {
            row.push_back(distance_to_json(engine.anchors.at(u, v)));
        }
        matrix.push_back(std::move(row));
    }
    return json{{"anchor_indices", engine.anchors.anchor_indices},
                {"anchor_matrix", matrix},
                {"leg_metric", to_string(engine.leg_metric)},
                {"s", engine.candidate_count}};
}

json mlp_params_to_json(const MlpParams& params) {
    return json{{"in_width", params.in_width},   {"hidden_width", params.hidden_width},
                {"out_width", params.out_width}, {"w1", params.w1},
                {"b1", params.b1},               {"w2", params.w2},
                {"b2", params.b2}};
}

MlpParams mlp_params_from_json(const json& j) {
    MlpParams p;
    for (const char* key : {"in_width", "hidden_width", "out_width", "w1", "b1", "w2", "b2"}) {
        if (!j.contains(key)) {
            throw ValidationError(std::string("mlp params json: missing field '") + key + "'");
        }
    }
    p.in_width = j.at("in_width").get<int>();
    p.hidden_width = j.at("hidden_width").get<int>();
    p.out_width = j.at("out_width").get<int>();
    p.w1 = j.at("w1").get<std::vector<double>>();
    p.b1 = j.at("b1").get<std::vector<double>>();
    p.w2 = j.at("w2").get<std::vector<double>>();
    p.b2 = j.at("b2").get<std::vector<double>>();
    p.validate();
    return p;
}

json metric_report_to_json(const MetricReport& report) {
    return json{{"cd_l1", report.cd_l1},
                {"cd_l2", report.cd_l2},
                {"f_score", report.f_score},
                {"threshold", report.threshold}};
}

json grouped_level_to_json(const GroupedLevel& level) {
    const int centers = static_cast<int>(level.center_indices.size());
    json neighbors = json::array();
    json geodesics = json::array();
    for (int c = 0; c < centers; ++c) {
        json row = json::array();
        json drow = json::array();
        for (int t = 0; t < level.k; ++t) {
            row.push_back(level.neighbor_indices[static_cast<std::size_t>(c) * level.k + t]);
            drow.push_back(
                distance_to_json(level.neighbor_geodesics[static_cast<std::size_t>(c) * level.k + t]));
        }
        neighbors.push_back(std::move(row));
        geodesics.push_back(std::move(drow));
    }
    json descriptors = json::array();
    for (int c = 0; c < centers; ++c) {
        descriptors.push_back(std::vector<double>(level.descriptors.row(c).begin(),
                                                  level.descriptors.row(c).end()));
    }
    return json{{"k", level.k},
                {"center_indices", level.center_indices},
                {"neighbor_indices", neighbors},
                {"neighbor_geodesics", geodesics},
                {"descriptor_width", level.descriptors.cols},
                {"descriptors", descriptors}};
}

} // namespace geopc
