#pragma once

#include <json.hpp>

#include "geopc/geodesic_engine.hpp"
#include "geopc/grouping.hpp"
#include "geopc/metrics.hpp"
#include "geopc/mlp.hpp"
#include "geopc/proximity_graph.hpp"

namespace geopc {

// Distances serialize as numbers, unreachable entries as the string "inf".
nlohmann::json distance_to_json(double d);
double distance_from_json(const nlohmann::json& j);

// {n, edges: [[i, j, w], ...]} with i < j, sorted lexicographically.
nlohmann::json graph_to_json(const ProximityGraph& graph);
ProximityGraph graph_from_json(const nlohmann::json& j);

// {anchor_indices, anchor_matrix, leg_metric, s}
nlohmann::json engine_to_json(const GeodesicEngine& engine);

// {in_width, hidden_width, out_width, w1, b1, w2, b2} with flat row-major
// weight arrays.
nlohmann::json mlp_params_to_json(const MlpParams& params);
MlpParams mlp_params_from_json(const nlohmann::json& j);

nlohmann::json metric_report_to_json(const MetricReport& report);

nlohmann::json grouped_level_to_json(const GroupedLevel& level);

} // namespace geopc
