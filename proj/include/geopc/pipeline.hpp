#pragma once

#include <json.hpp>

namespace geopc {

// Runs the full chain on a JSON config: load or generate a cloud, build the
// proximity graph and geodesic engine, group hierarchically, run the
// attention forward pass per level, append the anchor-distance embedding, and
// (optionally) score against a reference cloud. Deterministic for a fixed
// config. Config schema violations are reported with their field path.
nlohmann::json run_pipeline(const nlohmann::json& config);

} // namespace geopc
