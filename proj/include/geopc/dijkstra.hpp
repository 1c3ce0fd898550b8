#pragma once

#include <limits>
#include <vector>

#include "geopc/proximity_graph.hpp"

namespace geopc {

// Sentinel for unreachable vertices.
inline constexpr double infinite_distance = std::numeric_limits<double>::infinity();

// Single-source shortest paths, binary heap with lazy deletion. With strictly
// positive weights the output distances do not depend on equal-key pop order.
std::vector<double> dijkstra(const ProximityGraph& graph, int source);

} // namespace geopc
