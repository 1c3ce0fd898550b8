#pragma once

#include "geopc/fps.hpp"
#include "geopc/geodesic_engine.hpp"
#include "geopc/metrics.hpp"
#include "geopc/proximity_graph.hpp"
#include "geopc/row_matrix.hpp"

// Plain serial reference implementations. These are the straightforward,
// obviously-correct loops the parallel kernels are checked against (the unit
// suite asserts bit-identical agreement) and the baseline for the kernel
// benchmark. They deliberately share the primitive distance expressions with
// the parallel paths so agreement is exact, not approximate.
namespace geopc::ref {

// Recomputes the maximin from scratch at every step, O(n * m^2).
SampleResult fps(const PointCloud& cloud, int m, int seed_index = 0);

ProximityGraph build_knn_graph(const PointCloud& cloud, int k_graph);

// One Dijkstra row per vertex, serial.
RowMatrix all_pairs_geodesics(const ProximityGraph& graph);

double chamfer(const PointCloud& p, const PointCloud& q, ChamferVariant variant);
double f_score(const PointCloud& p, const PointCloud& q, double threshold);

// Literal minimization over every anchor pair, ignoring candidate pruning.
// Equals GeodesicEngine::approx_geodesic when the engine runs with s = M.
double approx_geodesic_full(const GeodesicEngine& engine, int i, int j);

std::vector<double> anchor_distance_vector(const GeodesicEngine& engine, int i);

} // namespace geopc::ref
