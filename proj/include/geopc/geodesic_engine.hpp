#pragma once

#include <string_view>
#include <vector>

#include "geopc/dijkstra.hpp"
#include "geopc/point_cloud.hpp"
#include "geopc/proximity_graph.hpp"
#include "geopc/row_matrix.hpp"

namespace geopc {

// Metric used for the point-to-anchor legs. euclidean is the default
// (straight-line legs); graph routes the legs through the proximity graph,
// which keeps estimates on-manifold and makes the saturated configuration
// (every point an anchor) reproduce graph geodesics exactly.
enum class LegMetric { euclidean, graph };

LegMetric leg_metric_from_name(std::string_view name);
const char* to_string(LegMetric metric);

// FPS-selected anchors plus their pairwise shortest-path matrix.
// The matrix is exactly symmetric with a zero diagonal: the (u, v) entry is
// taken from the Dijkstra run rooted at the anchor with the smaller vertex
// id, so nested anchor prefixes agree bit-for-bit. Unreachable pairs hold the
// infinity sentinel. Finite entries satisfy the triangle inequality and never
// undercut the straight-line distance between the two anchors.
struct AnchorSet {
    std::vector<int> anchor_indices;
    RowMatrix matrix; // m x m

    int m() const { return static_cast<int>(anchor_indices.size()); }
    double at(int u, int v) const { return matrix.at(u, v); }
};

// Read-only query object answering approximate geodesic distances by routing
// through anchor pairs. Immutable after build_engine; safe for unlimited
// concurrent queries.
struct GeodesicEngine {
    std::vector<Vec3> positions;  // copy of the cloud positions
    AnchorSet anchors;
    RowMatrix point_to_anchor;    // n x m leg distances
    std::vector<int> candidates;  // n x s: the s nearest anchors per point
    LegMetric leg_metric = LegMetric::euclidean;
    int candidate_count = 0;      // s
    bool has_unreachable_anchor_pairs = false;

    int n() const { return static_cast<int>(positions.size()); }
    int m() const { return anchors.m(); }

    // min over anchor pairs (u from i's candidates, v from j's candidates) of
    // leg(i,u) + anchor(u,v) + leg(j,v); 0 when i == j (the literal routed
    // formula would report twice the distance to the nearest anchor, which is
    // not a distance); infinity when no routed path exists. Each term is
    // evaluated as anchor + (leg_i + leg_j), so swapping i and j enumerates
    // bitwise-identical sums and the result is exactly symmetric.
    double approx_geodesic(int i, int j) const;

    // Routed distance from point i to every anchor: component v is
    // min over u of leg(i,u) + anchor(u,v). Zero at the point's own column
    // when i is an anchor.
    std::vector<double> anchor_distance_vector(int i) const;
};

// Anchors come from fps(cloud, m_anchors, fps_seed); the anchor matrix is
// filled by one Dijkstra run per anchor (runs execute in parallel, one output
// row each). s is clamped into [1, m_anchors]. Emits a warning on stderr when
// some anchor pair is unreachable.
GeodesicEngine build_engine(const PointCloud& cloud, const ProximityGraph& graph,
                            int m_anchors, LegMetric leg_metric, int s, int fps_seed = 0);

// Full single-source Dijkstra from i, read entry j. Test/benchmark oracle.
double exact_geodesic_oracle(const ProximityGraph& graph, int i, int j);

} // namespace geopc
