#include "geopc/geodesic_engine.hpp"

#include <algorithm>
#include <iostream>
#include <utility>

#include "geopc/error.hpp"
#include "geopc/fps.hpp"

namespace geopc {

LegMetric leg_metric_from_name(std::string_view name) {
    if (name == "euclidean") return LegMetric::euclidean;
    if (name == "graph") return LegMetric::graph;
    throw ValidationError("unknown leg metric '" + std::string(name) +
                          "' (expected euclidean or graph)");
}

const char* to_string(LegMetric metric) {
    return metric == LegMetric::euclidean ? "euclidean" : "graph";
}

double GeodesicEngine::approx_geodesic(int i, int j) const {
    const int count = n();
    if (i < 0 || i >= count || j < 0 || j >= count) {
        throw ValidationError("approx_geodesic: index out of range");
    }
    if (i == j) return 0.0;

    const int s = candidate_count;
    const int* cand_i = candidates.data() + static_cast<std::size_t>(i) * s;
    const int* cand_j = candidates.data() + static_cast<std::size_t>(j) * s;
    const double* legs_i = point_to_anchor.values.data() + static_cast<std::size_t>(i) * m();
    const double* legs_j = point_to_anchor.values.data() + static_cast<std::size_t>(j) * m();

    double best = infinite_distance;
    for (int a = 0; a < s; ++a) {
        const int u = cand_i[a];
        const double leg_iu = legs_i[u];
        const double* anchor_row = anchors.matrix.values.data() + static_cast<std::size_t>(u) * m();
        for (int b = 0; b < s; ++b) {
            const int v = cand_j[b];
            const double term = anchor_row[v] + (leg_iu + legs_j[v]);
            if (term < best) best = term;
        }
    }
    return best;
}

std::vector<double> GeodesicEngine::anchor_distance_vector(int i) const {
    if (i < 0 || i >= n()) {
        throw ValidationError("anchor_distance_vector: index out of range");
    }
    const int count = m();
    const double* legs = point_to_anchor.values.data() + static_cast<std::size_t>(i) * count;
    std::vector<double> out(count, infinite_distance);
    for (int u = 0; u < count; ++u) {
        const double leg = legs[u];
        const double* anchor_row = anchors.matrix.values.data() + static_cast<std::size_t>(u) * count;
        for (int v = 0; v < count; ++v) {
            const double cand = leg + anchor_row[v];
            if (cand < out[v]) out[v] = cand;
        }
    }
    return out;
}

GeodesicEngine build_engine(const PointCloud& cloud, const ProximityGraph& graph,
                            int m_anchors, LegMetric leg_metric, int s, int fps_seed) {
    cloud.validate();
    const int n = cloud.n();
    if (graph.n() != n) {
        throw ValidationError("build_engine: graph has " + std::to_string(graph.n()) +
                              " vertices, cloud has " + std::to_string(n));
    }
    if (m_anchors < 1 || m_anchors > n) {
        throw ValidationError("build_engine: m_anchors = " + std::to_string(m_anchors) +
                              " out of range [1, " + std::to_string(n) + "]");
    }
    if (s < 1) throw ValidationError("build_engine: candidate count s must be >= 1");
    s = std::min(s, m_anchors);

    GeodesicEngine engine;
    engine.positions = cloud.positions;
    engine.leg_metric = leg_metric;
    engine.candidate_count = s;
    engine.anchors.anchor_indices = fps(cloud, m_anchors, fps_seed).indices;

    const int m = m_anchors;
    const std::vector<int>& anchor_ids = engine.anchors.anchor_indices;

    // One shortest-path row per anchor; rows are disjoint, so the loop is
    // safe to parallelize and deterministic.
    std::vector<std::vector<double>> rows(m);
#pragma omp parallel for schedule(dynamic)
    for (int a = 0; a < m; ++a) {
        rows[a] = dijkstra(graph, anchor_ids[a]);
    }

    engine.anchors.matrix = RowMatrix(m, m);
    bool unreachable = false;
    for (int u = 0; u < m; ++u) {
        engine.anchors.matrix.at(u, u) = 0.0;
        for (int v = u + 1; v < m; ++v) {
            // Canonical direction: the run rooted at the smaller vertex id.
            // Keeps the matrix exactly symmetric and independent of m.
            const double d = anchor_ids[u] <= anchor_ids[v] ? rows[u][anchor_ids[v]]
                                                            : rows[v][anchor_ids[u]];
            engine.anchors.matrix.at(u, v) = d;
            engine.anchors.matrix.at(v, u) = d;
            if (d == infinite_distance) unreachable = true;
        }
    }
    engine.has_unreachable_anchor_pairs = unreachable;
    if (unreachable) {
        std::cerr << "warning: build_engine: some anchor pairs are unreachable "
                     "(disconnected proximity graph)\n";
    }

    engine.point_to_anchor = RowMatrix(n, m);
    if (leg_metric == LegMetric::euclidean) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i) {
            double* out = engine.point_to_anchor.values.data() + static_cast<std::size_t>(i) * m;
            for (int a = 0; a < m; ++a) {
                out[a] = distance(cloud.positions[i], cloud.positions[anchor_ids[a]]);
            }
        }
    } else {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i) {
            double* out = engine.point_to_anchor.values.data() + static_cast<std::size_t>(i) * m;
            for (int a = 0; a < m; ++a) {
                out[a] = rows[a][i];
            }
        }
    }

    // Per-point candidate anchors, ordered by (leg, anchor ordinal).
    engine.candidates.resize(static_cast<std::size_t>(n) * s);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        std::vector<std::pair<double, int>> ranked(m);
        const double* legs = engine.point_to_anchor.values.data() + static_cast<std::size_t>(i) * m;
        for (int a = 0; a < m; ++a) ranked[a] = {legs[a], a};
        std::partial_sort(ranked.begin(), ranked.begin() + s, ranked.end());
        int* out = engine.candidates.data() + static_cast<std::size_t>(i) * s;
        for (int t = 0; t < s; ++t) out[t] = ranked[t].second;
    }
    return engine;
}

double exact_geodesic_oracle(const ProximityGraph& graph, int i, int j) {
    if (j < 0 || j >= graph.n()) {
        throw ValidationError("exact_geodesic_oracle: index out of range");
    }
    return dijkstra(graph, i)[j];
}

} // namespace geopc
