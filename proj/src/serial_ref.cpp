#include "geopc/serial_ref.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "geopc/dijkstra.hpp"
#include "geopc/error.hpp"

namespace geopc::ref {

SampleResult fps(const PointCloud& cloud, int m, int seed_index) {
    const int n = cloud.n();
    if (m < 1 || m > n) throw ValidationError("ref::fps: m out of range");
    if (seed_index < 0 || seed_index >= n) throw ValidationError("ref::fps: seed out of range");

    SampleResult result;
    result.indices.push_back(seed_index);
    result.min_dists.push_back(std::numeric_limits<double>::infinity());
    std::vector<char> selected(n, 0);
    selected[seed_index] = 1;

    for (int step = 1; step < m; ++step) {
        double best = -1.0;
        int arg = -1;
        for (int p = 0; p < n; ++p) {
            if (selected[p]) continue;
            double md = std::numeric_limits<double>::infinity();
            for (int q : result.indices) {
                const double d2 = squared_distance(cloud.positions[p], cloud.positions[q]);
                if (d2 < md) md = d2;
            }
            if (md > best || (md == best && p < arg)) {
                best = md;
                arg = p;
            }
        }
        selected[arg] = 1;
        result.indices.push_back(arg);
        result.min_dists.push_back(std::sqrt(best));
    }
    return result;
}

ProximityGraph build_knn_graph(const PointCloud& cloud, int k_graph) {
    const int n = cloud.n();
    if (k_graph < 1 || k_graph >= n) throw ValidationError("ref::build_knn_graph: k out of range");

    std::vector<std::vector<int>> undirected(n);
    for (int i = 0; i < n; ++i) {
        std::vector<std::pair<double, int>> ranked;
        ranked.reserve(n - 1);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const double d2 = squared_distance(cloud.positions[i], cloud.positions[j]);
            if (d2 == 0.0) {
                throw ValidationError("ref::build_knn_graph: coincident points " +
                                      std::to_string(std::min(i, j)) + " and " +
                                      std::to_string(std::max(i, j)));
            }
            ranked.emplace_back(d2, j);
        }
        std::sort(ranked.begin(), ranked.end());
        for (int t = 0; t < k_graph; ++t) {
            undirected[i].push_back(ranked[t].second);
            undirected[ranked[t].second].push_back(i);
        }
    }

    ProximityGraph graph;
    graph.adjacency.resize(n);
    long long directed = 0;
    for (int v = 0; v < n; ++v) {
        auto& ids = undirected[v];
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        for (int j : ids) {
            graph.adjacency[v].push_back({j, distance(cloud.positions[v], cloud.positions[j])});
        }
        directed += static_cast<long long>(ids.size());
    }
    graph.edge_count = directed / 2;
    return graph;
}

RowMatrix all_pairs_geodesics(const ProximityGraph& graph) {
    const int n = graph.n();
    RowMatrix out(n, n);
    for (int v = 0; v < n; ++v) {
        const std::vector<double> row = dijkstra(graph, v);
        std::copy(row.begin(), row.end(), out.row(v).begin());
    }
    return out;
}

namespace {

double nearest_d2(const Vec3& p, const PointCloud& cloud) {
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < cloud.n(); ++j) {
        const double d2 = squared_distance(p, cloud.positions[j]);
        if (d2 < best) best = d2;
    }
    return best;
}

} // namespace

double chamfer(const PointCloud& p, const PointCloud& q, ChamferVariant variant) {
    if (p.n() < 1 || q.n() < 1) throw ValidationError("ref::chamfer: empty cloud");
    double forward = 0.0;
    for (int i = 0; i < p.n(); ++i) {
        const double d2 = nearest_d2(p.positions[i], q);
        forward += variant == ChamferVariant::l2 ? d2 : std::sqrt(d2);
    }
    forward /= static_cast<double>(p.n());
    double backward = 0.0;
    for (int j = 0; j < q.n(); ++j) {
        const double d2 = nearest_d2(q.positions[j], p);
        backward += variant == ChamferVariant::l2 ? d2 : std::sqrt(d2);
    }
    backward /= static_cast<double>(q.n());
    return variant == ChamferVariant::l2 ? forward + backward : 0.5 * (forward + backward);
}

double f_score(const PointCloud& p, const PointCloud& q, double threshold) {
    if (p.n() < 1 || q.n() < 1) throw ValidationError("ref::f_score: empty cloud");
    if (!(threshold > 0.0)) throw ValidationError("ref::f_score: threshold must be positive");
    const double t2 = threshold * threshold;
    long hit_p = 0;
    for (int i = 0; i < p.n(); ++i) {
        if (nearest_d2(p.positions[i], q) <= t2) ++hit_p;
    }
    long hit_q = 0;
    for (int j = 0; j < q.n(); ++j) {
        if (nearest_d2(q.positions[j], p) <= t2) ++hit_q;
    }
    const double precision = static_cast<double>(hit_p) / p.n();
    const double recall = static_cast<double>(hit_q) / q.n();
    if (precision + recall == 0.0) return 0.0;
    return 2.0 * precision * recall / (precision + recall);
}

double approx_geodesic_full(const GeodesicEngine& engine, int i, int j) {
    if (i < 0 || i >= engine.n() || j < 0 || j >= engine.n()) {
        throw ValidationError("ref::approx_geodesic_full: index out of range");
    }
    if (i == j) return 0.0;
    const int m = engine.m();
    double best = infinite_distance;
    for (int u = 0; u < m; ++u) {
        const double leg_iu = engine.point_to_anchor.at(i, u);
        for (int v = 0; v < m; ++v) {
            // Same grouping as the engine: anchor + (leg_i + leg_j).
            const double term = engine.anchors.at(u, v) + (leg_iu + engine.point_to_anchor.at(j, v));
            if (term < best) best = term;
        }
    }
    return best;
}

std::vector<double> anchor_distance_vector(const GeodesicEngine& engine, int i) {
    const int m = engine.m();
    std::vector<double> out(m, infinite_distance);
    for (int v = 0; v < m; ++v) {
        for (int u = 0; u < m; ++u) {
            const double cand = engine.point_to_anchor.at(i, u) + engine.anchors.at(u, v);
            if (cand < out[v]) out[v] = cand;
        }
    }
    return out;
}

} // namespace geopc::ref
