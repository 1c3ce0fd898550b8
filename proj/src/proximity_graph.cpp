#include "geopc/proximity_graph.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "geopc/error.hpp"

namespace geopc {

void ProximityGraph::validate() const {
    const int nv = n();
    long long directed = 0;
    for (int v = 0; v < nv; ++v) {
        int prev = -1;
        for (const GraphNeighbor& nb : adjacency[v]) {
            if (nb.index < 0 || nb.index >= nv) {
                throw InvariantError("graph: neighbor index out of range");
            }
            if (nb.index == v) throw InvariantError("graph: self loop at vertex " + std::to_string(v));
            if (nb.index <= prev) throw InvariantError("graph: neighbor list not sorted/unique");
            if (!(nb.weight > 0.0) || !std::isfinite(nb.weight)) {
                throw InvariantError("graph: non-positive or non-finite edge weight");
            }
            // Symmetry: the mirrored entry must exist with the same weight.
            const auto& other = adjacency[nb.index];
            const auto it = std::lower_bound(
                other.begin(), other.end(), v,
                [](const GraphNeighbor& a, int idx) { return a.index < idx; });
            if (it == other.end() || it->index != v || it->weight != nb.weight) {
                throw InvariantError("graph: asymmetric edge " + std::to_string(v) + "-" +
                                     std::to_string(nb.index));
            }
            prev = nb.index;
            ++directed;
        }
    }
    if (directed != 2 * edge_count) {
        throw InvariantError("graph: edge_count does not match adjacency");
    }
}

std::vector<int> euclidean_knn_indices(const PointCloud& cloud, int center, int k,
                                       std::span<const int> pool) {
    std::vector<int> candidates;
    if (pool.empty()) {
        candidates.reserve(cloud.n() - 1);
        for (int j = 0; j < cloud.n(); ++j) {
            if (j != center) candidates.push_back(j);
        }
    } else {
        candidates.reserve(pool.size());
        for (int j : pool) {
            if (j != center) candidates.push_back(j);
        }
    }
    if (k < 1 || k > static_cast<int>(candidates.size())) {
        throw ValidationError("euclidean_knn: k = " + std::to_string(k) +
                              " too large for candidate pool of size " +
                              std::to_string(candidates.size()));
    }
    std::vector<std::pair<double, int>> ranked;
    ranked.reserve(candidates.size());
    const Vec3 c = cloud.positions[center];
    for (int j : candidates) {
        ranked.emplace_back(squared_distance(c, cloud.positions[j]), j);
    }
    std::sort(ranked.begin(), ranked.end());
    std::vector<int> out(k);
    for (int t = 0; t < k; ++t) out[t] = ranked[t].second;
    return out;
}

ProximityGraph build_knn_graph(const PointCloud& cloud, int k_graph) {
    cloud.validate();
    const int n = cloud.n();
    if (k_graph < 1 || k_graph >= n) {
        throw ValidationError("build_knn_graph: k_graph = " + std::to_string(k_graph) +
                              " out of range [1, " + std::to_string(n - 1) + ")");
    }

    // Phase 1: directed k-NN per point, independent rows.
    std::vector<std::vector<int>> nearest(n);
    std::vector<std::pair<int, int>> duplicate(n, {-1, -1});

#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        std::vector<std::pair<double, int>> ranked;
        ranked.reserve(n - 1);
        const Vec3 pi = cloud.positions[i];
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const double d2 = squared_distance(pi, cloud.positions[j]);
            if (d2 == 0.0 && duplicate[i].first < 0) {
                duplicate[i] = {std::min(i, j), std::max(i, j)};
            }
            ranked.emplace_back(d2, j);
        }
        std::partial_sort(ranked.begin(), ranked.begin() + k_graph, ranked.end());
        nearest[i].resize(k_graph);
        for (int t = 0; t < k_graph; ++t) nearest[i][t] = ranked[t].second;
    }

    std::pair<int, int> offending = {-1, -1};
    for (int i = 0; i < n; ++i) {
        if (duplicate[i].first >= 0 &&
            (offending.first < 0 || duplicate[i] < offending)) {
            offending = duplicate[i];
        }
    }
    if (offending.first >= 0) {
        throw ValidationError("build_knn_graph: coincident points " +
                              std::to_string(offending.first) + " and " +
                              std::to_string(offending.second) +
                              " (deduplicate before building the graph)");
    }

    // Phase 2: union symmetrization. Serial and deterministic.
    std::vector<std::vector<int>> undirected(n);
    for (int i = 0; i < n; ++i) {
        for (int j : nearest[i]) {
            undirected[i].push_back(j);
            undirected[j].push_back(i);
        }
    }

    ProximityGraph graph;
    graph.adjacency.resize(n);
    long long directed_total = 0;
    for (int v = 0; v < n; ++v) {
        auto& ids = undirected[v];
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        graph.adjacency[v].reserve(ids.size());
        for (int j : ids) {
            graph.adjacency[v].push_back({j, distance(cloud.positions[v], cloud.positions[j])});
        }
        directed_total += static_cast<long long>(ids.size());
    }
    graph.edge_count = directed_total / 2;
    return graph;
}

} // namespace geopc
