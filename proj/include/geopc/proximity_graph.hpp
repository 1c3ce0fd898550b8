#pragma once

#include <span>
#include <vector>

#include "geopc/point_cloud.hpp"

namespace geopc {

struct GraphNeighbor {
    int index;
    double weight; // Euclidean edge length, strictly positive
};

// Symmetric weighted adjacency over cloud indices. Neighbor lists are sorted
// by index (the canonical form equality tests rely on); no self loops.
struct ProximityGraph {
    std::vector<std::vector<GraphNeighbor>> adjacency;
    long long edge_count = 0; // undirected edges

    int n() const { return static_cast<int>(adjacency.size()); }
    std::span<const GraphNeighbor> neighbors(int v) const { return adjacency[v]; }

    // Checks symmetry, weight positivity, sortedness and the absence of self
    // loops; throws InvariantError on violation.
    void validate() const;
};

// Exact Euclidean k-NN (brute force; ties at the k-th distance go to the
// lowest index), symmetrized by edge union. Coincident points are an error:
// zero-weight edges would break strict positivity downstream.
// Parallel over query points; output is identical for any thread count.
ProximityGraph build_knn_graph(const PointCloud& cloud, int k_graph);

// Shared helper: indices of the k nearest candidates to `center` ordered by
// (squared distance, index). `pool` defaults to all points except center.
std::vector<int> euclidean_knn_indices(const PointCloud& cloud, int center, int k,
                                       std::span<const int> pool = {});

} // namespace geopc
