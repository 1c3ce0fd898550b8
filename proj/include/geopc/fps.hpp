#pragma once

#include <vector>

#include "geopc/point_cloud.hpp"

namespace geopc {

// Farthest point sampling output. indices[0] is the seed; indices[t]
// maximizes the minimum distance to the selected prefix, ties broken by
// lowest index. min_dists[t] is the maximin value achieved at step t
// (+infinity at t = 0, where there is no prior selection to measure
// against); the sequence is non-increasing.
struct SampleResult {
    std::vector<int> indices;
    std::vector<double> min_dists;
};

// Greedy maximin selection, O(n * m). The per-step scan runs under OpenMP;
// the winner is the unique (distance desc, index asc) maximum, so results are
// identical for any thread count.
SampleResult fps(const PointCloud& cloud, int m, int seed_index = 0);

} // namespace geopc
