#pragma once

#include <span>
#include <vector>

#include "geopc/geodesic_engine.hpp"
#include "geopc/mlp.hpp"
#include "geopc/point_cloud.hpp"
#include "geopc/row_matrix.hpp"

namespace geopc {

struct KnnResult {
    std::vector<int> indices;
    std::vector<double> distances;
};

// The k pool members with the smallest approximate geodesic to `center`,
// ascending, ties broken by lowest index. Unreachable candidates (infinite
// distance) rank after every finite one and are ordered among themselves by
// Euclidean distance. The center itself is never returned. `pool` defaults to
// all points except center.
KnnResult geodesic_knn(const GeodesicEngine& engine, int center, int k,
                       std::span<const int> pool = {});

// Where the neighbor pool of a level's centers comes from.
enum class NeighborPool { full_cloud, level_subset };

// One hierarchy level: FPS centers, their geodesic k-NN into the cloud, and
// aggregated local descriptors.
struct GroupedLevel {
    std::vector<int> center_indices;
    std::vector<int> neighbor_indices;      // flat, centers x k
    std::vector<double> neighbor_geodesics; // flat, centers x k
    RowMatrix descriptors;                  // centers x out_width
    int k = 0;
};

// Hierarchical grouping: level 0 samples level_sizes[0] centers from the full
// cloud by FPS; each subsequent level re-runs FPS over the previous level's
// center set (seeded at its first center), so center sets are nested.
// Neighbors are drawn from the full cloud by default, or from the previous
// level's centers with NeighborPool::level_subset.
//
// Descriptor rule: per center c, the channelwise maximum over its neighbors j
// of MLP([f_j, x_j - x_c, d_g(c, j)]). Neighbor features are the raw cloud
// features at every level (width C, possibly 0), so one shared MLP of input
// width C + 4 serves all levels. Unreachable neighbors contribute their
// Euclidean distance in place of the infinite geodesic.
std::vector<GroupedLevel> build_grouping_levels(const PointCloud& cloud,
                                                const GeodesicEngine& engine,
                                                std::span<const int> level_sizes, int k,
                                                const MlpParams& descriptor_mlp,
                                                int fps_seed = 0,
                                                NeighborPool pool = NeighborPool::full_cloud);

// Mean over centers of the fraction of neighbors sharing the center's part
// id. neighbor_indices is flat, centers x k.
double sheet_purity(std::span<const int> center_indices, std::span<const int> neighbor_indices,
                    int k, std::span<const int> part_ids);

} // namespace geopc
