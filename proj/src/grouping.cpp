#include "geopc/grouping.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "geopc/error.hpp"
#include "geopc/fps.hpp"

namespace geopc {

namespace {

struct RankedCandidate {
    double geodesic;
    double euclidean; // fallback order among unreachable candidates
    int index;
};

bool rank_less(const RankedCandidate& a, const RankedCandidate& b) {
    const bool a_inf = a.geodesic == infinite_distance;
    const bool b_inf = b.geodesic == infinite_distance;
    if (a_inf != b_inf) return b_inf;
    if (!a_inf) {
        if (a.geodesic != b.geodesic) return a.geodesic < b.geodesic;
        return a.index < b.index;
    }
    if (a.euclidean != b.euclidean) return a.euclidean < b.euclidean;
    return a.index < b.index;
}

} // namespace

KnnResult geodesic_knn(const GeodesicEngine& engine, int center, int k,
                       std::span<const int> pool) {
    const int n = engine.n();
    if (center < 0 || center >= n) throw ValidationError("geodesic_knn: center out of range");

    std::vector<RankedCandidate> ranked;
    auto push = [&](int j) {
        if (j == center) return;
        if (j < 0 || j >= n) throw ValidationError("geodesic_knn: pool index out of range");
        ranked.push_back({engine.approx_geodesic(center, j),
                          distance(engine.positions[center], engine.positions[j]), j});
    };
    if (pool.empty()) {
        ranked.reserve(n - 1);
        for (int j = 0; j < n; ++j) push(j);
    } else {
        ranked.reserve(pool.size());
        for (int j : pool) push(j);
    }

    if (k < 1 || k > static_cast<int>(ranked.size())) {
        throw ValidationError("geodesic_knn: k = " + std::to_string(k) +
                              " too large for candidate pool of size " +
                              std::to_string(ranked.size()));
    }
    std::sort(ranked.begin(), ranked.end(), rank_less);

    KnnResult out;
    out.indices.resize(k);
    out.distances.resize(k);
    for (int t = 0; t < k; ++t) {
        out.indices[t] = ranked[t].index;
        out.distances[t] = ranked[t].geodesic;
    }
    return out;
}

std::vector<GroupedLevel> build_grouping_levels(const PointCloud& cloud,
                                                const GeodesicEngine& engine,
                                                std::span<const int> level_sizes, int k,
                                                const MlpParams& descriptor_mlp,
                                                int fps_seed, NeighborPool pool) {
    cloud.validate();
    const int n = cloud.n();
    if (engine.n() != n) throw ValidationError("build_grouping_levels: engine/cloud size mismatch");
    if (level_sizes.empty()) throw ValidationError("build_grouping_levels: no level sizes");
    if (level_sizes.front() > n) {
        throw ValidationError("build_grouping_levels: first level size exceeds cloud size");
    }
    for (std::size_t l = 1; l < level_sizes.size(); ++l) {
        if (level_sizes[l] >= level_sizes[l - 1]) {
            throw ValidationError("build_grouping_levels: level sizes must be strictly decreasing");
        }
        if (level_sizes[l] < 1) throw ValidationError("build_grouping_levels: level size must be >= 1");
    }
    if (k < 1 || k >= n) {
        throw ValidationError("build_grouping_levels: k = " + std::to_string(k) +
                              " out of range [1, " + std::to_string(n) + ")");
    }
    if (pool == NeighborPool::level_subset) {
        // Sub-level pools are the previous level's centers minus the center
        // itself; k must fit the smallest such pool.
        for (std::size_t l = 1; l < level_sizes.size(); ++l) {
            if (k > level_sizes[l - 1] - 1) {
                throw ValidationError("build_grouping_levels: k = " + std::to_string(k) +
                                      " exceeds the level " + std::to_string(l) +
                                      " neighbor pool of " + std::to_string(level_sizes[l - 1] - 1));
            }
        }
    }
    descriptor_mlp.validate();
    const int c_in = cloud.feature_width;
    if (descriptor_mlp.in_width != c_in + 4) {
        throw ValidationError("build_grouping_levels: descriptor mlp input width " +
                              std::to_string(descriptor_mlp.in_width) + ", need " +
                              std::to_string(c_in + 4));
    }

    std::vector<GroupedLevel> levels;
    std::vector<int> parent_centers; // empty means "the full cloud"

    for (std::size_t l = 0; l < level_sizes.size(); ++l) {
        const int size = level_sizes[l];
        GroupedLevel level;
        level.k = k;

        if (l == 0) {
            level.center_indices = fps(cloud, size, fps_seed).indices;
        } else {
            // FPS over the previous level's center set, seeded at its first
            // center; sub-indices map back into the cloud.
            PointCloud subset;
            subset.positions.reserve(parent_centers.size());
            for (int idx : parent_centers) subset.positions.push_back(cloud.positions[idx]);
            if (size > static_cast<int>(parent_centers.size())) {
                throw ValidationError("build_grouping_levels: level size exceeds parent level");
            }
            const SampleResult sub = fps(subset, size, 0);
            level.center_indices.reserve(size);
            for (int local : sub.indices) level.center_indices.push_back(parent_centers[local]);
        }

        const int centers = static_cast<int>(level.center_indices.size());
        level.neighbor_indices.assign(static_cast<std::size_t>(centers) * k, -1);
        level.neighbor_geodesics.assign(static_cast<std::size_t>(centers) * k, 0.0);
        level.descriptors = RowMatrix(centers, descriptor_mlp.out_width);

        const std::span<const int> neighbor_pool =
            pool == NeighborPool::full_cloud || l == 0
                ? std::span<const int>{}
                : std::span<const int>(parent_centers);

#pragma omp parallel for schedule(dynamic)
        for (int c = 0; c < centers; ++c) {
            const int center = level.center_indices[c];
            const KnnResult knn = geodesic_knn(engine, center, k, neighbor_pool);
            std::copy(knn.indices.begin(), knn.indices.end(),
                      level.neighbor_indices.begin() + static_cast<std::size_t>(c) * k);
            std::copy(knn.distances.begin(), knn.distances.end(),
                      level.neighbor_geodesics.begin() + static_cast<std::size_t>(c) * k);

            std::vector<double> input(c_in + 4);
            std::vector<double> response(descriptor_mlp.out_width);
            std::span<double> descriptor = level.descriptors.row(c);
            for (int t = 0; t < k; ++t) {
                const int j = knn.indices[t];
                for (int f = 0; f < c_in; ++f) input[f] = cloud.feature_row(j)[f];
                for (int axis = 0; axis < 3; ++axis) {
                    input[c_in + axis] = cloud.positions[j][axis] - cloud.positions[center][axis];
                }
                double gap = knn.distances[t];
                if (gap == infinite_distance) {
                    gap = distance(cloud.positions[center], cloud.positions[j]);
                }
                input[c_in + 3] = gap;
                apply_mlp(descriptor_mlp, input, response);
                for (int o = 0; o < descriptor_mlp.out_width; ++o) {
                    if (t == 0 || response[o] > descriptor[o]) descriptor[o] = response[o];
                }
            }
        }

        parent_centers = level.center_indices;
        levels.push_back(std::move(level));
    }
    return levels;
}

double sheet_purity(std::span<const int> center_indices, std::span<const int> neighbor_indices,
                    int k, std::span<const int> part_ids) {
    const int centers = static_cast<int>(center_indices.size());
    if (centers == 0 || k < 1) throw ValidationError("sheet_purity: empty grouping");
    if (neighbor_indices.size() != static_cast<std::size_t>(centers) * k) {
        throw ValidationError("sheet_purity: neighbor array does not match centers x k");
    }
    double total = 0.0;
    for (int c = 0; c < centers; ++c) {
        const int own = part_ids[center_indices[c]];
        int same = 0;
        for (int t = 0; t < k; ++t) {
            if (part_ids[neighbor_indices[static_cast<std::size_t>(c) * k + t]] == own) ++same;
        }
        total += static_cast<double>(same) / k;
    }
    return total / centers;
}

} // namespace geopc
