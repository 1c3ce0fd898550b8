#include "geopc/point_cloud.hpp"

#include <cmath>

#include "geopc/error.hpp"

namespace geopc {

void PointCloud::validate() const {
    if (positions.empty()) {
        throw ValidationError("point cloud is empty (need at least one point)");
    }
    for (std::size_t i = 0; i < positions.size(); ++i) {
        for (int c = 0; c < 3; ++c) {
            if (!std::isfinite(positions[i][c])) {
                throw ValidationError("non-finite coordinate at point " + std::to_string(i));
            }
        }
    }
    if (feature_width < 0) {
        throw ValidationError("negative feature width");
    }
    const std::size_t expected = static_cast<std::size_t>(feature_width) * positions.size();
    if (features.size() != expected) {
        throw ValidationError("feature block has " + std::to_string(features.size()) +
                              " values, expected " + std::to_string(expected));
    }
    for (std::size_t i = 0; i < features.size(); ++i) {
        if (!std::isfinite(features[i])) {
            throw ValidationError("non-finite feature value at offset " + std::to_string(i));
        }
    }
}

void CloudMeta::validate(int n_points) const {
    if (!part_ids.empty() && static_cast<int>(part_ids.size()) != n_points) {
        throw ValidationError("part id tags have length " + std::to_string(part_ids.size()) +
                              ", cloud has " + std::to_string(n_points) + " points");
    }
}

} // namespace geopc
