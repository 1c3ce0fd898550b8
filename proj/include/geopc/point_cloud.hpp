#pragma once

#include <array>
#include <cmath>
#include <span>
#include <string>
#include <vector>

namespace geopc {

using Vec3 = std::array<double, 3>;

inline double squared_distance(const Vec3& a, const Vec3& b) {
    const double dx = a[0] - b[0];
    const double dy = a[1] - b[1];
    const double dz = a[2] - b[2];
    return dx * dx + dy * dy + dz * dz;
}

inline double distance(const Vec3& a, const Vec3& b) {
    return std::sqrt(squared_distance(a, b));
}

// N points in 3-space plus optional per-point feature rows. Treated as
// immutable once handed to the graph and engine layers; readers may share it
// freely across threads.
struct PointCloud {
    std::vector<Vec3> positions;
    std::vector<double> features; // row-major, n() x feature_width
    int feature_width = 0;

    int n() const { return static_cast<int>(positions.size()); }
    bool has_features() const { return feature_width > 0; }

    std::span<const double> feature_row(int i) const {
        return {features.data() + static_cast<std::size_t>(i) * feature_width,
                static_cast<std::size_t>(feature_width)};
    }

    // Throws ValidationError when a type invariant is broken: empty cloud,
    // non-finite coordinates, or a feature block of the wrong size.
    void validate() const;
};

// Generator-side labels. part_ids marks which surface component each point
// was sampled from; empty when unknown.
struct CloudMeta {
    std::string name;
    std::vector<int> part_ids;

    void validate(int n_points) const;
};

} // namespace geopc
