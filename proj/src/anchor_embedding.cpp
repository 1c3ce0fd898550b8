#include "geopc/anchor_embedding.hpp"

#include <string>

#include "geopc/error.hpp"

namespace geopc {

RowMatrix augment_with_anchor_distances(const RowMatrix& features, const GeodesicEngine& engine,
                                        std::span<const int> point_indices) {
    const int count = static_cast<int>(point_indices.size());
    const int c = features.cols;
    if (c > 0 && features.rows() != count) {
        throw ValidationError("augment_with_anchor_distances: feature rows (" +
                              std::to_string(features.rows()) + ") do not match point count (" +
                              std::to_string(count) + ")");
    }
    for (int i : point_indices) {
        if (i < 0 || i >= engine.n()) {
            throw ValidationError("augment_with_anchor_distances: point index out of range");
        }
    }

    const int m = engine.m();
    RowMatrix out(count, c + m);
#pragma omp parallel for schedule(static)
    for (int t = 0; t < count; ++t) {
        std::span<double> row = out.row(t);
        for (int f = 0; f < c; ++f) row[f] = features.at(t, f);
        const std::vector<double> vec = engine.anchor_distance_vector(point_indices[t]);
        for (int a = 0; a < m; ++a) row[c + a] = vec[a];
    }
    return out;
}

} // namespace geopc
