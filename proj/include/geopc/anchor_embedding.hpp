#pragma once

#include <span>

#include "geopc/geodesic_engine.hpp"
#include "geopc/row_matrix.hpp"

namespace geopc {

// Appends each point's routed distance vector to all anchors onto its feature
// row: output width = C + M, leading C values unchanged, trailing M values
// equal anchor_distance_vector(engine, i). Row t of `features` belongs to
// point_indices[t]; a width-0 feature matrix (positions only) is accepted.
RowMatrix augment_with_anchor_distances(const RowMatrix& features, const GeodesicEngine& engine,
                                        std::span<const int> point_indices);

} // namespace geopc
