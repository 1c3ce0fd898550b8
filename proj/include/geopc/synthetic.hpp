#pragma once

#include <cstdint>
#include <string_view>

#include "geopc/point_cloud.hpp"

namespace geopc {

enum class SyntheticKind { swiss_roll, two_planes, cylinder, grid };

SyntheticKind kind_from_name(std::string_view name);
const char* to_string(SyntheticKind kind);

struct SyntheticParams {
    // two_planes: two stacked rectangular lattices, one per sheet, separated
    // by `gap` along z. The second sheet is shifted laterally by
    // offset_frac * spacing so that with the default gap/spacing ratio the
    // nearest cross-sheet point sits farther away than the in-sheet lattice
    // steps. The lattice is slightly anisotropic (y step = 31/30 * spacing),
    // which makes nearest-neighbor ordering unambiguous: a k_graph = 2 build
    // provably contains no inter-sheet edge while Euclidean 3-NN queries pick
    // up cross-sheet points at the sheet corners.
    double gap = 0.05;
    double spacing = 0.06;
    double offset_frac = 0.5;

    // swiss_roll: spiral r = roll_scale * angle swept over `turns` full
    // turns, extruded along y over [0, height]. Sampling is uniform in
    // surface area; the arclength along the spiral is recorded as a
    // one-column feature.
    double turns = 1.5;
    double height = 2.0;
    double roll_scale = 0.1;

    // cylinder: radius + height (height shared with swiss_roll).
    double radius = 1.0;

    // grid: planar lattice in z = 0.
    double grid_spacing = 1.0;
};

struct SyntheticCloud {
    PointCloud cloud;
    CloudMeta meta;
};

// Deterministic for a fixed seed (the RNG stream is fully pinned, not
// delegated to implementation-defined distributions).
SyntheticCloud gen_synthetic(SyntheticKind kind, int n, const SyntheticParams& params,
                             std::uint64_t seed);

} // namespace geopc
