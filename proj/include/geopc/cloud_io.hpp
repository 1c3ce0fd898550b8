#pragma once

#include <string>
#include <string_view>

#include "geopc/point_cloud.hpp"

namespace geopc {

enum class CloudFormat { xyz, ply_ascii };

CloudFormat format_from_name(std::string_view name);
const char* to_string(CloudFormat format);

// Guesses the format from the file extension (.xyz / .ply); defaults to xyz.
CloudFormat format_from_path(const std::string& path);

// xyz: whitespace-separated, one point per line, columns 1..3 are the
// position, any trailing columns become feature values (same count on every
// line). ply-ascii: "ply / format ascii 1.0" files with a single vertex
// element carrying x/y/z properties; binary PLY and extra elements are
// rejected. See docs/formats.md.
PointCloud load_cloud(const std::string& path, CloudFormat format);

// Writes with 17 significant digits so a save/load round trip reproduces
// positions bit-for-bit. The ply-ascii writer stores positions only.
void save_cloud(const PointCloud& cloud, const std::string& path, CloudFormat format);

} // namespace geopc
