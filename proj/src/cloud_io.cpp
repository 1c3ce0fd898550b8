#include "geopc/cloud_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "geopc/error.hpp"

namespace geopc {

CloudFormat format_from_name(std::string_view name) {
    if (name == "xyz") return CloudFormat::xyz;
    if (name == "ply-ascii" || name == "ply") return CloudFormat::ply_ascii;
    throw ValidationError("unknown cloud format '" + std::string(name) + "' (expected xyz or ply-ascii)");
}

const char* to_string(CloudFormat format) {
    return format == CloudFormat::xyz ? "xyz" : "ply-ascii";
}

CloudFormat format_from_path(const std::string& path) {
    const auto dot = path.find_last_of('.');
    if (dot != std::string::npos && path.substr(dot) == ".ply") return CloudFormat::ply_ascii;
    return CloudFormat::xyz;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

bool parse_double(const std::string& tok, double& out) {
    try {
        std::size_t used = 0;
        out = std::stod(tok, &used);
        return used == tok.size() && std::isfinite(out);
    } catch (const std::exception&) {
        return false;
    }
}

PointCloud load_xyz(std::istream& in, const std::string& path) {
    PointCloud cloud;
    std::string line;
    long line_no = 0;
    int columns = -1;
    while (std::getline(in, line)) {
        ++line_no;
        const auto toks = split_ws(line);
        if (toks.empty()) continue; // blank line
        if (toks.size() < 3) {
            throw ParseError(path, line_no, "expected at least 3 columns, got " +
                                                std::to_string(toks.size()));
        }
        if (columns < 0) {
            columns = static_cast<int>(toks.size());
            cloud.feature_width = columns - 3;
        } else if (static_cast<int>(toks.size()) != columns) {
            throw ParseError(path, line_no, "inconsistent column count (" +
                                                std::to_string(toks.size()) + " vs " +
                                                std::to_string(columns) + " on earlier lines)");
        }
        Vec3 p;
        for (int c = 0; c < 3; ++c) {
            if (!parse_double(toks[c], p[c])) {
                throw ParseError(path, line_no, "bad number '" + toks[c] + "'");
            }
        }
        cloud.positions.push_back(p);
        for (int c = 3; c < columns; ++c) {
            double v = 0.0;
            if (!parse_double(toks[c], v)) {
                throw ParseError(path, line_no, "bad number '" + toks[c] + "'");
            }
            cloud.features.push_back(v);
        }
    }
    if (cloud.positions.empty()) {
        throw ParseError(path, line_no, "file contains no points");
    }
    return cloud;
}

bool is_float_type(const std::string& t) {
    return t == "float" || t == "double" || t == "float32" || t == "float64";
}

PointCloud load_ply(std::istream& in, const std::string& path) {
    std::string line;
    long line_no = 0;

    auto next_line = [&](const char* what) {
        if (!std::getline(in, line)) {
            throw ParseError(path, line_no, std::string("unexpected end of file, expected ") + what);
        }
        ++line_no;
    };

    next_line("ply magic");
    if (split_ws(line) != std::vector<std::string>{"ply"}) {
        throw ParseError(path, line_no, "missing 'ply' magic");
    }

    long vertex_count = -1;
    int coord_column[3] = {-1, -1, -1}; // property column carrying x, y, z
    int property_count = 0;
    bool saw_format = false;

    while (true) {
        next_line("header line");
        const auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks[0] == "comment") continue;
        if (toks[0] == "format") {
            if (toks.size() != 3 || toks[1] != "ascii") {
                throw ParseError(path, line_no, "only 'format ascii 1.0' is supported");
            }
            saw_format = true;
        } else if (toks[0] == "element") {
            if (toks.size() != 3 || toks[1] != "vertex") {
                throw ParseError(path, line_no, "only a single vertex element is supported");
            }
            if (vertex_count >= 0) {
                throw ParseError(path, line_no, "duplicate vertex element");
            }
            try {
                vertex_count = std::stol(toks[2]);
            } catch (const std::exception&) {
                throw ParseError(path, line_no, "bad vertex count '" + toks[2] + "'");
            }
            if (vertex_count <= 0) {
                throw ParseError(path, line_no, "vertex count must be positive");
            }
        } else if (toks[0] == "property") {
            if (vertex_count < 0) {
                throw ParseError(path, line_no, "property before element vertex");
            }
            if (toks.size() != 3 || !is_float_type(toks[1])) {
                throw ParseError(path, line_no, "unsupported property declaration");
            }
            int axis = -1;
            if (toks[2] == "x") axis = 0;
            else if (toks[2] == "y") axis = 1;
            else if (toks[2] == "z") axis = 2;
            if (axis < 0) {
                throw ParseError(path, line_no, "unsupported vertex property '" + toks[2] +
                                                    "' (only x/y/z are handled)");
            }
            if (coord_column[axis] >= 0) {
                throw ParseError(path, line_no, "duplicate vertex property '" + toks[2] + "'");
            }
            coord_column[axis] = property_count;
            ++property_count;
        } else if (toks[0] == "end_header") {
            break;
        } else {
            throw ParseError(path, line_no, "unsupported header line '" + toks[0] + "'");
        }
    }

    if (!saw_format) throw ParseError(path, line_no, "header has no format line");
    if (vertex_count < 0) throw ParseError(path, line_no, "header has no vertex element");
    for (int axis = 0; axis < 3; ++axis) {
        if (coord_column[axis] < 0) {
            throw ParseError(path, line_no, "vertex element is missing the x/y/z properties");
        }
    }

    PointCloud cloud;
    cloud.positions.reserve(static_cast<std::size_t>(vertex_count));
    for (long v = 0; v < vertex_count; ++v) {
        next_line("vertex line");
        const auto toks = split_ws(line);
        if (static_cast<int>(toks.size()) != property_count) {
            throw ParseError(path, line_no, "expected " + std::to_string(property_count) +
                                                " values, got " + std::to_string(toks.size()));
        }
        Vec3 p;
        for (int axis = 0; axis < 3; ++axis) {
            if (!parse_double(toks[coord_column[axis]], p[axis])) {
                throw ParseError(path, line_no, "bad number '" + toks[coord_column[axis]] + "'");
            }
        }
        cloud.positions.push_back(p);
    }
    return cloud;
}

void append_number(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

} // namespace

PointCloud load_cloud(const std::string& path, CloudFormat format) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    PointCloud cloud =
        format == CloudFormat::xyz ? load_xyz(in, path) : load_ply(in, path);
    cloud.validate();
    return cloud;
}

void save_cloud(const PointCloud& cloud, const std::string& path, CloudFormat format) {
    cloud.validate();
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    std::string text;
    if (format == CloudFormat::xyz) {
        for (int i = 0; i < cloud.n(); ++i) {
            for (int c = 0; c < 3; ++c) {
                if (c) text += ' ';
                append_number(text, cloud.positions[i][c]);
            }
            for (double f : cloud.feature_row(i)) {
                text += ' ';
                append_number(text, f);
            }
            text += '\n';
        }
    } else {
        text += "ply\nformat ascii 1.0\nelement vertex " + std::to_string(cloud.n()) +
                "\nproperty double x\nproperty double y\nproperty double z\nend_header\n";
        for (int i = 0; i < cloud.n(); ++i) {
            for (int c = 0; c < 3; ++c) {
                if (c) text += ' ';
                append_number(text, cloud.positions[i][c]);
            }
            text += '\n';
        }
    }
    out << text;
    if (!out) {
        throw IoError("write failed for '" + path + "'");
    }
}

} // namespace geopc
