#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace geopc {

// Dense row-major matrix of doubles. Storage only, no algebra.
struct RowMatrix {
    std::vector<double> values;
    int cols = 0;

    RowMatrix() = default;
    RowMatrix(int rows, int columns)
        : values(static_cast<std::size_t>(rows) * static_cast<std::size_t>(columns), 0.0),
          cols(columns) {}

    int rows() const {
        return cols == 0 ? 0 : static_cast<int>(values.size() / static_cast<std::size_t>(cols));
    }

    std::span<const double> row(int r) const {
        return {values.data() + static_cast<std::size_t>(r) * cols, static_cast<std::size_t>(cols)};
    }
    std::span<double> row(int r) {
        return {values.data() + static_cast<std::size_t>(r) * cols, static_cast<std::size_t>(cols)};
    }

    double at(int r, int c) const { return values[static_cast<std::size_t>(r) * cols + c]; }
    double& at(int r, int c) { return values[static_cast<std::size_t>(r) * cols + c]; }
};

} // namespace geopc
