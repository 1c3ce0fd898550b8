#pragma once

#include <span>

#include "geopc/mlp.hpp"
#include "geopc/row_matrix.hpp"

namespace geopc {

// Forward pass of the neighbor attention block. Weights are kept so tests can
// check normalization directly.
struct AttentionOutput {
    RowMatrix refined;           // centers x channels
    std::vector<double> weights; // centers x k x channels, flat
    int k = 0;
    int channels = 0;

    double weight_at(int center, int neighbor, int channel) const {
        return weights[(static_cast<std::size_t>(center) * k + neighbor) * channels + channel];
    }
};

// For each listed center i with neighbors j: a relation vector
// r_ij = MLP([f_i - f_j, d_g(i,j)]) of width C, a per-channel softmax over
// the k neighbors (guarded by subtracting the per-channel max logit, exact by
// shift invariance), then f'_i = sum_j alpha_ij (elementwise) f_j.
//
// features: rows for every referenced point; centers: row ids receiving a
// refined output; neighbor_indices/neighbor_geodesics: flat centers x k.
// params must map width C+1 to C. Rejects NaN inputs and non-finite
// geodesics. Centers are processed in parallel (disjoint output rows).
AttentionOutput attention_forward(const RowMatrix& features, std::span<const int> centers,
                                  std::span<const int> neighbor_indices,
                                  std::span<const double> neighbor_geodesics, int k,
                                  const MlpParams& params);

} // namespace geopc
