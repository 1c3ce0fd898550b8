#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace geopc {

// One-hidden-layer perceptron with max(0, x) activation. Parameters are
// injected (seeded or loaded from JSON), never trained here.
struct MlpParams {
    int in_width = 0;
    int hidden_width = 0;
    int out_width = 0;
    std::vector<double> w1; // hidden_width x in_width, row-major
    std::vector<double> b1; // hidden_width
    std::vector<double> w2; // out_width x hidden_width, row-major
    std::vector<double> b2; // out_width

    void validate() const; // finite entries, consistent sizes

    // Deterministic pseudo-random init scaled by layer fan-in.
    static MlpParams seeded(int in_width, int hidden_width, int out_width, std::uint64_t seed);
};

// out[c] = b2[c] + sum_h w2[c][h] * max(0, b1[h] + sum_i w1[h][i] * x[i])
void apply_mlp(const MlpParams& params, std::span<const double> input, std::span<double> output);

} // namespace geopc
