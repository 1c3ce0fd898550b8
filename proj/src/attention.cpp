#include "geopc/attention.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "geopc/error.hpp"

namespace geopc {

AttentionOutput attention_forward(const RowMatrix& features, std::span<const int> centers,
                                  std::span<const int> neighbor_indices,
                                  std::span<const double> neighbor_geodesics, int k,
                                  const MlpParams& params) {
    const int channels = features.cols;
    const int center_count = static_cast<int>(centers.size());
    if (channels < 1) throw ValidationError("attention_forward: features must have width >= 1");
    if (k < 1) throw ValidationError("attention_forward: neighbor lists must be nonempty");
    if (neighbor_indices.size() != static_cast<std::size_t>(center_count) * k ||
        neighbor_geodesics.size() != neighbor_indices.size()) {
        throw ValidationError("attention_forward: neighbor arrays do not match centers x k");
    }
    params.validate();
    if (params.in_width != channels + 1 || params.out_width != channels) {
        throw ValidationError("attention_forward: params map width " +
                              std::to_string(params.in_width) + "->" +
                              std::to_string(params.out_width) + ", need " +
                              std::to_string(channels + 1) + "->" + std::to_string(channels));
    }
    const int rows = features.rows();
    for (double v : features.values) {
        if (std::isnan(v)) throw ValidationError("attention_forward: NaN in input features");
    }
    for (std::size_t t = 0; t < neighbor_geodesics.size(); ++t) {
        if (!std::isfinite(neighbor_geodesics[t])) {
            throw ValidationError("attention_forward: non-finite geodesic distance at entry " +
                                  std::to_string(t));
        }
    }
    for (int c : centers) {
        if (c < 0 || c >= rows) throw ValidationError("attention_forward: center row out of range");
    }
    for (int j : neighbor_indices) {
        if (j < 0 || j >= rows) throw ValidationError("attention_forward: neighbor row out of range");
    }

    AttentionOutput out;
    out.k = k;
    out.channels = channels;
    out.refined = RowMatrix(center_count, channels);
    out.weights.assign(static_cast<std::size_t>(center_count) * k * channels, 0.0);

#pragma omp parallel for schedule(static)
    for (int c = 0; c < center_count; ++c) {
        const int center_row = centers[c];
        std::span<const double> fi = features.row(center_row);
        std::vector<double> input(channels + 1);
        std::vector<double> logits(static_cast<std::size_t>(k) * channels);

        for (int t = 0; t < k; ++t) {
            const int j = neighbor_indices[static_cast<std::size_t>(c) * k + t];
            std::span<const double> fj = features.row(j);
            for (int ch = 0; ch < channels; ++ch) input[ch] = fi[ch] - fj[ch];
            input[channels] = neighbor_geodesics[static_cast<std::size_t>(c) * k + t];
            apply_mlp(params, input, {logits.data() + static_cast<std::size_t>(t) * channels,
                                      static_cast<std::size_t>(channels)});
        }

        double* weights = out.weights.data() + static_cast<std::size_t>(c) * k * channels;
        std::span<double> refined = out.refined.row(c);
        for (int ch = 0; ch < channels; ++ch) {
            double max_logit = logits[ch];
            for (int t = 1; t < k; ++t) {
                max_logit = std::max(max_logit, logits[static_cast<std::size_t>(t) * channels + ch]);
            }
            double total = 0.0;
            for (int t = 0; t < k; ++t) {
                const double e = std::exp(logits[static_cast<std::size_t>(t) * channels + ch] - max_logit);
                weights[static_cast<std::size_t>(t) * channels + ch] = e;
                total += e;
            }
            double acc = 0.0;
            for (int t = 0; t < k; ++t) {
                const double alpha = weights[static_cast<std::size_t>(t) * channels + ch] / total;
                weights[static_cast<std::size_t>(t) * channels + ch] = alpha;
                const int j = neighbor_indices[static_cast<std::size_t>(c) * k + t];
                acc += alpha * features.at(j, ch);
            }
            refined[ch] = acc;
        }
    }
    return out;
}

} // namespace geopc
