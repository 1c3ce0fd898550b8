#include "geopc/mlp.hpp"

#include <cmath>
#include <random>
#include <string>

#include "geopc/error.hpp"

namespace geopc {

void MlpParams::validate() const {
    if (in_width < 1 || hidden_width < 1 || out_width < 1) {
        throw ValidationError("mlp: widths must be >= 1");
    }
    auto check = [](const std::vector<double>& v, std::size_t expected, const char* name) {
        if (v.size() != expected) {
            throw ValidationError(std::string("mlp: ") + name + " has " +
                                  std::to_string(v.size()) + " values, expected " +
                                  std::to_string(expected));
        }
        for (double x : v) {
            if (!std::isfinite(x)) {
                throw ValidationError(std::string("mlp: non-finite entry in ") + name);
            }
        }
    };
    check(w1, static_cast<std::size_t>(hidden_width) * in_width, "w1");
    check(b1, static_cast<std::size_t>(hidden_width), "b1");
    check(w2, static_cast<std::size_t>(out_width) * hidden_width, "w2");
    check(b2, static_cast<std::size_t>(out_width), "b2");
}

MlpParams MlpParams::seeded(int in_width, int hidden_width, int out_width, std::uint64_t seed) {
    MlpParams p;
    p.in_width = in_width;
    p.hidden_width = hidden_width;
    p.out_width = out_width;

    std::mt19937_64 rng(seed);
    auto uniform = [&rng](double scale) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53; // [0,1)
        return (2.0 * u - 1.0) * scale;
    };

    const double s1 = 1.0 / std::sqrt(static_cast<double>(in_width));
    const double s2 = 1.0 / std::sqrt(static_cast<double>(hidden_width));
    p.w1.resize(static_cast<std::size_t>(hidden_width) * in_width);
    for (double& w : p.w1) w = uniform(s1);
    p.b1.resize(hidden_width);
    for (double& b : p.b1) b = uniform(0.1);
    p.w2.resize(static_cast<std::size_t>(out_width) * hidden_width);
    for (double& w : p.w2) w = uniform(s2);
    p.b2.resize(out_width);
    for (double& b : p.b2) b = uniform(0.1);
    p.validate();
    return p;
}

void apply_mlp(const MlpParams& params, std::span<const double> input, std::span<double> output) {
    if (static_cast<int>(input.size()) != params.in_width ||
        static_cast<int>(output.size()) != params.out_width) {
        throw ValidationError("apply_mlp: input/output width mismatch");
    }
    double hidden_buf[64];
    std::vector<double> hidden_vec;
    double* hidden = hidden_buf;
    if (params.hidden_width > 64) {
        hidden_vec.resize(params.hidden_width);
        hidden = hidden_vec.data();
    }
    for (int h = 0; h < params.hidden_width; ++h) {
        double acc = params.b1[h];
        const double* w = params.w1.data() + static_cast<std::size_t>(h) * params.in_width;
        for (int i = 0; i < params.in_width; ++i) acc += w[i] * input[i];
        hidden[h] = acc > 0.0 ? acc : 0.0;
    }
    for (int c = 0; c < params.out_width; ++c) {
        double acc = params.b2[c];
        const double* w = params.w2.data() + static_cast<std::size_t>(c) * params.hidden_width;
        for (int h = 0; h < params.hidden_width; ++h) acc += w[h] * hidden[h];
        output[c] = acc;
    }
}

} // namespace geopc
