#include "geopc/metrics.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "geopc/error.hpp"

namespace geopc {

ChamferVariant chamfer_variant_from_name(std::string_view name) {
    if (name == "l1") return ChamferVariant::l1;
    if (name == "l2") return ChamferVariant::l2;
    throw ValidationError("unknown chamfer variant '" + std::string(name) + "'");
}

const char* to_string(ChamferVariant variant) {
    return variant == ChamferVariant::l1 ? "l1" : "l2";
}

namespace {

// Squared distance from every point of `from` to its nearest point of `to`.
std::vector<double> nearest_squared(const PointCloud& from, const PointCloud& to) {
    const int n_from = from.n();
    const int n_to = to.n();
    std::vector<double> out(n_from);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n_from; ++i) {
        double best = std::numeric_limits<double>::infinity();
        const Vec3 p = from.positions[i];
        for (int j = 0; j < n_to; ++j) {
            const double d2 = squared_distance(p, to.positions[j]);
            if (d2 < best) best = d2;
        }
        out[i] = best;
    }
    return out;
}

double directional_mean(const std::vector<double>& nearest_d2, ChamferVariant variant) {
    double total = 0.0;
    for (double d2 : nearest_d2) {
        total += variant == ChamferVariant::l2 ? d2 : std::sqrt(d2);
    }
    return total / static_cast<double>(nearest_d2.size());
}

void require_nonempty(const PointCloud& cloud, const char* which) {
    if (cloud.n() < 1) {
        throw ValidationError(std::string("metrics: cloud '") + which + "' is empty");
    }
}

} // namespace

double chamfer(const PointCloud& p, const PointCloud& q, ChamferVariant variant) {
    require_nonempty(p, "P");
    require_nonempty(q, "Q");
    const double forward = directional_mean(nearest_squared(p, q), variant);
    const double backward = directional_mean(nearest_squared(q, p), variant);
    return variant == ChamferVariant::l2 ? forward + backward : 0.5 * (forward + backward);
}

double f_score(const PointCloud& p, const PointCloud& q, double threshold) {
    require_nonempty(p, "P");
    require_nonempty(q, "Q");
    if (!(threshold > 0.0)) throw ValidationError("f_score: threshold must be positive");

    const double t2 = threshold * threshold;
    const std::vector<double> p_to_q = nearest_squared(p, q);
    const std::vector<double> q_to_p = nearest_squared(q, p);
    long hit_p = 0;
    for (double d2 : p_to_q) {
        if (d2 <= t2) ++hit_p;
    }
    long hit_q = 0;
    for (double d2 : q_to_p) {
        if (d2 <= t2) ++hit_q;
    }
    const double precision = static_cast<double>(hit_p) / p.n();
    const double recall = static_cast<double>(hit_q) / q.n();
    if (precision + recall == 0.0) return 0.0;
    return 2.0 * precision * recall / (precision + recall);
}

double total_loss(const PointCloud& coarse, std::span<const PointCloud> stages,
                  const PointCloud& gt, ChamferVariant variant) {
    double loss = chamfer(coarse, gt, variant);
    for (const PointCloud& stage : stages) {
        loss += chamfer(stage, gt, variant);
    }
    return loss;
}

MetricReport evaluate_completion(const PointCloud& p, const PointCloud& q, double threshold) {
    MetricReport report;
    report.cd_l1 = chamfer(p, q, ChamferVariant::l1);
    report.cd_l2 = chamfer(p, q, ChamferVariant::l2);
    report.f_score = f_score(p, q, threshold);
    report.threshold = threshold;
    return report;
}

} // namespace geopc
