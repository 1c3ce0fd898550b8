#pragma once

#include <span>
#include <string_view>

#include "geopc/point_cloud.hpp"

namespace geopc {

enum class ChamferVariant { l1, l2 };

ChamferVariant chamfer_variant_from_name(std::string_view name);
const char* to_string(ChamferVariant variant);

// l2: (1/|P|) sum_p min_q |p-q|^2 + (1/|Q|) sum_q min_p |q-p|^2
// l1: 0.5 * [(1/|P|) sum_p min_q |p-q| + (1/|Q|) sum_q min_p |q-p|]
// Nearest neighbors are exact (brute force). The per-point minima run in
// parallel; the two directional sums are accumulated serially in index order,
// so results are identical for any thread count.
double chamfer(const PointCloud& p, const PointCloud& q, ChamferVariant variant);

// precision = fraction of P within `threshold` of some q, recall the mirror;
// harmonic mean, 0 when both vanish.
double f_score(const PointCloud& p, const PointCloud& q, double threshold);

// chamfer(coarse, gt) + sum_i chamfer(stages[i], gt), same variant throughout.
double total_loss(const PointCloud& coarse, std::span<const PointCloud> stages,
                  const PointCloud& gt, ChamferVariant variant);

struct MetricReport {
    double cd_l1 = 0.0;
    double cd_l2 = 0.0;
    double f_score = 0.0;
    double threshold = 0.0;
};

MetricReport evaluate_completion(const PointCloud& p, const PointCloud& q, double threshold);

} // namespace geopc
