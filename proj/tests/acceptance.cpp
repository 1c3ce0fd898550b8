// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned here, in code.
//
//   1. saturated-anchor estimates equal exact graph geodesics (1e-9)
//   2. euclidean-leg estimates never undercut straight-line distance (1e-9)
//   3. estimates are pointwise non-increasing along nested anchor prefixes
//   4. two-sheet purity: geodesic grouping exact, euclidean grouping leaks
//   5. attention algebra: identity, mean pooling, normalization, convexity,
//      hand-evaluated scalar case
//   6. anchor-distance embedding: width, zero self component, exact minima
//   7. metric oracles: exact brute-force agreement + hand values + loss sum
//   8. anchor-count scaling trend: time strictly increasing, >= 10x blowup at
//      M = n, oracle error non-increasing
//   9. farthest point sampling greedy maximin, exact tie-break agreement

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "geopc/anchor_embedding.hpp"
#include "geopc/attention.hpp"
#include "geopc/bench.hpp"
#include "geopc/fps.hpp"
#include "geopc/geodesic_engine.hpp"
#include "geopc/grouping.hpp"
#include "geopc/metrics.hpp"
#include "geopc/proximity_graph.hpp"
#include "geopc/serial_ref.hpp"
#include "geopc/synthetic.hpp"
#include "support/test_util.hpp"

using namespace geopc;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& label, const std::string& detail) {
    std::printf("[%s] %d. %s (%s)\n", pass ? "PASS" : "FAIL", criterion, label.c_str(),
                detail.c_str());
    if (!pass) ++failures;
}

double elapsed_s(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. Oracle equivalence at saturation: 50 random connected clouds, M = N,
//    graph legs, s = M, all pairs within 1e-9, under 60 s.
void criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t seed_state = 1000;
    double worst = 0.0;
    bool pass = true;
    for (int cloud_i = 0; cloud_i < 50; ++cloud_i) {
        const int n = 32 + (cloud_i % 10) * 13 + (cloud_i / 10) * 4; // 32..160ish
        ProximityGraph graph;
        const PointCloud cloud = testutil::random_connected_cloud(n, 8, seed_state, &graph);
        const GeodesicEngine engine = build_engine(cloud, graph, n, LegMetric::graph, n, 0);
        const RowMatrix exact = ref::all_pairs_geodesics(graph);
        for (int i = 0; i < n && pass; ++i) {
            for (int j = 0; j < n; ++j) {
                const double diff = std::abs(engine.approx_geodesic(i, j) - exact.at(i, j));
                worst = std::max(worst, diff);
                if (diff > 1e-9) {
                    pass = false;
                    break;
                }
            }
        }
        if (!pass) break;
    }
    const double secs = elapsed_s(start);
    pass = pass && secs < 60.0;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "50 clouds, max |diff| = %.3g, %.1f s", worst, secs);
    report(1, pass, "oracle equivalence at anchor saturation", detail);
}

// 2. Euclidean lower bound: 20 clouds, N = 128, M = 16, euclidean legs.
void criterion_2() {
    bool pass = true;
    double worst_slack = 0.0;
    for (std::uint64_t seed = 2000; seed < 2020; ++seed) {
        const PointCloud cloud = testutil::random_cloud(128, seed);
        const ProximityGraph graph = build_knn_graph(cloud, 8);
        const GeodesicEngine engine = build_engine(cloud, graph, 16, LegMetric::euclidean, 16, 0);
        for (int i = 0; i < 128; ++i) {
            for (int j = 0; j < 128; ++j) {
                const double approx = engine.approx_geodesic(i, j);
                if (approx == infinite_distance) continue;
                const double straight = distance(cloud.positions[i], cloud.positions[j]);
                worst_slack = std::min(worst_slack, approx - straight);
                if (approx < straight - 1e-9) pass = false;
            }
        }
    }
    char detail[128];
    std::snprintf(detail, sizeof(detail), "20 clouds x 128^2 pairs, min(approx - euclid) = %.3g",
                  worst_slack);
    report(2, pass, "euclidean lower bound with euclidean legs", detail);
}

// 3. Anchor monotonicity along a nested FPS prefix, N = 512, 1000 pairs.
void criterion_3() {
    std::uint64_t seed_state = 3000;
    ProximityGraph graph;
    const PointCloud cloud = testutil::random_connected_cloud(512, 8, seed_state, &graph);
    std::vector<GeodesicEngine> engines;
    for (int m : {16, 32, 64, 128}) {
        engines.push_back(build_engine(cloud, graph, m, LegMetric::graph, m, 0));
    }
    // Nested prefixes by construction (same FPS seed).
    bool nested = true;
    for (std::size_t e = 1; e < engines.size(); ++e) {
        for (int t = 0; t < engines[e - 1].m(); ++t) {
            nested = nested && engines[e].anchors.anchor_indices[t] ==
                                   engines[e - 1].anchors.anchor_indices[t];
        }
    }
    testutil::Rng rng(33);
    bool monotone = true;
    for (int t = 0; t < 1000; ++t) {
        const int i = rng.below(512);
        const int j = rng.below(512);
        double prev = engines[0].approx_geodesic(i, j);
        for (std::size_t e = 1; e < engines.size(); ++e) {
            const double cur = engines[e].approx_geodesic(i, j);
            if (cur > prev) monotone = false;
            prev = cur;
        }
    }
    report(3, nested && monotone, "anchor monotonicity along nested FPS prefixes",
           "M in {16,32,64,128}, 1000 pairs, pointwise non-increasing");
}

// 4. Sheet purity on two_planes: zero inter-sheet edges, geodesic k-NN purity
//    exactly 1, euclidean purity below 1.
void criterion_4() {
    const SyntheticCloud tp = gen_synthetic(SyntheticKind::two_planes, 200, SyntheticParams{}, 1);
    const ProximityGraph graph = build_knn_graph(tp.cloud, 2);

    int cross_edges = 0;
    for (int v = 0; v < graph.n(); ++v) {
        for (const GraphNeighbor& nb : graph.adjacency[v]) {
            if (tp.meta.part_ids[v] != tp.meta.part_ids[nb.index]) ++cross_edges;
        }
    }
    cross_edges /= 2;

    const GeodesicEngine engine = build_engine(tp.cloud, graph, 32, LegMetric::graph, 32, 0);
    const int n = tp.cloud.n();
    const int k = 3;
    std::vector<int> centers(n);
    std::vector<int> geo_neighbors(static_cast<std::size_t>(n) * k);
    std::vector<int> euc_neighbors(static_cast<std::size_t>(n) * k);
    for (int c = 0; c < n; ++c) {
        centers[c] = c;
        const KnnResult geo = geodesic_knn(engine, c, k);
        const std::vector<int> euc = euclidean_knn_indices(tp.cloud, c, k);
        for (int t = 0; t < k; ++t) {
            geo_neighbors[static_cast<std::size_t>(c) * k + t] = geo.indices[t];
            euc_neighbors[static_cast<std::size_t>(c) * k + t] = euc[t];
        }
    }
    const double geo_purity = sheet_purity(centers, geo_neighbors, k, tp.meta.part_ids);
    const double euc_purity = sheet_purity(centers, euc_neighbors, k, tp.meta.part_ids);

    const bool pass = cross_edges == 0 && geo_purity == 1.0 && euc_purity < 1.0;
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "cross edges = %d, geodesic purity = %.6f, euclidean purity = %.6f",
                  cross_edges, geo_purity, euc_purity);
    report(4, pass, "two-sheet reproduction: geodesic grouping respects sheets", detail);
}

// 5. Attention algebra.
void criterion_5() {
    bool pass = true;
    std::string note = "all subchecks passed";
    auto fail_with = [&](const std::string& what) {
        pass = false;
        note = what;
    };

    // Singleton identity, exact.
    {
        RowMatrix features(2, 2);
        features.at(0, 0) = 0.5;
        features.at(0, 1) = -1.0;
        features.at(1, 0) = 2.0;
        features.at(1, 1) = 3.0;
        const MlpParams params = MlpParams::seeded(3, 4, 2, 1);
        const std::vector<int> centers{0}, neighbors{1};
        const std::vector<double> geodesics{0.7};
        const AttentionOutput out =
            attention_forward(features, centers, neighbors, geodesics, 1, params);
        if (out.refined.at(0, 0) != 2.0 || out.refined.at(0, 1) != 3.0) {
            fail_with("singleton identity not exact");
        }
    }

    // Uniform logits -> mean pooling within 1e-9; normalization and convexity.
    {
        MlpParams params;
        params.in_width = 4;
        params.hidden_width = 2;
        params.out_width = 3;
        params.w1.assign(8, 0.0);
        params.b1 = {0.4, 0.1};
        params.w2.assign(6, 0.7);
        params.b2 = {0.0, 1.0, -2.0};

        testutil::Rng rng(55);
        RowMatrix features(30, 3);
        for (double& v : features.values) v = rng.uniform(-3.0, 3.0);
        const int k = 7;
        std::vector<int> centers{4, 9, 17};
        std::vector<int> neighbors;
        std::vector<double> geodesics;
        for (std::size_t c = 0; c < centers.size(); ++c) {
            for (int t = 0; t < k; ++t) {
                int j = rng.below(30);
                if (j == centers[c]) j = (j + 1) % 30;
                neighbors.push_back(j);
                geodesics.push_back(rng.uniform(0.0, 2.0));
            }
        }
        const AttentionOutput out =
            attention_forward(features, centers, neighbors, geodesics, k, params);
        for (std::size_t c = 0; c < centers.size(); ++c) {
            for (int ch = 0; ch < 3; ++ch) {
                double mean = 0.0, sum = 0.0, lo = 1e300, hi = -1e300;
                for (int t = 0; t < k; ++t) {
                    const double fj = features.at(neighbors[c * k + t], ch);
                    mean += fj;
                    lo = std::min(lo, fj);
                    hi = std::max(hi, fj);
                    sum += out.weight_at(static_cast<int>(c), t, ch);
                }
                mean /= k;
                if (std::abs(out.refined.at(static_cast<int>(c), ch) - mean) >= 1e-9) {
                    fail_with("uniform-logit mean pooling off by >= 1e-9");
                }
                if (std::abs(sum - 1.0) > 1e-6) fail_with("weight sum not 1 +- 1e-6");
                if (out.refined.at(static_cast<int>(c), ch) < lo - 1e-9 ||
                    out.refined.at(static_cast<int>(c), ch) > hi + 1e-9) {
                    fail_with("refined feature left the neighbor hull");
                }
            }
        }
    }

    // Hand case: C = 1, k = 2, independent scalar evaluation of the chain
    // relation MLP -> per-channel softmax -> weighted aggregation.
    {
        MlpParams params;
        params.in_width = 2;
        params.hidden_width = 1;
        params.out_width = 1;
        params.w1 = {-1.0, 1.0};
        params.b1 = {0.0};
        params.w2 = {1.0};
        params.b2 = {0.0};
        RowMatrix features(3, 1);
        features.at(0, 0) = 0.0;
        features.at(1, 0) = 1.0;
        features.at(2, 0) = 3.0;
        const std::vector<int> centers{0}, neighbors{1, 2};
        const std::vector<double> geodesics{1.0, 2.0};
        const AttentionOutput out =
            attention_forward(features, centers, neighbors, geodesics, 2, params);

        const double r1 = std::max(0.0, -(0.0 - 1.0) + 1.0); // 2
        const double r2 = std::max(0.0, -(0.0 - 3.0) + 2.0); // 5
        const double m = std::max(r1, r2);
        const double e1 = std::exp(r1 - m), e2 = std::exp(r2 - m);
        const double a1 = e1 / (e1 + e2), a2 = e2 / (e1 + e2);
        const double expect = a1 * 1.0 + a2 * 3.0;
        if (std::abs(out.refined.at(0, 0) - expect) >= 1e-9) {
            fail_with("hand-evaluated scalar case off by >= 1e-9");
        }
    }

    report(5, pass, "attention algebra", note);
}

// 6. Anchor-distance embedding correctness on clouds up to N = 128.
void criterion_6() {
    bool pass = true;
    std::string note = "widths, self zeros and exhaustive minima all exact";
    for (std::uint64_t seed = 6000; seed < 6004 && pass; ++seed) {
        const int n = 48 + static_cast<int>(seed % 3) * 40; // 48..128
        const PointCloud base = testutil::random_cloud(n, seed);
        const ProximityGraph graph = build_knn_graph(base, 8);
        for (LegMetric leg : {LegMetric::euclidean, LegMetric::graph}) {
            const GeodesicEngine engine = build_engine(base, graph, 16, leg, 8, 0);
            const int m = engine.m();
            RowMatrix features(n, 2);
            testutil::Rng rng(seed);
            for (double& v : features.values) v = rng.uniform(-1.0, 1.0);
            std::vector<int> all(n);
            for (int i = 0; i < n; ++i) all[i] = i;
            const RowMatrix aug = augment_with_anchor_distances(features, engine, all);
            if (aug.cols != 2 + m) {
                pass = false;
                note = "augmented width != C + M";
                break;
            }
            for (int i = 0; i < n && pass; ++i) {
                for (int f = 0; f < 2; ++f) {
                    if (aug.at(i, f) != features.at(i, f)) pass = false;
                }
                const std::vector<double> expect = ref::anchor_distance_vector(engine, i);
                for (int a = 0; a < m; ++a) {
                    if (std::abs(aug.at(i, 2 + a) - expect[a]) > 1e-9) pass = false;
                }
            }
            for (int w = 0; w < m && pass; ++w) {
                if (aug.at(engine.anchors.anchor_indices[w], 2 + w) != 0.0) {
                    pass = false;
                    note = "anchor self-distance component not zero";
                }
            }
        }
    }
    report(6, pass, "anchor-distance embedding", note);
}

// 7. Metric oracles: 100 random cloud pairs match the serial brute force
//    exactly; hand values to 1e-12; loss equals the sum of its terms.
void criterion_7() {
    bool pass = true;
    std::string note = "exact agreement on 100 pairs + hand values";
    testutil::Rng sizes(77);
    for (int t = 0; t < 100 && pass; ++t) {
        const int np = 16 + sizes.below(497); // up to 512
        const int nq = 16 + sizes.below(497);
        const PointCloud p = testutil::random_cloud(np, 7000 + t);
        const PointCloud q = testutil::random_cloud(nq, 8000 + t);
        if (chamfer(p, q, ChamferVariant::l1) != ref::chamfer(p, q, ChamferVariant::l1) ||
            chamfer(p, q, ChamferVariant::l2) != ref::chamfer(p, q, ChamferVariant::l2) ||
            f_score(p, q, 0.1) != ref::f_score(p, q, 0.1)) {
            pass = false;
            note = "parallel metrics diverged from brute force";
        }
    }

    PointCloud a, b, c;
    a.positions = {{0, 0, 0}};
    b.positions = {{1, 0, 0}};
    c.positions = {{0, 0, 0}, {3, 0, 0}};
    if (std::abs(chamfer(a, b, ChamferVariant::l2) - 2.0) > 1e-12 ||
        std::abs(chamfer(a, b, ChamferVariant::l1) - 1.0) > 1e-12 ||
        std::abs(chamfer(a, c, ChamferVariant::l2) - 4.5) > 1e-12 ||
        std::abs(chamfer(a, c, ChamferVariant::l1) - 0.75) > 1e-12) {
        pass = false;
        note = "hand chamfer values off";
    }
    PointCloud p2;
    p2.positions = {{0, 0, 0}, {5, 0, 0}};
    if (std::abs(f_score(p2, a, 1.0) - 2.0 / 3.0) > 1e-12) {
        pass = false;
        note = "hand f-score value off";
    }

    const PointCloud gt = testutil::random_cloud(64, 7500);
    const PointCloud coarse = testutil::random_cloud(32, 7501);
    const std::vector<PointCloud> stages{testutil::random_cloud(48, 7502),
                                         testutil::random_cloud(56, 7503)};
    double sum = chamfer(coarse, gt, ChamferVariant::l1);
    for (const PointCloud& s : stages) sum += chamfer(s, gt, ChamferVariant::l1);
    if (total_loss(coarse, stages, gt, ChamferVariant::l1) != sum) {
        pass = false;
        note = "loss != sum of its chamfer terms";
    }
    report(7, pass, "metric oracles", note);
}

// 8. Anchor-count scaling trend at N = 2048.
void criterion_8() {
    const auto start = std::chrono::steady_clock::now();
    AnchorBenchConfig config; // n = 2048, counts {64,128,256,2048}, 5 trials
    const BenchReport bench = run_anchor_bench(config);

    bool time_increasing = true;
    bool error_monotone = true;
    std::vector<double> totals;
    for (const AnchorBenchEntry& e : bench.entries) {
        totals.push_back(e.build_ms + e.mean_query_us * config.query_batch / 1000.0);
    }
    for (std::size_t i = 1; i < totals.size(); ++i) {
        if (totals[i] <= totals[i - 1]) time_increasing = false;
        if (bench.entries[i].mean_abs_rel_error_vs_oracle >
            bench.entries[i - 1].mean_abs_rel_error_vs_oracle) {
            error_monotone = false;
        }
    }
    const double blowup = totals.back() / totals[totals.size() - 2]; // M = 2048 vs 256
    const double secs = elapsed_s(start);
    const bool pass = time_increasing && error_monotone && blowup >= 10.0 && secs < 300.0;
    char detail[200];
    std::snprintf(detail, sizeof(detail),
                  "build+query ms = [%.1f, %.1f, %.1f, %.1f], blowup %.1fx, "
                  "error = [%.4f, %.4f, %.4f, %.2g], %.0f s",
                  totals[0], totals[1], totals[2], totals[3], blowup,
                  bench.entries[0].mean_abs_rel_error_vs_oracle,
                  bench.entries[1].mean_abs_rel_error_vs_oracle,
                  bench.entries[2].mean_abs_rel_error_vs_oracle,
                  bench.entries[3].mean_abs_rel_error_vs_oracle, secs);
    report(8, pass, "anchor-count scaling trend", detail);
}

// 9. FPS greedy maximin re-verified by brute force, exact tie-breaks.
void criterion_9() {
    bool pass = true;
    for (int t = 0; t < 50 && pass; ++t) {
        const int n = 20 + (t * 7) % 181; // 20..200
        const int m = std::min(n, 10 + (t * 3) % 41); // up to 50
        const PointCloud cloud = testutil::random_cloud(n, 9000 + t);
        const int seed_index = t % n;
        const SampleResult fast = fps(cloud, m, seed_index);
        const SampleResult slow = ref::fps(cloud, m, seed_index);
        if (fast.indices != slow.indices || fast.min_dists != slow.min_dists) pass = false;
    }
    report(9, pass, "fps greedy maximin re-verification",
           "50 clouds, from-scratch recompute, exact agreement");
}

} // namespace

int main() {
    std::printf("acceptance suite\n----------------\n");
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    std::printf("----------------\n%d/9 criteria passed\n", 9 - failures);
    return failures;
}
