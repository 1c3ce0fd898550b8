#include "geopc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include <omp.h>

#include "geopc/dijkstra.hpp"
#include "geopc/error.hpp"
#include "geopc/geodesic_engine.hpp"
#include "geopc/proximity_graph.hpp"

namespace geopc {

using Clock = std::chrono::steady_clock;

void AnchorBenchConfig::validate() const {
    if (n < 8) throw ValidationError("bench: n must be >= 8");
    if (anchor_counts.empty()) throw ValidationError("bench: no anchor counts");
    for (std::size_t i = 0; i < anchor_counts.size(); ++i) {
        if (anchor_counts[i] < 1 || anchor_counts[i] > n) {
            throw ValidationError("bench: anchor count " + std::to_string(anchor_counts[i]) +
                                  " out of range [1, " + std::to_string(n) + "]");
        }
        if (i > 0 && anchor_counts[i] <= anchor_counts[i - 1]) {
            throw ValidationError("bench: anchor counts must be strictly increasing");
        }
    }
    if (trials < 1) throw ValidationError("bench: trials must be >= 1");
    if (k_graph < 1 || k_graph >= n) throw ValidationError("bench: k_graph out of range");
    if (query_batch < 1 || error_pairs < 1 || error_sources < 1) {
        throw ValidationError("bench: batch sizes must be >= 1");
    }
}

namespace {

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t h = values.size() / 2;
    return values.size() % 2 ? values[h] : 0.5 * (values[h - 1] + values[h]);
}

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

} // namespace

BenchReport run_anchor_bench(const AnchorBenchConfig& config) {
    config.validate();

    const int previous_threads = omp_get_max_threads();
    if (!config.parallel) omp_set_num_threads(1);

    BenchReport report;
    report.n_points = config.n;
    report.anchor_counts = config.anchor_counts;
    {
        std::ostringstream env;
        env << "omp_threads=" << (config.parallel ? previous_threads : 1)
            << (config.parallel ? " (parallel)" : " (sequential timing)") << ", cloud="
            << to_string(config.kind) << ", k_graph=" << config.k_graph;
        report.environment = env.str();
    }

    // Same cloud and graph for every anchor count; FPS with a fixed seed
    // makes the anchor sets nested prefixes of each other.
    const SyntheticCloud synth = gen_synthetic(config.kind, config.n, SyntheticParams{}, config.seed);
    const ProximityGraph graph = build_knn_graph(synth.cloud, config.k_graph);

    std::mt19937_64 rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
    auto pick = [&rng](int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); };

    std::vector<std::pair<int, int>> query_pairs(config.query_batch);
    for (auto& pr : query_pairs) {
        pr.first = pick(config.n);
        do {
            pr.second = pick(config.n);
        } while (pr.second == pr.first);
    }

    // Exact distances for the error set come from a limited pool of Dijkstra
    // sources. Pairs are built with j > i so the canonical direction (smaller
    // vertex first, matching the engine's anchor-matrix convention) always
    // starts at a pooled source.
    std::vector<int> sources(config.error_sources);
    for (int& s : sources) s = pick(config.n - 1);
    std::vector<std::pair<int, int>> error_set;
    std::vector<double> exact;
    error_set.reserve(config.error_pairs);
    for (int t = 0; t < config.error_pairs; ++t) {
        const int i = sources[t % config.error_sources];
        const int j = i + 1 + pick(config.n - 1 - i);
        error_set.emplace_back(i, j);
    }
    {
        std::vector<std::vector<double>> rows;
        std::vector<int> row_source;
        for (const auto& [i, j] : error_set) {
            int found = -1;
            for (std::size_t r = 0; r < row_source.size(); ++r) {
                if (row_source[r] == i) {
                    found = static_cast<int>(r);
                    break;
                }
            }
            if (found < 0) {
                row_source.push_back(i);
                rows.push_back(dijkstra(graph, i));
                found = static_cast<int>(rows.size()) - 1;
            }
            exact.push_back(rows[found][j]);
        }
    }

    for (const int m : config.anchor_counts) {
        AnchorBenchEntry entry;
        entry.m_anchors = m;

        volatile double sink = 0.0; // keeps the timed loops from being elided
        GeodesicEngine engine;
        for (int trial = 0; trial < config.trials; ++trial) {
            const auto t_build = Clock::now();
            engine = build_engine(synth.cloud, graph, m, LegMetric::graph, m, 0);
            entry.build_ms_samples.push_back(elapsed_ms(t_build));

            const auto t_query = Clock::now();
            double acc = 0.0;
            for (const auto& [i, j] : query_pairs) {
                acc += engine.approx_geodesic(i, j);
            }
            sink = sink + acc;
            entry.query_us_samples.push_back(elapsed_ms(t_query) * 1000.0 / config.query_batch);
        }

        // Deterministic across trials, so computed once. Sub-ulp negative
        // differences (saturated configuration) clamp to zero; this keeps the
        // error column exactly monotone along the nested anchor prefixes.
        double err_total = 0.0;
        long err_count = 0;
        for (std::size_t t = 0; t < error_set.size(); ++t) {
            if (exact[t] == infinite_distance || exact[t] == 0.0) continue;
            const double approx = engine.approx_geodesic(error_set[t].first, error_set[t].second);
            const double diff = approx - exact[t];
            err_total += (diff > 0.0 ? diff : 0.0) / exact[t];
            ++err_count;
        }
        entry.mean_abs_rel_error_vs_oracle = err_count ? err_total / err_count : 0.0;

        entry.build_ms = median(entry.build_ms_samples);
        entry.mean_query_us = median(entry.query_us_samples);
        report.entries.push_back(std::move(entry));
    }

    if (!config.parallel) omp_set_num_threads(previous_threads);
    return report;
}

nlohmann::json bench_report_to_json(const BenchReport& report) {
    nlohmann::json entries = nlohmann::json::array();
    for (const AnchorBenchEntry& e : report.entries) {
        entries.push_back({{"m_anchors", e.m_anchors},
                           {"build_ms", e.build_ms},
                           {"mean_query_us", e.mean_query_us},
                           {"mean_abs_rel_error_vs_oracle", e.mean_abs_rel_error_vs_oracle},
                           {"build_ms_samples", e.build_ms_samples},
                           {"query_us_samples", e.query_us_samples}});
    }
    return nlohmann::json{{"n_points", report.n_points},
                          {"anchor_counts", report.anchor_counts},
                          {"per_anchor_count", entries},
                          {"environment", report.environment}};
}

} // namespace geopc
