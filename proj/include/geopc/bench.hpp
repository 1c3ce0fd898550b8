#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "geopc/synthetic.hpp"

namespace geopc {

struct AnchorBenchConfig {
    int n = 2048;
    std::vector<int> anchor_counts = {64, 128, 256, 2048};
    int trials = 5;
    int k_graph = 8;
    int query_batch = 512;  // timed random pair queries per trial
    int error_pairs = 512;  // pairs checked against the exact oracle
    int error_sources = 16; // distinct Dijkstra sources backing those pairs
    std::uint64_t seed = 1;
    SyntheticKind kind = SyntheticKind::swiss_roll;
    bool parallel = false;  // timing loops pin to one thread unless set

    void validate() const;
};

struct AnchorBenchEntry {
    int m_anchors = 0;
    double build_ms = 0.0;       // median over trials
    double mean_query_us = 0.0;  // median over trials
    double mean_abs_rel_error_vs_oracle = 0.0;
    std::vector<double> build_ms_samples;
    std::vector<double> query_us_samples;
};

struct BenchReport {
    int n_points = 0;
    std::vector<int> anchor_counts;
    std::vector<AnchorBenchEntry> entries;
    std::string environment;
};

// Anchor-count scaling run: for each M, builds an engine (graph legs, s = M)
// on the same synthetic cloud, times the build and a fixed batch of random
// pair queries, and measures the mean relative error of the routed estimate
// against exact graph geodesics. Anchors grow along a nested FPS prefix, so
// the error column is non-increasing in M by construction; negative
// sub-ulp differences in the saturated configuration clamp to zero so the
// monotonicity survives floating point.
BenchReport run_anchor_bench(const AnchorBenchConfig& config);

nlohmann::json bench_report_to_json(const BenchReport& report);

} // namespace geopc
