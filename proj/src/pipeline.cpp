#include "geopc/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <string>
#include <vector>

#include "geopc/anchor_embedding.hpp"
#include "geopc/attention.hpp"
#include "geopc/cloud_io.hpp"
#include "geopc/error.hpp"
#include "geopc/grouping.hpp"
#include "geopc/json_io.hpp"
#include "geopc/metrics.hpp"
#include "geopc/synthetic.hpp"

namespace geopc {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw ValidationError("config: " + path + ": " + msg);
}

const json& require_object(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    return j;
}

int get_int(const json& j, const char* key, const std::string& path, int fallback, int lo, int hi) {
    if (!j.contains(key)) return fallback;
    const json& field = j.at(key);
    const std::string full = path + "." + key;
    if (!field.is_number_integer()) fail(full, "expected an integer");
    const int v = field.get<int>();
    if (v < lo || v > hi) {
        fail(full, "value " + std::to_string(v) + " out of range [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
    }
    return v;
}

// Attention rejects non-finite geodesics; unreachable fallback neighbors
// contribute their Euclidean distance instead.
std::vector<double> finite_geodesics(const PointCloud& cloud, const GroupedLevel& level) {
    std::vector<double> out = level.neighbor_geodesics;
    for (std::size_t c = 0; c < level.center_indices.size(); ++c) {
        for (int t = 0; t < level.k; ++t) {
            double& d = out[c * level.k + t];
            if (d == infinite_distance) {
                d = distance(cloud.positions[level.center_indices[c]],
                             cloud.positions[level.neighbor_indices[c * level.k + t]]);
            }
        }
    }
    return out;
}

double get_double(const json& j, const char* key, const std::string& path, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number()) fail(path + "." + key, "expected a number");
    return j.at(key).get<double>();
}

std::string get_string(const json& j, const char* key, const std::string& path,
                       const std::string& fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_string()) fail(path + "." + key, "expected a string");
    return j.at(key).get<std::string>();
}

struct LoadedInput {
    PointCloud cloud;
    CloudMeta meta;
};

LoadedInput load_input(const json& config) {
    if (!config.contains("input")) fail("input", "missing");
    const json& input = require_object(config.at("input"), "input");

    LoadedInput out;
    if (input.contains("file")) {
        if (!input.at("file").is_string()) fail("input.file", "expected a string");
        const std::string path = input.at("file").get<std::string>();
        const std::string fmt = get_string(input, "format", "input", "");
        out.cloud = load_cloud(path, fmt.empty() ? format_from_path(path) : format_from_name(fmt));
        out.meta.name = path;
    } else if (input.contains("synthetic")) {
        const json& synth = require_object(input.at("synthetic"), "input.synthetic");
        if (!synth.contains("kind") || !synth.at("kind").is_string()) {
            fail("input.synthetic.kind", "expected a string");
        }
        const SyntheticKind kind = kind_from_name(synth.at("kind").get<std::string>());
        const int n = get_int(synth, "n", "input.synthetic", 0, 4, 1 << 24);
        if (n == 0) fail("input.synthetic.n", "missing");
        const std::uint64_t seed =
            synth.contains("seed") ? synth.at("seed").get<std::uint64_t>() : 0;
        SyntheticParams params;
        params.gap = get_double(synth, "gap", "input.synthetic", params.gap);
        params.spacing = get_double(synth, "spacing", "input.synthetic", params.spacing);
        params.offset_frac = get_double(synth, "offset_frac", "input.synthetic", params.offset_frac);
        params.turns = get_double(synth, "turns", "input.synthetic", params.turns);
        params.height = get_double(synth, "height", "input.synthetic", params.height);
        params.roll_scale = get_double(synth, "roll_scale", "input.synthetic", params.roll_scale);
        params.radius = get_double(synth, "radius", "input.synthetic", params.radius);
        params.grid_spacing = get_double(synth, "grid_spacing", "input.synthetic", params.grid_spacing);
        SyntheticCloud sc = gen_synthetic(kind, n, params, seed);
        out.cloud = std::move(sc.cloud);
        out.meta = std::move(sc.meta);
    } else {
        fail("input", "expected either 'file' or 'synthetic'");
    }
    return out;
}

// Working features: the input's feature columns, or raw positions when the
// input has none (the attention block needs at least one channel).
RowMatrix working_features(const PointCloud& cloud, const std::string& mode) {
    if (mode == "positions" || (mode == "auto" && !cloud.has_features())) {
        RowMatrix f(cloud.n(), 3);
        for (int i = 0; i < cloud.n(); ++i) {
            for (int c = 0; c < 3; ++c) f.at(i, c) = cloud.positions[i][c];
        }
        return f;
    }
    if (mode == "input" || mode == "auto") {
        if (!cloud.has_features()) fail("features", "input cloud has no feature columns");
        RowMatrix f(cloud.n(), cloud.feature_width);
        std::copy(cloud.features.begin(), cloud.features.end(), f.values.begin());
        return f;
    }
    fail("features", "expected 'auto', 'input' or 'positions'");
}

} // namespace

json run_pipeline(const json& config) {
    require_object(config, "(root)");
    LoadedInput input = load_input(config);
    const PointCloud& cloud = input.cloud;
    const int n = cloud.n();

    const json graph_cfg = config.value("graph", json::object());
    require_object(graph_cfg, "graph");
    const int k_graph = get_int(graph_cfg, "k_graph", "graph", std::min(8, n - 1), 1, n - 1);

    const json engine_cfg = config.value("engine", json::object());
    require_object(engine_cfg, "engine");
    const int m_anchors = get_int(engine_cfg, "m_anchors", "engine", std::min(128, n), 1, n);
    const int s = get_int(engine_cfg, "s", "engine", std::min(8, m_anchors), 1, m_anchors);
    const int engine_fps_seed = get_int(engine_cfg, "fps_seed", "engine", 0, 0, n - 1);
    const LegMetric leg =
        leg_metric_from_name(get_string(engine_cfg, "leg_metric", "engine", "euclidean"));

    const json group_cfg = config.value("grouping", json::object());
    require_object(group_cfg, "grouping");
    std::vector<int> level_sizes;
    if (group_cfg.contains("level_sizes")) {
        if (!group_cfg.at("level_sizes").is_array()) fail("grouping.level_sizes", "expected an array");
        for (const auto& v : group_cfg.at("level_sizes")) {
            if (!v.is_number_integer()) fail("grouping.level_sizes", "expected integers");
            level_sizes.push_back(v.get<int>());
        }
    } else {
        for (int size : {512, 128}) {
            if (size <= n && (level_sizes.empty() || size < level_sizes.back())) {
                level_sizes.push_back(size);
            }
        }
        if (level_sizes.empty()) level_sizes.push_back(std::max(1, n / 4));
    }
    for (std::size_t l = 0; l < level_sizes.size(); ++l) {
        if (level_sizes[l] < 1 || level_sizes[l] > n) {
            fail("grouping.level_sizes", "entry " + std::to_string(level_sizes[l]) +
                                             " out of range [1, " + std::to_string(n) + "]");
        }
        if (l > 0 && level_sizes[l] >= level_sizes[l - 1]) {
            fail("grouping.level_sizes", "must be strictly decreasing");
        }
    }
    const int k = get_int(group_cfg, "k", "grouping", std::min(16, n - 1), 1, n - 1);
    const int group_fps_seed = get_int(group_cfg, "fps_seed", "grouping", 0, 0, n - 1);
    const std::string pool_name = get_string(group_cfg, "pool", "grouping", "full_cloud");
    NeighborPool pool;
    if (pool_name == "full_cloud") pool = NeighborPool::full_cloud;
    else if (pool_name == "level_subset") pool = NeighborPool::level_subset;
    else fail("grouping.pool", "expected 'full_cloud' or 'level_subset'");

    const std::string feature_mode =
        get_string(config, "features", "(root)", "auto");
    RowMatrix features = working_features(cloud, feature_mode);
    const int channels = features.cols;

    const json attn_cfg = config.value("attention", json::object());
    require_object(attn_cfg, "attention");
    MlpParams relation_mlp;
    if (attn_cfg.contains("params_file")) {
        if (!attn_cfg.at("params_file").is_string()) fail("attention.params_file", "expected a string");
        const std::string path = attn_cfg.at("params_file").get<std::string>();
        std::ifstream in(path);
        if (!in) throw IoError("cannot open '" + path + "' for reading");
        json pj;
        in >> pj;
        relation_mlp = mlp_params_from_json(pj);
    } else {
        const int hidden = get_int(attn_cfg, "hidden_width", "attention", 2 * channels, 1, 4096);
        const std::uint64_t seed =
            attn_cfg.contains("seed") ? attn_cfg.at("seed").get<std::uint64_t>() : 1;
        relation_mlp = MlpParams::seeded(channels + 1, hidden, channels, seed);
    }
    if (relation_mlp.in_width != channels + 1 || relation_mlp.out_width != channels) {
        fail("attention", "params map " + std::to_string(relation_mlp.in_width) + "->" +
                              std::to_string(relation_mlp.out_width) + ", need " +
                              std::to_string(channels + 1) + "->" + std::to_string(channels));
    }

    const json desc_cfg = config.value("descriptor_mlp", json::object());
    require_object(desc_cfg, "descriptor_mlp");
    const int c_in = cloud.feature_width;
    const int desc_out = get_int(desc_cfg, "out_width", "descriptor_mlp", std::max(8, c_in), 1, 4096);
    const int desc_hidden =
        get_int(desc_cfg, "hidden_width", "descriptor_mlp", 2 * (c_in + 4), 1, 4096);
    const std::uint64_t desc_seed =
        desc_cfg.contains("seed") ? desc_cfg.at("seed").get<std::uint64_t>() : 2;
    const MlpParams descriptor_mlp = MlpParams::seeded(c_in + 4, desc_hidden, desc_out, desc_seed);

    // Build.
    const ProximityGraph graph = build_knn_graph(cloud, k_graph);
    const GeodesicEngine engine = build_engine(cloud, graph, m_anchors, leg, s, engine_fps_seed);
    const std::vector<GroupedLevel> levels =
        build_grouping_levels(cloud, engine, level_sizes, k, descriptor_mlp, group_fps_seed, pool);

    json out;
    out["n_points"] = n;
    out["feature_width"] = c_in;
    out["channels"] = channels;
    out["graph"] = {{"n", graph.n()}, {"edge_count", graph.edge_count}, {"k_graph", k_graph}};
    out["engine"] = {{"m_anchors", m_anchors},
                     {"leg_metric", to_string(leg)},
                     {"s", engine.candidate_count},
                     {"unreachable_anchor_pairs", engine.has_unreachable_anchor_pairs}};

    json levels_json = json::array();
    RowMatrix last_refined;
    for (const GroupedLevel& level : levels) {
        json lj = grouped_level_to_json(level);

        AttentionOutput attn =
            attention_forward(features, level.center_indices, level.neighbor_indices,
                              finite_geodesics(cloud, level), level.k, relation_mlp);
        json refined = json::array();
        for (int c = 0; c < attn.refined.rows(); ++c) {
            refined.push_back(
                std::vector<double>(attn.refined.row(c).begin(), attn.refined.row(c).end()));
        }
        lj["attention"] = {{"refined", refined}};
        last_refined = std::move(attn.refined);

        if (!input.meta.part_ids.empty()) {
            const double geo = sheet_purity(level.center_indices, level.neighbor_indices, level.k,
                                            input.meta.part_ids);
            double euc_total = 0.0;
            for (int center : level.center_indices) {
                const std::vector<int> nn = euclidean_knn_indices(cloud, center, level.k);
                int same = 0;
                for (int j : nn) {
                    if (input.meta.part_ids[j] == input.meta.part_ids[center]) ++same;
                }
                euc_total += static_cast<double>(same) / level.k;
            }
            lj["purity"] = {{"geodesic", geo},
                            {"euclidean", euc_total / level.center_indices.size()}};
        }
        levels_json.push_back(std::move(lj));
    }
    out["levels"] = std::move(levels_json);

    // Anchor-distance embedding on the last level's refined features.
    {
        const GroupedLevel& last = levels.back();
        const RowMatrix augmented =
            augment_with_anchor_distances(last_refined, engine, last.center_indices);
        json rows = json::array();
        for (int r = 0; r < augmented.rows(); ++r) {
            json row = json::array();
            for (double v : augmented.row(r)) row.push_back(distance_to_json(v));
            rows.push_back(std::move(row));
        }
        out["embedding"] = {{"point_indices", last.center_indices},
                            {"width", augmented.cols},
                            {"augmented", std::move(rows)}};
    }

    if (config.contains("metrics")) {
        const json& mcfg = require_object(config.at("metrics"), "metrics");
        if (!mcfg.contains("reference") || !mcfg.at("reference").is_string()) {
            fail("metrics.reference", "expected a string path");
        }
        const std::string ref_path = mcfg.at("reference").get<std::string>();
        const PointCloud reference = load_cloud(ref_path, format_from_path(ref_path));
        const double threshold = get_double(mcfg, "threshold", "metrics", 0.01);
        json report = metric_report_to_json(evaluate_completion(cloud, reference, threshold));
        report["normalization"] = "none";
        out["metrics"] = std::move(report);
    }
    return out;
}

} // namespace geopc
