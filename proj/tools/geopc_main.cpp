// Command-line front end: generate synthetic clouds, build graphs, query the
// geodesic engine, run the grouping/attention/embedding pipeline, score
// completions, and benchmark the anchor-count scaling. All outputs are JSON
// to --out or stdout. Exit codes: 0 success, 2 validation error, 3 I/O error,
// 4 internal invariant violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "geopc/bench.hpp"
#include "geopc/cloud_io.hpp"
#include "geopc/dijkstra.hpp"
#include "geopc/error.hpp"
#include "geopc/geodesic_engine.hpp"
#include "geopc/json_io.hpp"
#include "geopc/metrics.hpp"
#include "geopc/pipeline.hpp"
#include "geopc/proximity_graph.hpp"
#include "geopc/synthetic.hpp"

namespace {

using nlohmann::json;

void emit(const json& document, const std::string& out_path) {
    const std::string text = document.dump(2) + "\n";
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw geopc::IoError("cannot open '" + out_path + "' for writing");
    out << text;
    if (!out) throw geopc::IoError("write failed for '" + out_path + "'");
}

geopc::PointCloud load_input(const std::string& path, const std::string& format_name) {
    const geopc::CloudFormat format = format_name.empty()
                                          ? geopc::format_from_path(path)
                                          : geopc::format_from_name(format_name);
    return geopc::load_cloud(path, format);
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& text, int n) {
    std::vector<std::pair<int, int>> pairs;
    if (text == "all") {
        if (n > 256) {
            throw geopc::ValidationError("--pairs all is limited to clouds with <= 256 points (got " +
                                         std::to_string(n) + ")");
        }
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        }
        return pairs;
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t end = text.find(';', pos);
        const std::string item = text.substr(pos, end == std::string::npos ? end : end - pos);
        const std::size_t comma = item.find(',');
        if (comma == std::string::npos) {
            throw geopc::ValidationError("bad pair '" + item + "' (expected i,j)");
        }
        try {
            const int i = std::stoi(item.substr(0, comma));
            const int j = std::stoi(item.substr(comma + 1));
            pairs.emplace_back(i, j);
        } catch (const std::exception&) {
            throw geopc::ValidationError("bad pair '" + item + "' (expected i,j)");
        }
        if (end == std::string::npos) break;
        pos = end + 1;
    }
    if (pairs.empty()) throw geopc::ValidationError("no pairs given");
    for (const auto& [i, j] : pairs) {
        if (i < 0 || i >= n || j < 0 || j >= n) {
            throw geopc::ValidationError("pair index out of range for cloud of size " +
                                         std::to_string(n));
        }
    }
    return pairs;
}

// ---- subcommand bodies ----------------------------------------------------

struct GenArgs {
    std::string kind = "grid";
    int n = 64;
    std::uint64_t seed = 0;
    geopc::SyntheticParams params;
    std::string out;
    std::string meta_out;
    std::string format = "xyz";
};

void run_gen(const GenArgs& a) {
    const geopc::SyntheticCloud sc =
        geopc::gen_synthetic(geopc::kind_from_name(a.kind), a.n, a.params, a.seed);
    if (a.out.empty()) throw geopc::ValidationError("gen: --out is required");
    geopc::save_cloud(sc.cloud, a.out, geopc::format_from_name(a.format));
    if (!a.meta_out.empty()) {
        json meta{{"name", sc.meta.name}, {"n", sc.cloud.n()}};
        if (sc.meta.part_ids.empty()) {
            meta["part_ids"] = nullptr;
        } else {
            meta["part_ids"] = sc.meta.part_ids;
        }
        emit(meta, a.meta_out);
    }
}

struct GraphArgs {
    std::string input;
    std::string format;
    int k_graph = 8;
    std::string out;
};

void run_graph(const GraphArgs& a) {
    const geopc::PointCloud cloud = load_input(a.input, a.format);
    const geopc::ProximityGraph graph = geopc::build_knn_graph(cloud, a.k_graph);
    emit(geopc::graph_to_json(graph), a.out);
}

struct GeodesicArgs {
    std::string input;
    std::string format;
    int m_anchors = 128;
    bool m_given = false;
    std::string leg_metric = "euclidean";
    int s = 8;
    int k_graph = 8;
    int fps_seed = 0;
    std::string pairs = "all";
    bool oracle = false;
    std::string out;
    std::string dump_engine;
};

void run_geodesic(const GeodesicArgs& a) {
    const geopc::PointCloud cloud = load_input(a.input, a.format);
    const int n = cloud.n();
    const int m = a.m_given ? a.m_anchors : std::min(a.m_anchors, n);
    const geopc::ProximityGraph graph = geopc::build_knn_graph(cloud, a.k_graph);
    const geopc::GeodesicEngine engine = geopc::build_engine(
        cloud, graph, m, geopc::leg_metric_from_name(a.leg_metric), a.s, a.fps_seed);

    const auto pairs = parse_pairs(a.pairs, n);

    // Oracle rows are cached per distinct source.
    std::vector<int> row_source;
    std::vector<std::vector<double>> rows;
    auto oracle_distance = [&](int i, int j) {
        for (std::size_t r = 0; r < row_source.size(); ++r) {
            if (row_source[r] == i) return rows[r][j];
        }
        row_source.push_back(i);
        rows.push_back(geopc::dijkstra(graph, i));
        return rows.back()[j];
    };

    json records = json::array();
    for (const auto& [i, j] : pairs) {
        json rec = json::array({i, j, geopc::distance_to_json(engine.approx_geodesic(i, j))});
        if (a.oracle) rec.push_back(geopc::distance_to_json(oracle_distance(i, j)));
        records.push_back(std::move(rec));
    }
    json document{{"n", n},
                  {"m_anchors", m},
                  {"leg_metric", a.leg_metric},
                  {"s", engine.candidate_count},
                  {"oracle", a.oracle},
                  {"pairs", records}};
    emit(document, a.out);
    if (!a.dump_engine.empty()) emit(geopc::engine_to_json(engine), a.dump_engine);
}

struct PipelineArgs {
    std::string config_path;
    std::string out;
};

void run_pipeline_cmd(const PipelineArgs& a) {
    std::ifstream in(a.config_path);
    if (!in) throw geopc::IoError("cannot open '" + a.config_path + "' for reading");
    json config;
    try {
        in >> config;
    } catch (const json::parse_error& e) {
        throw geopc::ValidationError("config '" + a.config_path + "' is not valid JSON: " + e.what());
    }
    emit(geopc::run_pipeline(config), a.out);
}

struct MetricsArgs {
    std::string pred;
    std::string gt;
    std::string format;
    double threshold = 0.01;
    std::string variant = "l1";
    std::vector<std::string> stages;
    std::string out;
};

void run_metrics(const MetricsArgs& a) {
    const geopc::PointCloud pred = load_input(a.pred, a.format);
    const geopc::PointCloud gt = load_input(a.gt, a.format);
    json document = geopc::metric_report_to_json(geopc::evaluate_completion(pred, gt, a.threshold));
    document["normalization"] = "none";
    if (!a.stages.empty()) {
        std::vector<geopc::PointCloud> stages;
        stages.reserve(a.stages.size());
        for (const std::string& path : a.stages) stages.push_back(load_input(path, a.format));
        const geopc::ChamferVariant variant = geopc::chamfer_variant_from_name(a.variant);
        document["total_loss"] = geopc::total_loss(pred, stages, gt, variant);
        document["total_loss_variant"] = a.variant;
    }
    emit(document, a.out);
}

struct BenchArgs {
    geopc::AnchorBenchConfig config;
    std::string kind = "swiss_roll";
    std::string out;
};

void run_bench(BenchArgs a) {
    a.config.kind = geopc::kind_from_name(a.kind);
    emit(geopc::bench_report_to_json(geopc::run_anchor_bench(a.config)), a.out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"geodesic point-cloud pipeline"};
    app.require_subcommand(1);

    GenArgs gen;
    CLI::App* cmd_gen = app.add_subcommand("gen", "generate a synthetic cloud");
    cmd_gen->add_option("--kind", gen.kind, "swiss_roll | two_planes | cylinder | grid");
    cmd_gen->add_option("--n", gen.n, "point count")->required();
    cmd_gen->add_option("--seed", gen.seed, "RNG seed");
    cmd_gen->add_option("--gap", gen.params.gap, "two_planes sheet separation");
    cmd_gen->add_option("--spacing", gen.params.spacing, "two_planes lattice spacing");
    cmd_gen->add_option("--offset-frac", gen.params.offset_frac, "two_planes lateral offset");
    cmd_gen->add_option("--turns", gen.params.turns, "swiss_roll turns");
    cmd_gen->add_option("--height", gen.params.height, "swiss_roll / cylinder height");
    cmd_gen->add_option("--roll-scale", gen.params.roll_scale, "swiss_roll radial growth");
    cmd_gen->add_option("--radius", gen.params.radius, "cylinder radius");
    cmd_gen->add_option("--grid-spacing", gen.params.grid_spacing, "grid spacing");
    cmd_gen->add_option("--out", gen.out, "output cloud path")->required();
    cmd_gen->add_option("--meta-out", gen.meta_out, "write generator metadata JSON here");
    cmd_gen->add_option("--format", gen.format, "xyz | ply-ascii");

    GraphArgs graph;
    CLI::App* cmd_graph = app.add_subcommand("graph", "build the Euclidean k-NN proximity graph");
    cmd_graph->add_option("--input", graph.input)->required();
    cmd_graph->add_option("--format", graph.format, "xyz | ply-ascii (default: by extension)");
    cmd_graph->add_option("--k-graph", graph.k_graph, "neighbors per point");
    cmd_graph->add_option("--out", graph.out, "output path (default stdout)");

    GeodesicArgs geo;
    CLI::App* cmd_geo = app.add_subcommand("geodesic", "anchor-routed geodesic estimates");
    cmd_geo->add_option("--input", geo.input)->required();
    cmd_geo->add_option("--format", geo.format);
    auto* m_opt = cmd_geo->add_option("--m-anchors", geo.m_anchors, "anchor count (default min(128, n))");
    cmd_geo->add_option("--leg-metric", geo.leg_metric, "euclidean | graph");
    cmd_geo->add_option("--s", geo.s, "candidate anchors per endpoint");
    cmd_geo->add_option("--k-graph", geo.k_graph);
    cmd_geo->add_option("--fps-seed", geo.fps_seed);
    cmd_geo->add_option("--pairs", geo.pairs, "\"i,j;k,l\" or \"all\"");
    cmd_geo->add_flag("--oracle", geo.oracle, "append exact Dijkstra distances");
    cmd_geo->add_option("--out", geo.out);
    cmd_geo->add_option("--dump-engine", geo.dump_engine, "also dump the engine JSON here");

    PipelineArgs pipe;
    CLI::App* cmd_pipe = app.add_subcommand("pipeline", "grouping + attention + embedding run");
    cmd_pipe->add_option("--config", pipe.config_path, "JSON config")->required();
    cmd_pipe->add_option("--out", pipe.out);

    MetricsArgs met;
    CLI::App* cmd_met = app.add_subcommand("metrics", "completion quality report");
    cmd_met->add_option("--pred", met.pred)->required();
    cmd_met->add_option("--gt", met.gt)->required();
    cmd_met->add_option("--format", met.format);
    cmd_met->add_option("--threshold", met.threshold, "f-score distance threshold");
    cmd_met->add_option("--variant", met.variant, "chamfer variant for --stage loss (l1 | l2)");
    cmd_met->add_option("--stage", met.stages, "refinement stage cloud (repeatable)");
    cmd_met->add_option("--out", met.out);

    BenchArgs bench;
    CLI::App* cmd_bench = app.add_subcommand("bench-anchors", "anchor-count scaling benchmark");
    cmd_bench->add_option("--n", bench.config.n);
    cmd_bench->add_option("--anchor-counts", bench.config.anchor_counts, "strictly increasing list");
    cmd_bench->add_option("--trials", bench.config.trials);
    cmd_bench->add_option("--k-graph", bench.config.k_graph);
    cmd_bench->add_option("--query-batch", bench.config.query_batch);
    cmd_bench->add_option("--error-pairs", bench.config.error_pairs);
    cmd_bench->add_option("--seed", bench.config.seed);
    cmd_bench->add_option("--kind", bench.kind);
    cmd_bench->add_flag("--parallel", bench.config.parallel, "allow OpenMP in timed sections");
    cmd_bench->add_option("--out", bench.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : geopc::exit_validation;
    }

    try {
        if (cmd_gen->parsed()) run_gen(gen);
        if (cmd_graph->parsed()) run_graph(graph);
        if (cmd_geo->parsed()) {
            geo.m_given = m_opt->count() > 0;
            run_geodesic(geo);
        }
        if (cmd_pipe->parsed()) run_pipeline_cmd(pipe);
        if (cmd_met->parsed()) run_metrics(met);
        if (cmd_bench->parsed()) run_bench(bench);
    } catch (const geopc::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return geopc::exit_validation;
    } catch (const geopc::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return geopc::exit_io;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return geopc::exit_internal;
    }
    return geopc::exit_ok;
}
