// Compares the OpenMP kernels against their serial reference implementations:
// wall time for both paths plus an exact-equality check of the outputs.
// Usage: bench_kernels [n] [m_anchors]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <omp.h>

#include "geopc/fps.hpp"
#include "geopc/geodesic_engine.hpp"
#include "geopc/metrics.hpp"
#include "geopc/proximity_graph.hpp"
#include "geopc/serial_ref.hpp"
#include "geopc/synthetic.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-22s serial %9.2f ms   omp %9.2f ms   speedup %5.2fx   outputs %s\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms, equal ? "equal" : "DIFFER");
}

} // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 2048;
    const int m = argc > 2 ? std::atoi(argv[2]) : 128;
    std::printf("n = %d points, m = %d anchors, omp threads = %d\n\n", n, m,
                omp_get_max_threads());

    const geopc::SyntheticCloud synth =
        geopc::gen_synthetic(geopc::SyntheticKind::swiss_roll, n, geopc::SyntheticParams{}, 1);
    const geopc::PointCloud& cloud = synth.cloud;

    // k-NN graph build
    auto t0 = Clock::now();
    const geopc::ProximityGraph g_serial = geopc::ref::build_knn_graph(cloud, 8);
    const double knn_serial = ms_since(t0);
    t0 = Clock::now();
    const geopc::ProximityGraph g_parallel = geopc::build_knn_graph(cloud, 8);
    const double knn_parallel = ms_since(t0);
    bool equal = g_serial.edge_count == g_parallel.edge_count;
    for (int v = 0; equal && v < n; ++v) {
        const auto& a = g_serial.adjacency[v];
        const auto& b = g_parallel.adjacency[v];
        equal = a.size() == b.size();
        for (std::size_t t = 0; equal && t < a.size(); ++t) {
            equal = a[t].index == b[t].index && a[t].weight == b[t].weight;
        }
    }
    report("knn graph build", knn_serial, knn_parallel, equal);

    // farthest point sampling
    t0 = Clock::now();
    const geopc::SampleResult fps_serial = geopc::ref::fps(cloud, m, 0);
    const double fps_serial_ms = ms_since(t0);
    t0 = Clock::now();
    const geopc::SampleResult fps_parallel = geopc::fps(cloud, m, 0);
    const double fps_parallel_ms = ms_since(t0);
    equal = fps_serial.indices == fps_parallel.indices &&
            fps_serial.min_dists == fps_parallel.min_dists;
    report("fps", fps_serial_ms, fps_parallel_ms, equal);

    // engine build (m Dijkstra runs + legs + candidates)
    const int prev_threads = omp_get_max_threads();
    omp_set_num_threads(1);
    t0 = Clock::now();
    const geopc::GeodesicEngine e_serial =
        geopc::build_engine(cloud, g_parallel, m, geopc::LegMetric::graph, 8, 0);
    const double eng_serial = ms_since(t0);
    omp_set_num_threads(prev_threads);
    t0 = Clock::now();
    const geopc::GeodesicEngine e_parallel =
        geopc::build_engine(cloud, g_parallel, m, geopc::LegMetric::graph, 8, 0);
    const double eng_parallel = ms_since(t0);
    equal = e_serial.anchors.matrix.values == e_parallel.anchors.matrix.values &&
            e_serial.point_to_anchor.values == e_parallel.point_to_anchor.values &&
            e_serial.candidates == e_parallel.candidates;
    report("engine build", eng_serial, eng_parallel, equal);

    // chamfer distance between two synthetic clouds
    const geopc::SyntheticCloud other =
        geopc::gen_synthetic(geopc::SyntheticKind::cylinder, n, geopc::SyntheticParams{}, 2);
    t0 = Clock::now();
    const double cd_serial = geopc::ref::chamfer(cloud, other.cloud, geopc::ChamferVariant::l1);
    const double cham_serial = ms_since(t0);
    t0 = Clock::now();
    const double cd_parallel = geopc::chamfer(cloud, other.cloud, geopc::ChamferVariant::l1);
    const double cham_parallel = ms_since(t0);
    report("chamfer l1", cham_serial, cham_parallel, cd_serial == cd_parallel);

    return 0;
}
