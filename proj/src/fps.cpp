#include "geopc/fps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <omp.h>

#include "geopc/error.hpp"

namespace geopc {

SampleResult fps(const PointCloud& cloud, int m, int seed_index) {
    const int n = cloud.n();
    if (n < 1) throw ValidationError("fps: empty cloud");
    if (m < 1 || m > n) {
        throw ValidationError("fps: m = " + std::to_string(m) + " out of range [1, " +
                              std::to_string(n) + "]");
    }
    if (seed_index < 0 || seed_index >= n) {
        throw ValidationError("fps: seed index " + std::to_string(seed_index) + " out of range");
    }

    SampleResult result;
    result.indices.reserve(m);
    result.min_dists.reserve(m);

    std::vector<double> best_d2(n, std::numeric_limits<double>::infinity());
    std::vector<char> selected(n, 0);

    int current = seed_index;
    result.indices.push_back(current);
    result.min_dists.push_back(std::numeric_limits<double>::infinity());
    selected[current] = 1;

    const int max_threads = omp_get_max_threads();
    std::vector<double> thread_best(max_threads);
    std::vector<int> thread_arg(max_threads);

    for (int step = 1; step < m; ++step) {
        const Vec3 latest = cloud.positions[current];

        // Fold the newest selection into each candidate's min-distance.
        // fp min has no rounding, so this matches a from-scratch recompute.
#pragma omp parallel for schedule(static)
        for (int p = 0; p < n; ++p) {
            const double d2 = squared_distance(cloud.positions[p], latest);
            if (d2 < best_d2[p]) best_d2[p] = d2;
        }

        // Deterministic argmax: (best_d2 desc, index asc) is a total order,
        // so combining per-thread chunk winners gives the same point for any
        // chunking.
        std::fill(thread_arg.begin(), thread_arg.end(), -1);
#pragma omp parallel num_threads(max_threads)
        {
            const int tid = omp_get_thread_num();
            double local_best = -1.0;
            int local_arg = -1;
#pragma omp for schedule(static)
            for (int p = 0; p < n; ++p) {
                if (selected[p]) continue;
                if (best_d2[p] > local_best || (best_d2[p] == local_best && p < local_arg)) {
                    local_best = best_d2[p];
                    local_arg = p;
                }
            }
            thread_best[tid] = local_best;
            thread_arg[tid] = local_arg;
        }

        double winner_d2 = -1.0;
        int winner = -1;
        for (int t = 0; t < max_threads; ++t) {
            if (thread_arg[t] < 0) continue;
            if (thread_best[t] > winner_d2 ||
                (thread_best[t] == winner_d2 && thread_arg[t] < winner)) {
                winner_d2 = thread_best[t];
                winner = thread_arg[t];
            }
        }
        if (winner < 0) throw InvariantError("fps: no unselected candidate left");

        current = winner;
        selected[current] = 1;
        result.indices.push_back(current);
        result.min_dists.push_back(std::sqrt(winner_d2));
    }
    return result;
}

} // namespace geopc
