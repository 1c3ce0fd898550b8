#include "geopc/dijkstra.hpp"

#include <queue>
#include <utility>

#include "geopc/error.hpp"

namespace geopc {

std::vector<double> dijkstra(const ProximityGraph& graph, int source) {
    const int n = graph.n();
    if (source < 0 || source >= n) {
        throw ValidationError("dijkstra: source " + std::to_string(source) + " out of range");
    }

    std::vector<double> dist(n, infinite_distance);
    dist[source] = 0.0;

    using Entry = std::pair<double, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
    heap.emplace(0.0, source);

    while (!heap.empty()) {
        const auto [d, v] = heap.top();
        heap.pop();
        if (d > dist[v]) continue; // stale entry
        for (const GraphNeighbor& nb : graph.adjacency[v]) {
            const double cand = d + nb.weight;
            if (cand < dist[nb.index]) {
                dist[nb.index] = cand;
                heap.emplace(cand, nb.index);
            }
        }
    }
    return dist;
}

} // namespace geopc
