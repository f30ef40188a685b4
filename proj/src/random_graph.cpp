#include "bdd/random_graph.hpp"

namespace bdd {

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
    if (n < 0) {
        throw std::invalid_argument("erdos_renyi: n must be non-negative");
    }
    if (p < 0.0 || p > 1.0) {
        throw std::invalid_argument("erdos_renyi: p must lie in [0, 1]");
    }
    SplitMix64 rng(seed);
    // Integer threshold compare keeps the accept/reject decision exact.
    const auto threshold = static_cast<std::uint64_t>(p * 0x1.0p53);
    VertexSet vertices;
    for (int v = 1; v <= n; ++v) {
        vertices.insert(vertices.end(), v);
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            if ((rng.next() >> 11) < threshold) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(vertices, edges);
}

}  // namespace bdd
