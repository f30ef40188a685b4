#pragma once

// Shared construction helpers for the test suites. Oracle
// implementations that double-check the library live in oracles.hpp
// and are kept independent of the code under test.

#include <utility>
#include <vector>

#include "bdd/graph.hpp"

namespace bddtest {

inline bdd::Graph make_graph(const std::vector<std::pair<int, int>>& edges,
                             const bdd::VertexSet& extra_vertices = {}) {
    return bdd::Graph(extra_vertices, edges);
}

/// Path v0 - v1 - ... - v{n-1} on ids 0..n-1.
inline bdd::Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    bdd::VertexSet vertices;
    for (int i = 0; i < n; ++i) {
        vertices.insert(i);
    }
    return bdd::Graph(vertices, edges);
}

/// Cycle on ids 0..n-1.
inline bdd::Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
    }
    return bdd::Graph({}, edges);
}

/// Complete graph on ids 0..n-1.
inline bdd::Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            edges.emplace_back(i, j);
        }
    }
    return bdd::Graph({}, edges);
}

/// Star with the given center and leaf ids.
inline bdd::Graph star_graph(int center, const std::vector<int>& leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int leaf : leaves) {
        edges.emplace_back(center, leaf);
    }
    return bdd::Graph({}, edges);
}

}  // namespace bddtest
