#pragma once

// Exact solvers: an exhaustive minimum-solution oracle for small
// graphs, a kernelize-then-branch decision procedure, and maximum
// s-plex detection through the complement-graph duality.

#include <optional>

#include "bdd/graph.hpp"

namespace bdd {

/// Raised when an input is larger than an oracle or solver is willing
/// to process exactly.
struct ScaleLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolveOutcome {
    bool feasible = false;
    std::optional<VertexSet> solution;  // present iff feasible
    long long nodes_explored = 0;
};

/// Minimum-cardinality bdd-d-set by exhaustive search: subsets are
/// tried by increasing size, lexicographically within a size, and the
/// first hit is returned, so the representative is deterministic.
/// Refuses graphs with more than min(limit, 24) vertices.
VertexSet brute_force_min_bdd(const Graph& g, int d, std::size_t limit = 16);

/// Decides whether a bdd-d-set of size <= k exists. Kernelizes, prunes
/// with the kernel size bound, then branches on the d+2 vertices of a
/// (d+1)-star (center first, leaves ascending). When
/// `interleave_kernelization` is false only the root is kernelized,
/// which keeps branch counts comparable across configurations.
SolveOutcome fpt_solve(const Graph& g, int d, int k, bool interleave_kernelization = true);

/// Maximum-cardinality vertex set whose induced subgraph has minimum
/// degree >= |set| - s, found by solving bounded-degree deletion with
/// d = s-1 on the complement for k = 0, 1, 2, ... Refuses graphs with
/// more than `limit` vertices.
VertexSet splex_max(const Graph& g, int s, std::size_t limit = 40);

}  // namespace bdd
