#pragma once

// Star packings and the witness/residual split. A graph has maximum
// degree <= d exactly when it contains no (d+1)-star, so a maximal
// (d+1)-star packing certifies both a lower bound on the optimum and,
// after greedy minimalization, a factor-(d+2) approximate solution
// (the witness). The maximum-edge center-constrained packing on the
// witness/residual bipartite graph is the engine of the reduction.

#include <map>
#include <vector>

#include "bdd/graph.hpp"

namespace bdd {

struct Star {
    int center = -1;
    VertexSet leaves;
};

struct StarPacking {
    std::vector<Star> stars;  // pairwise vertex-disjoint, sorted by center

    /// All packed vertices (centers and leaves).
    VertexSet vertices() const;

    /// Total number of leaves, i.e. edges used by the packing.
    std::size_t edge_count() const;

    /// Packing-neighborhood of s: leaves of stars centered in s plus
    /// centers of stars having a leaf in s.
    VertexSet packing_neighbors(const VertexSet& s) const;
};

struct WitnessPartition {
    VertexSet witness;   // inclusion-minimal bdd-d-set obtained greedily
    VertexSet residual;  // everything else
};

/// Bipartite graph whose edges are exactly the host edges crossing
/// between `left` and `right`.
struct BipartiteAux {
    VertexSet left;
    VertexSet right;
    std::map<int, VertexSet> adj_left;   // left vertex -> right neighbors
    std::map<int, VertexSet> adj_right;  // right vertex -> left neighbors
    std::size_t edge_count = 0;

    /// Right-side neighborhood of a set of left vertices.
    VertexSet neighbors_of_left(const VertexSet& s) const;

    /// Left-side neighborhood of a set of right vertices.
    VertexSet neighbors_of_right(const VertexSet& s) const;
};

/// Greedy maximal packing of (d+1)-stars: scans vertices in ascending
/// id order and, whenever the scanned vertex still has d+1 unpacked
/// neighbors, packs it as a center with the d+1 lowest of them. After
/// removal of all packed vertices no vertex of degree >= d+1 remains.
StarPacking greedy_maximal_star_packing(const Graph& g, int d);

/// Packs stars greedily, takes the packed vertices as an initial
/// bdd-d-set, then scans ascending and drops every vertex whose removal
/// keeps the set a bdd-d-set. The result is inclusion-minimal and at
/// most (d+2) times the optimum.
WitnessPartition compute_witness(const Graph& g, int d);

/// Throws std::invalid_argument unless {x, y} partitions the vertices of g.
BipartiteAux build_auxiliary(const Graph& g, const VertexSet& x, const VertexSet& y);

/// Maximum-edge packing of stars with centers on the left side (at most
/// one star each, 1..d+1 leaves) and leaves on the right side (used at
/// most once). Computed as a maximum bipartite matching with left
/// capacity d+1 via Hopcroft-Karp style phases; ties broken by
/// ascending id throughout, so the result is deterministic.
StarPacking star_packing_max_edges(const BipartiteAux& j, int d);

}  // namespace bdd
