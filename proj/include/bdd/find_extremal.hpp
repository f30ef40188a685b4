#pragma once

// Extraction of an extremal pair (C, D) from a witness/residual split:
// C is forced into some minimum solution, D can be discarded. The pair
// satisfies two local-optimality conditions against the host graph G:
//   1. every vertex of N[D] \ C has degree <= d once C is removed, and
//   2. C is a minimum-cardinality bdd-d-set of G[C u D].
// The procedure repeatedly packs a maximum-edge star packing between
// the allowed witness and residual vertices, grows C/D by an
// alternating closure, and on failure forbids the uncovered witness
// vertices together with their 2-neighborhood in the residual before
// retrying. The forbidden witness set grows strictly each retry, so at
// most |witness| rounds run.

#include <utility>
#include <vector>

#include "bdd/graph.hpp"
#include "bdd/star_packing.hpp"

namespace bdd {

struct ExtremalPair {
    VertexSet forced;       // C, subset of the witness
    VertexSet discardable;  // D, subset of the residual
};

/// One round of the iteration, kept for invariant checking and tracing.
struct ExtremalRound {
    VertexSet forbidden_witness;   // witness vertices excluded this round
    VertexSet forbidden_residual;  // residual vertices excluded this round
    StarPacking packing;           // maximum-edge packing on the allowed part
    int fixpoint_steps = 0;        // iterations of the C/D closure
};

struct ExtremalTrace {
    std::vector<ExtremalRound> rounds;
};

/// Residual vertices excluded once `fx` is excluded from the witness
/// side: the closed G-neighborhood of the J-neighbors of fx, minus the
/// witness side. Throws std::invalid_argument if fx is not a subset of
/// the left side of j.
VertexSet forbidden_residual(const Graph& g, const BipartiteAux& j, const VertexSet& fx);

/// Alternating closure: starting from d0, repeatedly extends C by the
/// J-neighbors of D and D by the packing-leaves of C until D is stable.
/// The fixpoint is order-independent; D grows monotonically, so at most
/// |right(j)| iterations run. `steps_out`, when given, receives the
/// number of iterations executed.
ExtremalPair cd_fixpoint(const BipartiteAux& j, const StarPacking& p, const VertexSet& d0,
                         int* steps_out = nullptr);

/// Runs the full iteration. Requires {witness, residual} to partition
/// the vertices of g and witness to be a bdd-d-set of g; throws
/// std::invalid_argument otherwise. The returned pair always satisfies
/// both local-optimality conditions (checked internally; violations
/// raise std::logic_error) and |residual \ D| <= (d+1)^2 |witness \ C|.
std::pair<ExtremalPair, ExtremalTrace> find_extremal(const Graph& g,
                                                     const VertexSet& witness,
                                                     const VertexSet& residual, int d);

}  // namespace bdd
