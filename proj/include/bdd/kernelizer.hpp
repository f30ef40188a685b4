#pragma once

// Whole-graph data reduction for bounded-degree deletion. Repeatedly
// computes a witness/residual split and extracts an extremal pair until
// the residual is small relative to the witness; the unions A (forced)
// and B (discardable) then satisfy:
//   1. any solution of the reduced graph plus A solves the input graph,
//   2. some minimum solution of the input graph contains A, and
//   3. the reduced graph has at most (d^3 + 4d^2 + 6d + 4) * opt vertices.

#include <string>
#include <vector>

#include "bdd/find_extremal.hpp"
#include "bdd/graph.hpp"

namespace bdd {

struct KernelResult {
    VertexSet forced;       // A, reported with input vertex ids
    VertexSet discardable;  // B
    Graph reduced;          // input graph minus A u B
    long long constant = 0; // per-solution-vertex size bound for this d
    int d = 0;
    int rounds = 0;         // number of extremal-pair extractions
};

/// d^3 + 4d^2 + 6d + 4; throws std::invalid_argument for d < 0.
long long kernel_constant(int d);

/// Runs the reduction loop to completion. Each extraction removes at
/// least one vertex (enforced; a zero-progress round raises
/// std::logic_error), so at most n rounds run. When `traces` is given it
/// receives one trace per extraction, in order.
KernelResult compute_ab(const Graph& g, int d, std::vector<ExtremalTrace>* traces = nullptr);

enum class PropertyStatus { pass, fail, unverified };

struct TheoremReport {
    PropertyStatus property1 = PropertyStatus::unverified;
    PropertyStatus property2 = PropertyStatus::unverified;
    PropertyStatus property3 = PropertyStatus::unverified;

    bool all_pass() const;
    bool any_fail() const;
};

const char* to_string(PropertyStatus status);

/// Checks the three reduction properties against the brute-force
/// oracle. Instances beyond `oracle_limit` vertices report
/// `unverified` rather than silently passing.
TheoremReport verify_theorem(const Graph& g, int d, const KernelResult& result,
                             std::size_t oracle_limit = 16);

/// Text form: "A:"/"B:" id lists, the reduced graph as an edge list
/// (isolated vertices noted in a comment), then "constant:"/"rounds:".
std::string serialize_kernel_result(const KernelResult& result);

}  // namespace bdd
