#pragma once

// Structural guarantees of the extremal-pair extraction, checked from
// recorded traces. Shared between the unit tests and the acceptance
// suite, so violations are reported as strings rather than asserted.

#include <algorithm>
#include <iterator>
#include <string>
#include <vector>

#include "bdd/find_extremal.hpp"
#include "bdd/graph.hpp"
#include "bdd/star_packing.hpp"

namespace bddtest {

inline std::vector<std::string> check_extremal_invariants(
    const bdd::Graph& g, const bdd::VertexSet& x, const bdd::VertexSet& y, int d,
    const bdd::ExtremalPair& pair, const bdd::ExtremalTrace& trace) {
    using bdd::VertexSet;
    std::vector<std::string> bad;
    auto report = [&bad](const std::string& msg) { bad.push_back(msg); };

    if (trace.rounds.empty()) {
        report("trace has no rounds");
        return bad;
    }
    bdd::BipartiteAux j = bdd::build_auxiliary(g, x, y);
    const unsigned long long growth_factor =
        static_cast<unsigned long long>(d + 1) * static_cast<unsigned long long>(d + 1);

    for (std::size_t r = 0; r < trace.rounds.size(); ++r) {
        const auto& round = trace.rounds[r];
        // Strict growth of the forbidden witness set between rounds.
        if (r > 0) {
            const auto& prev = trace.rounds[r - 1].forbidden_witness;
            bool superset = std::includes(round.forbidden_witness.begin(),
                                          round.forbidden_witness.end(), prev.begin(),
                                          prev.end());
            if (!superset || round.forbidden_witness.size() <= prev.size()) {
                report("forbidden witness set did not grow strictly in round " +
                       std::to_string(r));
            }
        }
        // The forbidden residual is exactly the 2-neighborhood closure.
        if (round.forbidden_residual != bdd::forbidden_residual(g, j, round.forbidden_witness)) {
            report("forbidden residual mismatch in round " + std::to_string(r));
        }
        // Size bound on the excluded residual vertices.
        if (round.forbidden_residual.size() >
            growth_factor * round.forbidden_witness.size()) {
            report("forbidden residual exceeds (d+1)^2 bound in round " + std::to_string(r));
        }
    }

    const auto& last = trace.rounds.back();
    VertexSet expected_c, expected_d;
    std::set_difference(x.begin(), x.end(), last.forbidden_witness.begin(),
                        last.forbidden_witness.end(),
                        std::inserter(expected_c, expected_c.end()));
    std::set_difference(y.begin(), y.end(), last.forbidden_residual.begin(),
                        last.forbidden_residual.end(),
                        std::inserter(expected_d, expected_d.end()));
    if (pair.forced != expected_c) {
        report("returned forced set is not the allowed witness of the final round");
    }
    if (pair.discardable != expected_d) {
        report("returned discardable set is not the allowed residual of the final round");
    }

    // Every forced vertex centers a full (d+1)-star whose leaves were all
    // taken into the discardable set.
    for (int v : pair.forced) {
        const bdd::Star* star = nullptr;
        for (const bdd::Star& s : last.packing.stars) {
            if (s.center == v) {
                star = &s;
            }
        }
        if (star == nullptr || static_cast<int>(star->leaves.size()) != d + 1) {
            report("forced vertex " + std::to_string(v) + " has no full star");
            continue;
        }
        for (int leaf : star->leaves) {
            if (!pair.discardable.count(leaf)) {
                report("leaf " + std::to_string(leaf) + " of forced vertex " +
                       std::to_string(v) + " not discardable");
            }
        }
    }

    // No edge may connect the discardable set to the neighbors of the
    // forbidden witness vertices.
    VertexSet frontier = j.neighbors_of_left(last.forbidden_witness);
    for (int v : pair.discardable) {
        for (int u : g.neighbors(v)) {
            if (frontier.count(u)) {
                report("edge between discardable vertex " + std::to_string(v) +
                       " and forbidden frontier vertex " + std::to_string(u));
            }
        }
    }

    // Residual coverage: what stays behind is small relative to the
    // witness vertices that stay behind.
    if (y.size() - pair.discardable.size() >
        growth_factor * (x.size() - pair.forced.size())) {
        report("uncovered residual exceeds (d+1)^2 times uncovered witness");
    }

    // Local-optimality condition 1 by direct degree counting.
    VertexSet closed = pair.discardable;
    for (int v : pair.discardable) {
        const VertexSet& nbrs = g.neighbors(v);
        closed.insert(nbrs.begin(), nbrs.end());
    }
    for (int v : closed) {
        if (pair.forced.count(v)) {
            continue;
        }
        int deg = 0;
        for (int u : g.neighbors(v)) {
            if (!pair.forced.count(u)) {
                ++deg;
            }
        }
        if (deg > d) {
            report("condition 1 violated at vertex " + std::to_string(v));
        }
    }

    return bad;
}

}  // namespace bddtest
