#include "bdd/find_extremal.hpp"

#include <algorithm>
#include <iterator>

namespace bdd {

namespace {

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
    return out;
}

// Sub-auxiliary-graph on left \ fx and right \ fy.
BipartiteAux restrict_aux(const BipartiteAux& j, const VertexSet& fx, const VertexSet& fy) {
    BipartiteAux out;
    out.left = set_difference(j.left, fx);
    out.right = set_difference(j.right, fy);
    for (int v : out.left) {
        out.adj_left[v];
    }
    for (int v : out.right) {
        out.adj_right[v];
    }
    for (int u : out.left) {
        auto it = j.adj_left.find(u);
        if (it == j.adj_left.end()) {
            continue;
        }
        for (int v : it->second) {
            if (!fy.count(v)) {
                out.adj_left[u].insert(v);
                out.adj_right[v].insert(u);
                ++out.edge_count;
            }
        }
    }
    return out;
}

// Both local-optimality conditions are cheap to certify, so every
// returned pair is checked before it leaves this module.
void check_result(const Graph& g, const VertexSet& witness, const VertexSet& residual,
                  int d, const ExtremalPair& pair, const StarPacking& packing) {
    const VertexSet& c = pair.forced;
    const VertexSet& dset = pair.discardable;
    if (!std::includes(witness.begin(), witness.end(), c.begin(), c.end()) ||
        !std::includes(residual.begin(), residual.end(), dset.begin(), dset.end())) {
        throw std::logic_error("find_extremal: pair escapes the witness/residual split");
    }

    // Condition 1: every vertex of N[D] \ C has degree <= d with C gone.
    VertexSet closed = dset;
    for (int v : dset) {
        const VertexSet& nbrs = g.neighbors(v);
        closed.insert(nbrs.begin(), nbrs.end());
    }
    for (int v : closed) {
        if (c.count(v)) {
            continue;
        }
        int deg = 0;
        for (int u : g.neighbors(v)) {
            if (!c.count(u) && ++deg > d) {
                throw std::logic_error(
                    "find_extremal: condition 1 violated at vertex " + std::to_string(v));
            }
        }
    }

    // Condition 2 certificate: each forced vertex is the center of a full
    // (d+1)-star whose leaves all landed in D, and C is itself a
    // bdd-d-set of G[C u D]. Together with the witness being a bdd-d-set
    // (so G[D] has no (d+1)-star) this pins C as a minimum.
    std::map<int, const Star*> star_of_center;
    for (const Star& s : packing.stars) {
        star_of_center[s.center] = &s;
    }
    for (int v : c) {
        auto it = star_of_center.find(v);
        const Star* star = it == star_of_center.end() ? nullptr : it->second;
        if (star == nullptr || static_cast<int>(star->leaves.size()) != d + 1) {
            throw std::logic_error("find_extremal: forced vertex " + std::to_string(v) +
                                   " lacks a full star");
        }
        for (int leaf : star->leaves) {
            if (!dset.count(leaf)) {
                throw std::logic_error("find_extremal: star leaf " + std::to_string(leaf) +
                                       " escaped the discardable set");
            }
        }
    }
    if (!is_bdd_set(induced_subgraph(g, set_union(c, dset)), c, d)) {
        throw std::logic_error("find_extremal: forced set does not solve its own block");
    }
}

}  // namespace

VertexSet forbidden_residual(const Graph& g, const BipartiteAux& j, const VertexSet& fx) {
    if (!std::includes(j.left.begin(), j.left.end(), fx.begin(), fx.end())) {
        throw std::invalid_argument("forbidden_residual: fx not within the left side");
    }
    VertexSet touched = j.neighbors_of_left(fx);
    VertexSet closed = touched;
    for (int v : touched) {
        const VertexSet& nbrs = g.neighbors(v);
        closed.insert(nbrs.begin(), nbrs.end());
    }
    return set_difference(closed, j.left);
}

ExtremalPair cd_fixpoint(const BipartiteAux& j, const StarPacking& p, const VertexSet& d0,
                         int* steps_out) {
    if (!std::includes(j.right.begin(), j.right.end(), d0.begin(), d0.end())) {
        throw std::invalid_argument("cd_fixpoint: seed not within the right side");
    }
    std::map<int, const VertexSet*> leaves_of_center;
    for (const Star& s : p.stars) {
        leaves_of_center[s.center] = &s.leaves;
    }

    VertexSet c;
    VertexSet d = d0;
    VertexSet fresh_d = d0;
    int steps = 0;
    while (true) {
        ++steps;
        // C gains the J-neighbors of the newly added D vertices; D then
        // gains the packing leaves of the newly added C vertices. Old
        // members contributed in earlier iterations, so deltas suffice.
        VertexSet fresh_c;
        for (int v : fresh_d) {
            auto it = j.adj_right.find(v);
            if (it == j.adj_right.end()) {
                continue;
            }
            for (int u : it->second) {
                if (c.insert(u).second) {
                    fresh_c.insert(u);
                }
            }
        }
        VertexSet next_fresh_d;
        for (int u : fresh_c) {
            auto it = leaves_of_center.find(u);
            if (it == leaves_of_center.end()) {
                continue;
            }
            for (int leaf : *it->second) {
                if (d.insert(leaf).second) {
                    next_fresh_d.insert(leaf);
                }
            }
        }
        if (next_fresh_d.empty()) {
            break;
        }
        fresh_d = std::move(next_fresh_d);
    }
    if (steps_out != nullptr) {
        *steps_out = steps;
    }
    return {std::move(c), std::move(d)};
}

std::pair<ExtremalPair, ExtremalTrace> find_extremal(const Graph& g,
                                                     const VertexSet& witness,
                                                     const VertexSet& residual, int d) {
    if (d < 0) {
        throw std::invalid_argument("find_extremal: d must be non-negative");
    }
    if (!is_bdd_set(g, witness, d)) {
        throw std::invalid_argument("find_extremal: witness is not a bdd-d-set");
    }
    BipartiteAux j = build_auxiliary(g, witness, residual);  // validates the partition

    ExtremalTrace trace;
    VertexSet fx;
    while (fx != witness) {
        ExtremalRound round;
        round.forbidden_witness = fx;
        round.forbidden_residual = forbidden_residual(g, j, fx);

        BipartiteAux allowed = restrict_aux(j, fx, round.forbidden_residual);
        round.packing = star_packing_max_edges(allowed, d);

        VertexSet packed = round.packing.vertices();
        VertexSet seed;
        for (int v : residual) {
            if (!round.forbidden_residual.count(v) && !packed.count(v)) {
                seed.insert(seed.end(), v);
            }
        }
        ExtremalPair pair = cd_fixpoint(j, round.packing, seed, &round.fixpoint_steps);

        VertexSet allowed_witness = set_difference(witness, fx);
        trace.rounds.push_back(round);
        if (pair.forced == allowed_witness) {
            check_result(g, witness, residual, d, pair, trace.rounds.back().packing);
            return {std::move(pair), std::move(trace)};
        }
        VertexSet next_fx = set_difference(witness, pair.forced);
        if (next_fx.size() <= fx.size()) {
            throw std::logic_error("find_extremal: forbidden set failed to grow");
        }
        fx = std::move(next_fx);
    }

    // Every witness vertex ended up forbidden: all residual vertices at
    // distance >= 3 from the witness are discardable outright.
    ExtremalRound final_round;
    final_round.forbidden_witness = witness;
    final_round.forbidden_residual = forbidden_residual(g, j, witness);
    trace.rounds.push_back(final_round);

    ExtremalPair pair;
    pair.discardable = set_difference(residual, final_round.forbidden_residual);
    check_result(g, witness, residual, d, pair, trace.rounds.back().packing);
    return {std::move(pair), std::move(trace)};
}

}  // namespace bdd
