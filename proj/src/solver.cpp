#include "bdd/solver.hpp"

#include <bit>
#include <cstdint>
#include <vector>

#include "bdd/kernelizer.hpp"
#include "bdd/star_packing.hpp"

namespace bdd {

VertexSet brute_force_min_bdd(const Graph& g, int d, std::size_t limit) {
    if (d < 0) {
        throw std::invalid_argument("brute_force_min_bdd: d must be non-negative");
    }
    const std::size_t n = g.vertex_count();
    if (n > 24 || n > limit) {
        throw ScaleLimitError("brute_force_min_bdd: " + std::to_string(n) +
                              " vertices exceed the exhaustive-search limit");
    }

    std::vector<int> ids;
    ids.reserve(n);
    std::map<int, int> index;
    for (const auto& [v, nbrs] : g.adjacency()) {
        index[v] = static_cast<int>(ids.size());
        ids.push_back(v);
    }
    std::vector<std::uint32_t> adj(n, 0);
    for (const auto& [v, nbrs] : g.adjacency()) {
        for (int u : nbrs) {
            adj[index[v]] |= 1u << index[u];
        }
    }

    auto solves = [&](std::uint32_t removed) {
        for (std::size_t i = 0; i < n; ++i) {
            if (removed & (1u << i)) {
                continue;
            }
            if (std::popcount(adj[i] & ~removed) > d) {
                return false;
            }
        }
        return true;
    };

    // Sizes ascending; within a size, index combinations in
    // lexicographic order, which is lexicographic on the sorted ids.
    for (std::size_t size = 0; size <= n; ++size) {
        std::vector<std::size_t> comb(size);
        for (std::size_t i = 0; i < size; ++i) {
            comb[i] = i;
        }
        while (true) {
            std::uint32_t mask = 0;
            for (std::size_t i : comb) {
                mask |= 1u << i;
            }
            if (solves(mask)) {
                VertexSet out;
                for (std::size_t i : comb) {
                    out.insert(out.end(), ids[i]);
                }
                return out;
            }
            std::size_t pos = size;
            while (pos > 0 && comb[pos - 1] == n - size + pos - 1) {
                --pos;
            }
            if (pos == 0) {
                break;
            }
            ++comb[pos - 1];
            for (std::size_t i = pos; i < size; ++i) {
                comb[i] = comb[i - 1] + 1;
            }
        }
    }
    throw std::logic_error("brute_force_min_bdd: removing everything must solve");
}

namespace {

// Lowest-id vertex of degree >= d+1 together with its d+1 lowest
// neighbors; nullopt when the graph already has maximum degree <= d.
std::optional<Star> find_branch_star(const Graph& g, int d) {
    const std::size_t wanted = static_cast<std::size_t>(d) + 1;
    for (const auto& [v, nbrs] : g.adjacency()) {
        if (nbrs.size() < wanted) {
            continue;
        }
        Star star;
        star.center = v;
        for (int u : nbrs) {
            star.leaves.insert(star.leaves.end(), u);
            if (star.leaves.size() == wanted) {
                break;
            }
        }
        return star;
    }
    return std::nullopt;
}

std::optional<VertexSet> solve_rec(const Graph& g, int d, int k, bool interleave,
                                   bool kernelize_now, long long& nodes) {
    ++nodes;
    VertexSet forced;
    Graph reduced;
    if (kernelize_now) {
        KernelResult res = compute_ab(g, d);
        if (static_cast<int>(res.forced.size()) > k) {
            return std::nullopt;
        }
        forced = std::move(res.forced);
        reduced = std::move(res.reduced);
    } else {
        reduced = g;
    }
    const int budget = k - static_cast<int>(forced.size());
    // The size bound holds for kernelized graphs: fewer than n/constant
    // deletions can never suffice.
    if (kernelize_now && static_cast<long long>(reduced.vertex_count()) >
                             kernel_constant(d) * static_cast<long long>(budget)) {
        return std::nullopt;
    }

    std::optional<Star> star = find_branch_star(reduced, d);
    if (!star.has_value()) {
        return forced;
    }
    if (budget == 0) {
        return std::nullopt;
    }
    // Disjoint (d+1)-stars each cost at least one deletion.
    if (greedy_maximal_star_packing(reduced, d).stars.size() >
        static_cast<std::size_t>(budget)) {
        return std::nullopt;
    }

    std::vector<int> order;
    order.push_back(star->center);
    order.insert(order.end(), star->leaves.begin(), star->leaves.end());
    for (int v : order) {
        auto sub = solve_rec(remove_vertices(reduced, {v}), d, budget - 1, interleave,
                             interleave, nodes);
        if (sub.has_value()) {
            sub->insert(v);
            sub->insert(forced.begin(), forced.end());
            return sub;
        }
    }
    return std::nullopt;
}

}  // namespace

SolveOutcome fpt_solve(const Graph& g, int d, int k, bool interleave_kernelization) {
    if (d < 0) {
        throw std::invalid_argument("fpt_solve: d must be non-negative");
    }
    if (k < 0) {
        throw std::invalid_argument("fpt_solve: k must be non-negative");
    }
    SolveOutcome outcome;
    outcome.solution =
        solve_rec(g, d, k, interleave_kernelization, /*kernelize_now=*/true,
                  outcome.nodes_explored);
    outcome.feasible = outcome.solution.has_value();
    return outcome;
}

VertexSet splex_max(const Graph& g, int s, std::size_t limit) {
    if (s < 1) {
        throw std::invalid_argument("splex_max: s must be at least 1");
    }
    const std::size_t n = g.vertex_count();
    if (n > limit) {
        throw ScaleLimitError("splex_max: " + std::to_string(n) +
                              " vertices exceed the solver limit");
    }
    Graph co = complement(g);
    for (int k = 0; k <= static_cast<int>(n); ++k) {
        SolveOutcome outcome = fpt_solve(co, s - 1, k);
        if (outcome.feasible) {
            VertexSet plex;
            for (const auto& [v, nbrs] : g.adjacency()) {
                if (!outcome.solution->count(v)) {
                    plex.insert(plex.end(), v);
                }
            }
            return plex;
        }
    }
    throw std::logic_error("splex_max: deleting everything must be feasible");
}

}  // namespace bdd
