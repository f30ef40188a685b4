#include "bdd/star_packing.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace bdd {

VertexSet StarPacking::vertices() const {
    VertexSet out;
    for (const Star& s : stars) {
        out.insert(s.center);
        out.insert(s.leaves.begin(), s.leaves.end());
    }
    return out;
}

std::size_t StarPacking::edge_count() const {
    std::size_t total = 0;
    for (const Star& s : stars) {
        total += s.leaves.size();
    }
    return total;
}

VertexSet StarPacking::packing_neighbors(const VertexSet& s) const {
    VertexSet out;
    for (const Star& star : stars) {
        if (s.count(star.center)) {
            out.insert(star.leaves.begin(), star.leaves.end());
        }
        for (int leaf : star.leaves) {
            if (s.count(leaf)) {
                out.insert(star.center);
                break;
            }
        }
    }
    return out;
}

VertexSet BipartiteAux::neighbors_of_left(const VertexSet& s) const {
    VertexSet out;
    for (int v : s) {
        auto it = adj_left.find(v);
        if (it != adj_left.end()) {
            out.insert(it->second.begin(), it->second.end());
        }
    }
    return out;
}

VertexSet BipartiteAux::neighbors_of_right(const VertexSet& s) const {
    VertexSet out;
    for (int v : s) {
        auto it = adj_right.find(v);
        if (it != adj_right.end()) {
            out.insert(it->second.begin(), it->second.end());
        }
    }
    return out;
}

StarPacking greedy_maximal_star_packing(const Graph& g, int d) {
    if (d < 0) {
        throw std::invalid_argument("greedy_maximal_star_packing: d must be non-negative");
    }
    const std::size_t wanted = static_cast<std::size_t>(d) + 1;
    StarPacking packing;
    VertexSet packed;
    for (const auto& [v, nbrs] : g.adjacency()) {
        if (packed.count(v)) {
            continue;
        }
        VertexSet leaves;
        for (int u : nbrs) {
            if (!packed.count(u)) {
                leaves.insert(leaves.end(), u);
                if (leaves.size() == wanted) {
                    break;
                }
            }
        }
        if (leaves.size() < wanted) {
            continue;
        }
        packed.insert(v);
        packed.insert(leaves.begin(), leaves.end());
        packing.stars.push_back({v, std::move(leaves)});
    }
    return packing;
}

WitnessPartition compute_witness(const Graph& g, int d) {
    VertexSet x = greedy_maximal_star_packing(g, d).vertices();

    // residual_degree[v] = number of neighbors of v outside x. Dropping v
    // from x is allowed iff v itself would end with degree <= d and no
    // residual neighbor of v would be pushed past d.
    std::map<int, int> residual_degree;
    for (const auto& [v, nbrs] : g.adjacency()) {
        int deg = 0;
        for (int u : nbrs) {
            if (!x.count(u)) {
                ++deg;
            }
        }
        residual_degree[v] = deg;
    }
    for (auto it = x.begin(); it != x.end();) {
        int v = *it;
        bool removable = residual_degree[v] <= d;
        if (removable) {
            for (int u : g.neighbors(v)) {
                if (!x.count(u) && residual_degree[u] + 1 > d) {
                    removable = false;
                    break;
                }
            }
        }
        if (removable) {
            it = x.erase(it);
            for (int u : g.neighbors(v)) {
                ++residual_degree[u];
            }
        } else {
            ++it;
        }
    }

    WitnessPartition result;
    result.witness = std::move(x);
    for (const auto& [v, nbrs] : g.adjacency()) {
        if (!result.witness.count(v)) {
            result.residual.insert(result.residual.end(), v);
        }
    }
    return result;
}

BipartiteAux build_auxiliary(const Graph& g, const VertexSet& x, const VertexSet& y) {
    if (!g.contains(x) || !g.contains(y)) {
        throw std::invalid_argument("build_auxiliary: sides not contained in graph");
    }
    if (x.size() + y.size() != g.vertex_count()) {
        throw std::invalid_argument("build_auxiliary: sides do not partition the graph");
    }
    for (int v : x) {
        if (y.count(v)) {
            throw std::invalid_argument("build_auxiliary: sides overlap on vertex " +
                                        std::to_string(v));
        }
    }
    BipartiteAux aux;
    aux.left = x;
    aux.right = y;
    for (int v : x) {
        aux.adj_left[v];
    }
    for (int v : y) {
        aux.adj_right[v];
    }
    for (int u : x) {
        for (int v : g.neighbors(u)) {
            if (y.count(v)) {
                aux.adj_left[u].insert(v);
                aux.adj_right[v].insert(u);
                ++aux.edge_count;
            }
        }
    }
    return aux;
}

namespace {

// Hopcroft-Karp over the auxiliary graph with implicit left capacities.
// Conceptually each left vertex is split into cap = d+1 copies; a left
// vertex counts as free while its load is below cap. Right capacity is 1.
class CapacityMatcher {
public:
    CapacityMatcher(const BipartiteAux& j, int cap) : cap_(cap) {
        lefts_.reserve(j.left.size());
        for (int v : j.left) {
            lefts_.push_back(v);
        }
        rights_.reserve(j.right.size());
        for (int v : j.right) {
            right_index_[v] = static_cast<int>(rights_.size());
            rights_.push_back(v);
        }
        adj_.resize(lefts_.size());
        for (std::size_t i = 0; i < lefts_.size(); ++i) {
            auto it = j.adj_left.find(lefts_[i]);
            if (it == j.adj_left.end()) {
                continue;
            }
            adj_[i].reserve(it->second.size());
            for (int r : it->second) {
                adj_[i].push_back(right_index_.at(r));
            }
        }
        load_.assign(lefts_.size(), 0);
        match_right_.assign(rights_.size(), -1);
    }

    void run() {
        while (bfs()) {
            for (std::size_t l = 0; l < lefts_.size(); ++l) {
                while (load_[l] < cap_ && augment(static_cast<int>(l))) {
                    ++load_[l];
                }
            }
        }
    }

    StarPacking packing() const {
        std::map<int, VertexSet> leaves_by_center;
        for (std::size_t r = 0; r < rights_.size(); ++r) {
            if (match_right_[r] >= 0) {
                leaves_by_center[lefts_[match_right_[r]]].insert(rights_[r]);
            }
        }
        StarPacking out;
        for (auto& [center, leaves] : leaves_by_center) {
            out.stars.push_back({center, std::move(leaves)});
        }
        return out;
    }

private:
    static constexpr int kInf = std::numeric_limits<int>::max();

    bool bfs() {
        std::queue<int> queue;
        dist_.assign(lefts_.size(), kInf);
        int free_dist = kInf;
        for (std::size_t l = 0; l < lefts_.size(); ++l) {
            if (load_[l] < cap_) {
                dist_[l] = 0;
                queue.push(static_cast<int>(l));
            }
        }
        while (!queue.empty()) {
            int l = queue.front();
            queue.pop();
            if (dist_[l] >= free_dist) {
                continue;
            }
            for (int r : adj_[l]) {
                int l2 = match_right_[r];
                if (l2 < 0) {
                    free_dist = std::min(free_dist, dist_[l] + 1);
                } else if (dist_[l2] == kInf) {
                    dist_[l2] = dist_[l] + 1;
                    queue.push(l2);
                }
            }
        }
        free_dist_ = free_dist;
        return free_dist != kInf;
    }

    bool augment(int l) {
        if (dist_[l] == kInf) {
            return false;
        }
        for (int r : adj_[l]) {
            int l2 = match_right_[r];
            if (l2 < 0) {
                if (dist_[l] + 1 == free_dist_) {
                    match_right_[r] = l;
                    return true;
                }
            } else if (dist_[l2] == dist_[l] + 1 && augment(l2)) {
                match_right_[r] = l;
                return true;
            }
        }
        dist_[l] = kInf;
        return false;
    }

    int cap_;
    std::vector<int> lefts_;
    std::vector<int> rights_;
    std::map<int, int> right_index_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> load_;
    std::vector<int> match_right_;
    std::vector<int> dist_;
    int free_dist_ = kInf;
};

}  // namespace

StarPacking star_packing_max_edges(const BipartiteAux& j, int d) {
    if (d < 0) {
        throw std::invalid_argument("star_packing_max_edges: d must be non-negative");
    }
    CapacityMatcher matcher(j, d + 1);
    matcher.run();
    return matcher.packing();
}

}  // namespace bdd
