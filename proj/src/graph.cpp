#include "bdd/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace bdd {

Graph::Graph(const VertexSet& vertices, const std::vector<std::pair<int, int>>& edges) {
    for (int v : vertices) {
        adj_[v];
    }
    for (const auto& [u, v] : edges) {
        if (u == v) {
            throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
        }
        bool inserted = adj_[u].insert(v).second;
        adj_[v].insert(u);
        if (inserted) {
            ++edge_count_;
        }
    }
}

bool Graph::has_edge(int u, int v) const {
    auto it = adj_.find(u);
    return it != adj_.end() && it->second.count(v) != 0;
}

const VertexSet& Graph::neighbors(int v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) {
        throw std::invalid_argument("unknown vertex " + std::to_string(v));
    }
    return it->second;
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (const auto& [v, nbrs] : adj_) {
        best = std::max(best, nbrs.size());
    }
    return best;
}

VertexSet Graph::vertices() const {
    VertexSet out;
    for (const auto& [v, nbrs] : adj_) {
        out.insert(out.end(), v);
    }
    return out;
}

bool Graph::contains(const VertexSet& s) const {
    return std::all_of(s.begin(), s.end(), [&](int v) { return has_vertex(v); });
}

namespace {

// Strips a trailing '#' comment and surrounding whitespace.
std::string strip_line(const std::string& raw) {
    std::string line = raw.substr(0, raw.find('#'));
    auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return "";
    }
    auto end = line.find_last_not_of(" \t\r");
    return line.substr(begin, end - begin + 1);
}

bool parse_int(const std::string& token, long long& value) {
    if (token.empty()) {
        return false;
    }
    std::size_t pos = 0;
    try {
        value = std::stoll(token, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == token.size();
}

Graph parse_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip_line(raw);
        if (line.empty()) {
            continue;
        }
        std::istringstream ss(line);
        std::string tu, tv, extra;
        ss >> tu >> tv;
        long long u = 0, v = 0;
        if (!parse_int(tu, u) || !parse_int(tv, v) || (ss >> extra)) {
            throw ParseError(line_no, "expected \"u v\", got \"" + line + "\"");
        }
        if (u < 0 || v < 0) {
            throw ParseError(line_no, "vertex ids must be non-negative");
        }
        if (u == v) {
            throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
        }
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph({}, edges);
}

Graph parse_dimacs(std::istream& in) {
    std::string raw;
    int line_no = 0;
    long long n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip_line(raw);
        if (line.empty()) {
            continue;
        }
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "c") {
            continue;
        }
        if (tag == "p") {
            if (n >= 0) {
                throw ParseError(line_no, "duplicate problem line");
            }
            std::string kind, tn, tm, extra;
            ss >> kind >> tn >> tm;
            long long m = 0;
            if (kind != "edge" || !parse_int(tn, n) || !parse_int(tm, m) || n < 0 ||
                m < 0 || (ss >> extra)) {
                throw ParseError(line_no, "malformed problem line \"" + line + "\"");
            }
            continue;
        }
        if (tag == "e") {
            if (n < 0) {
                throw ParseError(line_no, "edge before problem line");
            }
            std::string tu, tv, extra;
            ss >> tu >> tv;
            long long u = 0, v = 0;
            if (!parse_int(tu, u) || !parse_int(tv, v) || (ss >> extra)) {
                throw ParseError(line_no, "malformed edge line \"" + line + "\"");
            }
            if (u < 1 || u > n || v < 1 || v > n) {
                throw ParseError(line_no, "vertex id out of declared range 1.." +
                                              std::to_string(n));
            }
            if (u == v) {
                throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
            }
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
            continue;
        }
        throw ParseError(line_no, "unrecognized line \"" + line + "\"");
    }
    if (n < 0) {
        throw ParseError(line_no == 0 ? 1 : line_no, "missing problem line");
    }
    VertexSet vertices;
    for (int v = 1; v <= n; ++v) {
        vertices.insert(vertices.end(), v);
    }
    return Graph(vertices, edges);
}

}  // namespace

Graph parse_graph(std::istream& in, GraphFormat format) {
    return format == GraphFormat::edge_list ? parse_edge_list(in) : parse_dimacs(in);
}

Graph parse_graph(const std::string& text, GraphFormat format) {
    std::istringstream in(text);
    return parse_graph(in, format);
}

void serialize_graph(const Graph& g, std::ostream& out, GraphFormat format) {
    if (format == GraphFormat::dimacs) {
        std::size_t n = g.vertex_count();
        const auto& adj = g.adjacency();
        if (!adj.empty() &&
            (adj.begin()->first != 1 || adj.rbegin()->first != static_cast<int>(n))) {
            throw std::invalid_argument("dimacs output requires vertex ids 1..n");
        }
        out << "p edge " << n << ' ' << g.edge_count() << '\n';
    }
    for (const auto& [u, nbrs] : g.adjacency()) {
        for (int v : nbrs) {
            if (v <= u) {
                continue;
            }
            if (format == GraphFormat::dimacs) {
                out << "e " << u << ' ' << v << '\n';
            } else {
                out << u << ' ' << v << '\n';
            }
        }
    }
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    std::ostringstream out;
    serialize_graph(g, out, format);
    return out.str();
}

Graph remove_vertices(const Graph& g, const VertexSet& s) {
    if (!g.contains(s)) {
        throw std::invalid_argument("remove_vertices: set not contained in graph");
    }
    VertexSet kept;
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, nbrs] : g.adjacency()) {
        if (s.count(u)) {
            continue;
        }
        kept.insert(kept.end(), u);
        for (int v : nbrs) {
            if (v > u && !s.count(v)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(kept, edges);
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (!g.contains(s)) {
        throw std::invalid_argument("induced_subgraph: set not contained in graph");
    }
    std::vector<std::pair<int, int>> edges;
    for (int u : s) {
        for (int v : g.neighbors(u)) {
            if (v > u && s.count(v)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(s, edges);
}

Graph complement(const Graph& g) {
    VertexSet vs = g.vertices();
    std::vector<std::pair<int, int>> edges;
    for (auto it = vs.begin(); it != vs.end(); ++it) {
        auto jt = it;
        for (++jt; jt != vs.end(); ++jt) {
            if (!g.has_edge(*it, *jt)) {
                edges.emplace_back(*it, *jt);
            }
        }
    }
    return Graph(vs, edges);
}

bool is_bdd_set(const Graph& g, const VertexSet& s, int d) {
    if (d < 0) {
        throw std::invalid_argument("is_bdd_set: d must be non-negative");
    }
    if (!g.contains(s)) {
        throw std::invalid_argument("is_bdd_set: set not contained in graph");
    }
    for (const auto& [v, nbrs] : g.adjacency()) {
        if (s.count(v)) {
            continue;
        }
        int remaining = 0;
        for (int u : nbrs) {
            if (!s.count(u) && ++remaining > d) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace bdd
