#pragma once

// Simple undirected graphs with stable integer vertex ids, plus the
// induced-subgraph / complement / degree primitives everything else
// is built on. Graphs are immutable after construction; all reduction
// operations return new graphs.

#include <iosfwd>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bdd {

using VertexSet = std::set<int>;

/// Thrown by the parsers; carries the 1-based input line number.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + message),
          line(line_no) {}
};

enum class GraphFormat { edge_list, dimacs };

class Graph {
public:
    Graph() = default;

    /// Builds a simple graph. The vertex set is `vertices` plus all edge
    /// endpoints; duplicate edges collapse. Self-loops are rejected.
    Graph(const VertexSet& vertices, const std::vector<std::pair<int, int>>& edges);

    bool has_vertex(int v) const { return adj_.count(v) != 0; }
    bool has_edge(int u, int v) const;

    /// Neighbors of v in ascending id order. Throws if v is not a vertex.
    const VertexSet& neighbors(int v) const;

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    bool empty() const { return adj_.empty(); }

    std::size_t degree(int v) const { return neighbors(v).size(); }
    std::size_t max_degree() const;

    VertexSet vertices() const;

    /// Underlying adjacency map, keyed ascending; values ascending.
    const std::map<int, VertexSet>& adjacency() const { return adj_; }

    /// True iff s is a subset of the vertex set.
    bool contains(const VertexSet& s) const;

    bool operator==(const Graph& other) const = default;

private:
    std::map<int, VertexSet> adj_;
    std::size_t edge_count_ = 0;
};

Graph parse_graph(std::istream& in, GraphFormat format);
Graph parse_graph(const std::string& text, GraphFormat format);

/// Edge-list output: one "u v" line per edge, sorted by (min, max) endpoint.
/// Isolated vertices are not representable in this format.
/// DIMACS output requires the vertex ids to be exactly 1..n.
void serialize_graph(const Graph& g, std::ostream& out, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

/// Induced subgraph on V \ s. Throws std::invalid_argument if s has
/// vertices outside g.
Graph remove_vertices(const Graph& g, const VertexSet& s);

/// Induced subgraph on s.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

/// Same vertices, complemented edge set.
Graph complement(const Graph& g);

/// True iff every vertex of g - s has degree at most d there.
bool is_bdd_set(const Graph& g, const VertexSet& s, int d);

}  // namespace bdd
