#include <doctest.h>

#include <sstream>

#include "bdd/graph.hpp"
#include "bdd/random_graph.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace bdd;
using namespace bddtest;

TEST_CASE("graph construction keeps the simple-graph invariants") {
    Graph g = make_graph({{0, 1}, {1, 2}, {0, 1}, {2, 1}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);  // duplicates collapse, both orders
    std::size_t degree_sum = 0;
    for (const auto& [v, nbrs] : g.adjacency()) {
        degree_sum += nbrs.size();
        for (int u : nbrs) {
            CHECK(g.neighbors(u).count(v) == 1);  // symmetry
        }
    }
    CHECK(degree_sum == 2 * g.edge_count());
    CHECK_THROWS_AS(make_graph({{3, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(g.neighbors(7), std::invalid_argument);
}

TEST_CASE("dimacs parsing") {
    Graph g = parse_graph("p edge 3 2\ne 1 2\ne 2 3\n", GraphFormat::dimacs);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 3));
    CHECK_FALSE(g.has_edge(1, 3));

    SUBCASE("header-only vertices are isolated") {
        Graph iso = parse_graph("p edge 3 0\n", GraphFormat::dimacs);
        CHECK(iso.vertex_count() == 3);
        CHECK(iso.edge_count() == 0);
    }
    SUBCASE("comments and blank lines are skipped") {
        Graph c = parse_graph("c a comment\n\np edge 2 1\nc another\ne 1 2\n",
                              GraphFormat::dimacs);
        CHECK(c.edge_count() == 1);
    }
    SUBCASE("range violations carry the line number") {
        try {
            parse_graph("p edge 3 1\ne 1 4\n", GraphFormat::dimacs);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line == 2);
        }
    }
    SUBCASE("self-loops are rejected") {
        CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 2 2\n", GraphFormat::dimacs), ParseError);
    }
    SUBCASE("malformed lines are rejected") {
        CHECK_THROWS_AS(parse_graph("p edge two 1\n", GraphFormat::dimacs), ParseError);
        CHECK_THROWS_AS(parse_graph("p edge 2 1\nq 1 2\n", GraphFormat::dimacs), ParseError);
        CHECK_THROWS_AS(parse_graph("e 1 2\n", GraphFormat::dimacs), ParseError);
        CHECK_THROWS_AS(parse_graph("", GraphFormat::dimacs), ParseError);
    }
}

TEST_CASE("edge-list parsing") {
    Graph g = parse_graph("# path\n1 2\n2 3\n1 2\n", GraphFormat::edge_list);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);  // duplicate collapses

    SUBCASE("trailing comments allowed") {
        Graph c = parse_graph("4 5 # an edge\n", GraphFormat::edge_list);
        CHECK(c.has_edge(4, 5));
    }
    SUBCASE("errors carry line numbers") {
        try {
            parse_graph("1 2\n1 2 3\n", GraphFormat::edge_list);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line == 2);
        }
        CHECK_THROWS_AS(parse_graph("1\n", GraphFormat::edge_list), ParseError);
        CHECK_THROWS_AS(parse_graph("5 5\n", GraphFormat::edge_list), ParseError);
        CHECK_THROWS_AS(parse_graph("-1 2\n", GraphFormat::edge_list), ParseError);
    }
}

TEST_CASE("serialization round-trips") {
    SUBCASE("dimacs keeps isolated vertices") {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            Graph g = erdos_renyi(9, 0.3, seed);
            Graph back = parse_graph(serialize_graph(g, GraphFormat::dimacs),
                                     GraphFormat::dimacs);
            CHECK(back == g);
        }
    }
    SUBCASE("edge-list round-trips graphs without isolated vertices") {
        Graph g = make_graph({{2, 7}, {1, 2}, {7, 1}, {3, 7}});
        Graph back =
            parse_graph(serialize_graph(g, GraphFormat::edge_list), GraphFormat::edge_list);
        CHECK(back == g);
    }
    SUBCASE("edges are emitted sorted by endpoints") {
        Graph g = make_graph({{5, 1}, {2, 1}, {3, 2}});
        CHECK(serialize_graph(g, GraphFormat::edge_list) == "1 2\n1 5\n2 3\n");
    }
    SUBCASE("dimacs output requires ids 1..n") {
        CHECK_THROWS_AS(serialize_graph(make_graph({{0, 1}}), GraphFormat::dimacs),
                        std::invalid_argument);
    }
}

TEST_CASE("remove_vertices") {
    Graph path = path_graph(3);
    Graph cut = remove_vertices(path, {1});
    CHECK(cut.vertex_count() == 2);
    CHECK(cut.edge_count() == 0);
    CHECK(cut.has_vertex(0));
    CHECK(cut.has_vertex(2));
    CHECK(path.edge_count() == 2);  // input untouched

    CHECK(remove_vertices(path, {}) == path);

    Graph tri = complete_graph(3);
    CHECK(remove_vertices(tri, {0}).edge_count() == 1);

    CHECK_THROWS_AS(remove_vertices(path, {9}), std::invalid_argument);
}

TEST_CASE("complement") {
    CHECK(complement(complete_graph(3)).edge_count() == 0);
    Graph co_path = complement(path_graph(3));
    CHECK(co_path.edge_count() == 1);
    CHECK(co_path.has_edge(0, 2));

    SUBCASE("involution on random graphs") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            Graph g = erdos_renyi(8, 0.5, seed);
            CHECK(complement(complement(g)) == g);
        }
    }
}

TEST_CASE("is_bdd_set") {
    Graph path = path_graph(3);
    CHECK(is_bdd_set(path, {1}, 0));
    CHECK_FALSE(is_bdd_set(path, {}, 0));
    CHECK(is_bdd_set(complete_graph(5), {0, 1}, 2));  // K3 remains, degrees 2
    CHECK_THROWS_AS(is_bdd_set(path, {7}, 0), std::invalid_argument);
    CHECK_THROWS_AS(is_bdd_set(path, {1}, -1), std::invalid_argument);
}

TEST_CASE("removal-degree equivalence on random graphs") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = erdos_renyi(8, 0.4, rng.next());
        VertexSet s;
        for (int v = 1; v <= 8; ++v) {
            if (rng.next_unit() < 0.3) {
                s.insert(v);
            }
        }
        for (int d = 0; d <= 2; ++d) {
            CHECK(is_bdd_set(g, s, d) ==
                  (remove_vertices(g, s).max_degree() <= static_cast<std::size_t>(d)));
        }
    }
}

TEST_CASE("bounded degree means no large star") {
    // Exhaustive star search: some vertex with d+1 chosen neighbors.
    auto has_star = [](const Graph& g, int d) {
        for (const auto& [v, nbrs] : g.adjacency()) {
            if (nbrs.size() >= static_cast<std::size_t>(d) + 1) {
                return true;  // any d+1 of the neighbors form the star
            }
        }
        return false;
    };
    SplitMix64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = erdos_renyi(10, 0.35, rng.next());
        for (int d = 0; d <= 3; ++d) {
            CHECK((g.max_degree() <= static_cast<std::size_t>(d)) == !has_star(g, d));
        }
    }
}
