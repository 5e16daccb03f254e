#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "dlap/error.hpp"
#include "dlap/graph.hpp"

using namespace dlap;

namespace {

// Adjacency matrix of the 5-vertex graph whose edge {0,1} deletion raises
// lambda_max at s = 3/4.
Graph fig3_graph() {
    return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 3}, {3, 4}});
}

std::size_t degree_sum(const Graph& g) {
    std::size_t s = 0;
    for (auto d : g.degrees()) s += d;
    return s;
}

}  // namespace

TEST_CASE("graph construction canonicalizes and rejects bad edges") {
    Graph g(3, {{2, 1}, {0, 1}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(g == Graph(3, {{1, 0}, {1, 2}}));
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), ParameterError);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), ParameterError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), ParameterError);
}

TEST_CASE("named families") {
    Graph p2 = path_graph(2);
    CHECK(p2.order() == 2);
    CHECK(p2.edges() == std::vector<Edge>{{0, 1}});

    Graph k13 = star_graph(3);
    CHECK(k13.order() == 4);
    CHECK(k13.degrees() == std::vector<std::size_t>{3, 1, 1, 1});

    Graph c4 = cycle_graph(4);
    CHECK(c4.size() == 4);
    CHECK(c4.degrees() == std::vector<std::size_t>{2, 2, 2, 2});

    Graph spider = starlike_graph({2, 2, 2});
    CHECK(spider.order() == 7);
    CHECK(spider.degree(0) == 3);
    CHECK(is_tree(spider));

    CHECK(complete_graph(4).size() == 6);

    CHECK_THROWS_AS(build_family(FamilySpec::path(0)), ParameterError);
    CHECK_THROWS_AS(build_family(FamilySpec::starlike({1, 1})), ParameterError);
    CHECK_THROWS_AS(build_family(FamilySpec::starlike({1, 0, 2})), ParameterError);
    CHECK_THROWS_AS(build_family(FamilySpec::cycle(2)), ParameterError);
}

TEST_CASE("handshake identity on every family") {
    for (std::size_t n = 1; n <= 8; ++n) {
        for (const Graph& g : {path_graph(n), star_graph(n), complete_graph(n)})
            CHECK(degree_sum(g) == 2 * g.size());
        if (n >= 3) CHECK(degree_sum(cycle_graph(n)) == 2 * n);
    }
    const Graph sl = starlike_graph({1, 3, 2, 4});
    CHECK(degree_sum(sl) == 2 * sl.size());
}

TEST_CASE("remove_edge") {
    Graph empty2 = remove_edge(path_graph(2), 0, 1);
    CHECK(empty2.order() == 2);
    CHECK(empty2.size() == 0);

    Graph opened = remove_edge(cycle_graph(4), 0, 1);
    CHECK(is_tree(opened));
    CHECK(opened.max_degree() == 2);

    Graph reduced = remove_edge(fig3_graph(), 0, 1);
    CHECK(reduced.degrees() == std::vector<std::size_t>{3, 2, 3, 3, 3});

    CHECK_THROWS_AS(remove_edge(path_graph(3), 0, 2), NotFoundError);
}

TEST_CASE("remove_edge then add_edge restores the edge set") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_connected_graph(3 + trial % 8, 0.4, rng);
        for (const Edge& e : g.edges()) CHECK(add_edge(remove_edge(g, e.first, e.second), e.first, e.second) == g);
    }
}

TEST_CASE("tree test") {
    CHECK(is_tree(path_graph(5)));
    CHECK_FALSE(is_tree(cycle_graph(4)));
    CHECK_FALSE(is_tree(Graph(4, {{0, 1}, {2, 3}})));
    CHECK(is_tree(Graph(1, {})));
}

TEST_CASE("bipartition") {
    auto p3 = bipartition(path_graph(3));
    REQUIRE(p3);
    CHECK(p3->part1 == std::vector<Vertex>{0, 2});
    CHECK(p3->part2 == std::vector<Vertex>{1});

    CHECK_FALSE(bipartition(cycle_graph(3)));

    auto s4 = bipartition(star_graph(4));
    REQUIRE(s4);
    CHECK(s4->part1 == std::vector<Vertex>{0});
    CHECK(s4->part2 == std::vector<Vertex>{1, 2, 3, 4});
}

TEST_CASE("bipartition certifies every edge crosses") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_bipartite_graph(1 + trial % 6, 1 + trial % 5, 0.5, rng);
        auto parts = bipartition(g);
        REQUIRE(parts);
        std::vector<int> side(g.order(), -1);
        for (auto v : parts->part1) side[v] = 0;
        for (auto v : parts->part2) side[v] = 1;
        for (const auto& [u, v] : g.edges()) CHECK(side[u] != side[v]);
        CHECK(parts->part1.size() + parts->part2.size() == g.order());
    }
}

TEST_CASE("root_and_order examples") {
    RootedTree p2 = root_and_order(path_graph(2), 1);
    CHECK(p2.sequence() == std::vector<Vertex>{0, 1});
    CHECK(p2.parent(0) == std::optional<Vertex>(1));
    CHECK_FALSE(p2.parent(1));

    RootedTree star = root_and_order(star_graph(3), 0);
    CHECK(star.sequence().back() == 0);
    for (std::size_t i = 0; i < 3; ++i) CHECK(star.sequence()[i] != 0);

    RootedTree chain = root_and_order(path_graph(3), 0);
    CHECK(chain.sequence() == std::vector<Vertex>{2, 1, 0});

    CHECK_THROWS_AS(root_and_order(cycle_graph(4), 0), StructureError);
    CHECK_THROWS_AS(root_and_order(path_graph(3), 3), ParameterError);
}

TEST_CASE("bottom-up order invariant on random trees") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_tree(1 + trial % 15, rng);
        REQUIRE(is_tree(g));
        Vertex root = static_cast<Vertex>(trial) % g.order();
        RootedTree t = root_and_order(g, root);
        CHECK(t.sequence().back() == root);
        CHECK(t.position(root) == g.order() - 1);
        for (Vertex v = 0; v < g.order(); ++v) {
            if (v == root) continue;
            auto p = t.parent(v);
            REQUIRE(p);
            CHECK(g.has_edge(v, *p));
            CHECK(t.position(v) < t.position(*p));
        }
    }
}

TEST_CASE("remove_vertex relabels") {
    Graph g = remove_vertex(path_graph(4), 1);
    CHECK(g.order() == 3);
    CHECK(g.edges() == std::vector<Edge>{{1, 2}});
}

TEST_CASE("edge list format") {
    std::ostringstream out;
    write_edge_list(out, path_graph(4));
    CHECK(out.str() == "4 3\n0 1\n1 2\n2 3\n");

    std::istringstream in(out.str());
    CHECK(read_edge_list(in) == path_graph(4));

    std::istringstream bad("3 2\n0 1\n1 x\n");
    try {
        read_edge_list(bad);
        FAIL("expected parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }

    std::istringstream short_file("3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(short_file), ParseError);
    std::istringstream out_of_range("2 1\n0 2\n");
    CHECK_THROWS_AS(read_edge_list(out_of_range), ParseError);
    std::istringstream dup("3 2\n0 1\n1 0\n");
    CHECK_THROWS_AS(read_edge_list(dup), ParseError);
}

TEST_CASE("edge list round trip on random graphs") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_connected_graph(2 + trial % 10, 0.3, rng);
        std::stringstream io;
        write_edge_list(io, g);
        CHECK(read_edge_list(io) == g);
    }
}
