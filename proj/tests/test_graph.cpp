#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <set>

#include "robin/errors.hpp"
#include "robin/graph.hpp"
#include "robin/graph_io.hpp"
#include "oracles.hpp"

using namespace robin;

TEST_CASE("simplify drops loops and duplicates, keeps node set") {
    const Graph g = simplify(3, {{0, 1}, {0, 1}, {1, 1}});
    CHECK(g.node_count() == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("simplify is idempotent") {
    const Graph once = simplify(5, {{1, 0}, {0, 1}, {2, 2}, {3, 4}, {4, 3}, {2, 3}});
    const Graph twice = simplify(once.node_count(), once.edges());
    CHECK(once == twice);
}

TEST_CASE("simplify collapses a doubled K4 back to K4") {
    std::vector<Edge> doubled;
    for (int u = 0; u < 4; ++u) {
        for (int v = u + 1; v < 4; ++v) {
            doubled.push_back({u, v});
            doubled.push_back({v, u});
        }
    }
    const Graph g = simplify(4, doubled);
    CHECK(g.edge_count() == 6);
    CHECK(degree_sequence(g) == DegreeSequence{3, 3, 3, 3});
}

TEST_CASE("graph construction rejects out-of-range endpoints") {
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1, {}), std::invalid_argument);
}

TEST_CASE("degree sequence") {
    CHECK(degree_sequence(Graph(3, {{0, 1}, {1, 2}})) == DegreeSequence{1, 2, 1});
    CHECK(degree_sequence(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})) ==
          DegreeSequence{2, 2, 2, 2});
}

// ---------------------------------------------------------------------------
// GML
// ---------------------------------------------------------------------------

TEST_CASE("parse_gml minimal document") {
    const Graph g = parse_gml("graph [ node [ id 10 ] node [ id 20 ] "
                              "edge [ source 10 target 20 ] ]");
    CHECK(g.node_count() == 2);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}});
    CHECK_FALSE(g.has_ground_truth());
}

TEST_CASE("parse_gml simplifies duplicates and loops") {
    const Graph g = parse_gml(
        "graph [ node [ id 0 ] node [ id 1 ] node [ id 2 ]\n"
        "edge [ source 0 target 1 ]\n"
        "edge [ source 0 target 1 ]\n"
        "edge [ source 2 target 2 ] ]");
    CHECK(g.node_count() == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("parse_gml keeps values as ground truth and labels") {
    const Graph g = parse_gml(
        "# a comment\n"
        "Creator \"someone\"\n"
        "graph [ directed 0\n"
        "  node [ id 7 label \"a\" value 3 ]\n"
        "  node [ id 3 label \"b\" value 3 ]\n"
        "  node [ id 9 label \"c\" value 5 ]\n"
        "  edge [ source 7 target 9 ]\n"
        "]");
    CHECK(g.node_count() == 3);
    REQUIRE(g.has_ground_truth());
    CHECK(g.ground_truth() == std::vector<int>{3, 3, 5});
    REQUIRE(g.has_labels());
    CHECK(g.labels() == std::vector<std::string>{"a", "b", "c"});
    // ids 7,3,9 re-indexed in file order: edge 7-9 becomes 0-2
    CHECK(g.edges() == std::vector<Edge>{{0, 2}});
}

TEST_CASE("parse_gml partial values do not become ground truth") {
    const Graph g = parse_gml("graph [ node [ id 0 value 1 ] node [ id 1 ] ]");
    CHECK_FALSE(g.has_ground_truth());
}

TEST_CASE("parse_gml error positions") {
    SUBCASE("unbalanced brackets") {
        try {
            parse_gml("graph [\n node [ id 0 ]\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 1);
        }
    }
    SUBCASE("node without id") {
        CHECK_THROWS_AS(parse_gml("graph [ node [ label \"x\" ] ]"), ParseError);
    }
    SUBCASE("edge missing endpoint") {
        CHECK_THROWS_AS(parse_gml("graph [ node [ id 0 ] edge [ source 0 ] ]"), ParseError);
    }
    SUBCASE("edge referencing unknown id") {
        try {
            parse_gml("graph [ node [ id 0 ]\nnode [ id 1 ]\nedge [ source 0 target 5 ] ]");
            FAIL("expected ReferenceError");
        } catch (const ReferenceError& e) {
            CHECK(e.line() == 3);
        }
    }
    SUBCASE("duplicate node id") {
        CHECK_THROWS_AS(parse_gml("graph [ node [ id 0 ] node [ id 0 ] ]"), ParseError);
    }
}

TEST_CASE("parse_gml skips unknown nested blocks") {
    const Graph g = parse_gml(
        "graph [ node [ id 0 graphics [ x 1.5 y 2.0 ] ] node [ id 1 ]\n"
        "edge [ source 0 target 1 weight 2.5 ] ]");
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("parse_gml reads the bundled football dataset") {
    std::ifstream in(std::string(ROBIN_DATA_DIR) + "/football.gml");
    REQUIRE(in.good());
    const Graph g = parse_gml(in);
    CHECK(g.node_count() == 115);
    CHECK(g.edge_count() == 613);
    REQUIRE(g.has_ground_truth());
    std::set<int> conferences(g.ground_truth().begin(), g.ground_truth().end());
    CHECK(conferences.size() == 12);
    int degree_total = 0;
    for (int d : degree_sequence(g)) degree_total += d;
    CHECK(degree_total == 1226);
}

// ---------------------------------------------------------------------------
// Edge lists
// ---------------------------------------------------------------------------

TEST_CASE("parse_edgelist labels in first-appearance order") {
    const Graph g = parse_edgelist("a b\nb c");
    CHECK(g.node_count() == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("parse_edgelist dedups and drops loops") {
    const Graph g = parse_edgelist("0 1\n1 0\n0 0");
    CHECK(g.node_count() == 2);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("parse_edgelist empty input") {
    const Graph g = parse_edgelist("");
    CHECK(g.node_count() == 0);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("parse_edgelist rejects odd token count") {
    CHECK_THROWS_AS(parse_edgelist("a b c"), ParseError);
    try {
        parse_edgelist("a b\nx\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("parse_edgelist accepts multiple pairs per line") {
    const Graph g = parse_edgelist("a b c d");
    CHECK(g.node_count() == 4);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("write_edgelist format") {
    CHECK(write_edgelist(Graph(2, {{0, 1}})) == "2 1\n0 1\n");
    CHECK(write_edgelist(Graph(3, {})) == "3 0\n");
}

TEST_CASE("write/parse round trip including isolated nodes") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = oracle::random_gnp(17, 0.2, seed);
        CHECK(parse_edgelist(write_edgelist(g)) == g);
    }
}

TEST_CASE("parse then write is canonical after one pass") {
    const std::string text = "c a\na b\nb c\nb a\n";
    const std::string once = write_edgelist(parse_edgelist(text));
    CHECK(write_edgelist(parse_edgelist(once)) == once);
}

// ---------------------------------------------------------------------------
// Rewiring
// ---------------------------------------------------------------------------

TEST_CASE("rewire_fraction zero keeps the graph") {
    const Graph g = oracle::random_gnp(30, 0.2, 7);
    CHECK(rewire_fraction(g, 0.0, RngSeed{1}) == g);
}

TEST_CASE("rewire on a path cannot move anything") {
    const Graph path(3, {{0, 1}, {1, 2}});
    const Graph out = rewire_fraction(path, 1.0, RngSeed{5});
    CHECK(degree_sequence(out) == DegreeSequence{1, 2, 1});
    CHECK(out == path);  // both edges share node 1, no disjoint pair exists
}

TEST_CASE("rewiring a 4-cycle lands on a labeled 4-cycle") {
    const Graph cycle(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    const std::vector<std::vector<Edge>> cycles = {
        {{0, 1}, {0, 3}, {1, 2}, {2, 3}},
        {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
        {{0, 2}, {0, 3}, {1, 2}, {1, 3}},
    };
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph out = rewire_fraction(cycle, 0.5, RngSeed{seed});
        CHECK(degree_sequence(out) == DegreeSequence{2, 2, 2, 2});
        CHECK(std::count(cycles.begin(), cycles.end(), out.edges()) == 1);
    }
}

TEST_CASE("rewire preserves degrees, edge count and simplicity") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const Graph g = oracle::random_gnp(40, 0.15, 100 + seed);
        for (double fraction : {0.05, 0.3, 0.6}) {
            const Graph out = rewire_fraction(g, fraction, RngSeed{seed});
            CHECK(degree_sequence(out) == degree_sequence(g));
            CHECK(out.edge_count() == g.edge_count());
            // simplicity is structural: edges() is a sorted unique set of u<v pairs
            for (const Edge& e : out.edges()) CHECK(e.first < e.second);
        }
    }
}

TEST_CASE("rewire determinism") {
    const Graph g = oracle::random_gnp(50, 0.2, 11);
    CHECK(rewire_fraction(g, 0.4, RngSeed{42}) == rewire_fraction(g, 0.4, RngSeed{42}));
    CHECK(null_configuration_model(g, RngSeed{9}) == null_configuration_model(g, RngSeed{9}));
}

TEST_CASE("null model keeps unique realizations fixed") {
    std::vector<Edge> k5;
    for (int u = 0; u < 5; ++u) {
        for (int v = u + 1; v < 5; ++v) k5.push_back({u, v});
    }
    const Graph complete(5, k5);
    CHECK(null_configuration_model(complete, RngSeed{3}) == complete);

    const Graph star(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    CHECK(null_configuration_model(star, RngSeed{3}) == star);
}

TEST_CASE("null model randomizes but preserves the degree sequence") {
    const Graph g = oracle::random_gnp(60, 0.12, 123);
    const Graph nullg = null_configuration_model(g, RngSeed{17});
    CHECK(degree_sequence(nullg) == degree_sequence(g));
    CHECK(nullg.edge_count() == g.edge_count());
    CHECK_FALSE(nullg == g);
}
