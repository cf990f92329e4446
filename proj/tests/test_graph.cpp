#include <random>

#include "doctest.h"
#include "gcx/graph.hpp"

using namespace gcx;

TEST_CASE("parse: tetrahedron line") {
    auto [c, g] = parse_term("1 ; 12 13 14 23 24 34");
    CHECK(c == 1);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
    CHECK(same_edge(g.edges()[0], {1, 2}));
    CHECK(same_edge(g.edges()[5], {3, 4}));
}

TEST_CASE("parse: prism line with coefficient 5/2") {
    auto [c, g] = parse_term("5/2 ; 12 23 34 41 45 15 56 36 26 13");
    CHECK(c == Rational(5, 2));
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 10);
    CHECK(g.edges()[3].a == 4);  // endpoint writing order preserved
    CHECK(g.edges()[3].b == 1);
    CHECK(g.valency(1) == 4);
    CHECK(g.valency(3) == 4);
    CHECK(g.valency(2) == 3);
}

TEST_CASE("parse: one-vertex edgeless graph") {
    auto [c, g] = parse_term("1 ; v1");
    CHECK(c == 1);
    CHECK(g.vertex_count() == 1);
    CHECK(g.edge_count() == 0);
    CHECK(g.valency(1) == 0);
}

TEST_CASE("parse: v token raises the vertex count") {
    auto [c, g] = parse_term("-3 ; 12 v5");
    CHECK(c == -3);
    CHECK(g.vertex_count() == 5);
    CHECK(serialize_term(c, g) == "-3 ; 12 v5");
}

TEST_CASE("parse: dashed labels above 9") {
    auto [c, g] = parse_term("1 ; 9-10 10-11 9-11");
    CHECK(g.vertex_count() == 11);
    CHECK(g.edge_count() == 3);
    CHECK(serialize_term(c, g) == "1 ; 9-10 10-11 9-11");
}

TEST_CASE("parse errors name the offending token") {
    CHECK_THROWS_WITH_AS(parse_term("1 ; 11"), doctest::Contains("tadpole"), ParseError);
    CHECK_THROWS_WITH_AS(parse_term("1 ; 3-3"), doctest::Contains("tadpole"), ParseError);
    CHECK_THROWS_WITH_AS(parse_term("1 ; 12 21"), doctest::Contains("duplicate"), ParseError);
    CHECK_THROWS_WITH_AS(parse_term("1 ; 01"), doctest::Contains("label 0"), ParseError);
    CHECK_THROWS_WITH_AS(parse_term("1 ; 1x"), doctest::Contains("malformed"), ParseError);
    CHECK_THROWS_WITH_AS(parse_term("1 ; 123"), doctest::Contains("malformed"), ParseError);
    CHECK_THROWS_AS(parse_term("1 ; v0"), ParseError);
    CHECK_THROWS_AS(parse_term("1 12 13"), ParseError);     // no separator
    CHECK_THROWS_AS(parse_term("x ; 12"), ParseError);      // bad coefficient
    CHECK_THROWS_AS(parse_term("5//2 ; 12"), ParseError);
    CHECK_THROWS_AS(parse_term("1 ;"), ParseError);         // nothing at all
}

TEST_CASE("sum text: comments and blank lines") {
    auto terms = parse_sum_text("# header\n\n1 ; 12\n  # indented comment\n-1/2 ; 12 23 # tail\n");
    REQUIRE(terms.size() == 2);
    CHECK(terms[1].first == Rational(-1, 2));
    CHECK(terms[1].second.vertex_count() == 3);
}

TEST_CASE("valency examples") {
    Graph tetra = parse_term("1 ; 12 13 14 23 24 34").second;
    for (int v = 1; v <= 4; ++v) CHECK(tetra.valency(v) == 3);
    CHECK(wheel(5).valency(6) == 5);
    CHECK_THROWS_AS(tetra.valency(0), std::out_of_range);
    CHECK_THROWS_AS(tetra.valency(5), std::out_of_range);
}

TEST_CASE("wheel shapes") {
    Graph w3 = wheel(3);
    CHECK(w3.vertex_count() == 4);
    CHECK(w3.edge_count() == 6);
    CHECK(wheel(5).vertex_count() == 6);
    CHECK(wheel(5).edge_count() == 10);
    CHECK(wheel(7).vertex_count() == 8);
    CHECK(wheel(7).edge_count() == 14);
    CHECK_THROWS_AS(wheel(2), std::invalid_argument);
}

TEST_CASE("graph invariants enforced at construction") {
    CHECK_THROWS_AS(Graph(2, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{1, 2}, {2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
}

TEST_CASE("connectivity") {
    CHECK(Graph(1, {}).connected());
    CHECK(Graph(3, {{1, 2}, {2, 3}}).connected());
    CHECK_FALSE(Graph(4, {{1, 2}, {3, 4}}).connected());
    CHECK_FALSE(Graph(3, {{1, 2}}).connected());
}

TEST_CASE("serialize examples") {
    Graph tetra = parse_term("1 ; 12 13 14 23 24 34").second;
    CHECK(serialize_term(1, tetra) == "1 ; 12 13 14 23 24 34");
    auto [c, prism] = parse_term("5/2 ; 12 23 34 41 45 15 56 36 26 13");
    CHECK(serialize_term(c, prism) == "5/2 ; 12 23 34 41 45 15 56 36 26 13");
    CHECK(serialize_term(1, Graph(1, {})) == "1 ; v1");
}

TEST_CASE("round-trip on random graphs and coefficients") {
    std::mt19937 rng(20240901);
    auto pairs = [&](int n) {
        std::vector<Edge> all;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) all.push_back({i, j});
        return all;
    };
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        auto all = pairs(n);
        std::shuffle(all.begin(), all.end(), rng);
        std::size_t e = all.empty() ? 0 : rng() % (all.size() + 1);
        std::vector<Edge> edges(all.begin(), all.begin() + e);
        for (Edge& ed : edges)
            if (rng() % 2) std::swap(ed.a, ed.b);
        Graph g(n, edges);
        Rational c(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 40) + 1);
        c.canonicalize();
        auto [c2, g2] = parse_term(serialize_term(c, g));
        CHECK(c2 == c);
        CHECK(g2 == g);
        CHECK(g2.vertex_count() == g.vertex_count());
    }
}

TEST_CASE("rational parsing and printing") {
    CHECK(to_string(parse_rational("-21/8")) == "-21/8");
    CHECK(to_string(parse_rational("4/2")) == "2");
    CHECK(to_string(parse_rational("0")) == "0");
    CHECK(parse_rational("5/2") == Rational(5, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("--1"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}
