#include <doctest.h>

#include <sstream>

#include "dfvs/graph.hpp"
#include "dfvs/graph_algorithms.hpp"
#include "dfvs/pace_io.hpp"
#include "support/generators.hpp"

using namespace dfvs;
using namespace dfvs::testing;

TEST_CASE("arcs and degrees track removals") {
    DirectedGraph g = from_arcs({{1, 2}, {2, 3}, {3, 1}, {1, 3}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.arc_count() == 4);
    CHECK(g.out_degree(1) == 2);
    CHECK(g.in_degree(3) == 2);
    CHECK_FALSE(g.add_arc(1, 2));
    CHECK(g.remove_arc(1, 3));
    CHECK_FALSE(g.has_arc(1, 3));
    CHECK(g.out_neighbors(1).to_vector() == VertexList{2});
    g.remove_vertex(2);
    CHECK(g.vertex_count() == 2);
    CHECK(g.arc_count() == 1);
    CHECK(g.in_neighbors(1).to_vector() == VertexList{3});
}

TEST_CASE("repeated add and remove keeps neighbor lists consistent") {
    Rng rng(11);
    DirectedGraph g;
    std::set<std::pair<Vertex, Vertex>> shadow;
    for (int i = 0; i < 5000; ++i) {
        const Vertex u = 1 + pick(rng, 8), v = 1 + pick(rng, 8);
        if (coin(rng, 0.6)) {
            g.add_arc(u, v);
            shadow.insert({u, v});
        } else {
            g.remove_arc(u, v);
            shadow.erase({u, v});
        }
    }
    CHECK(g.arc_count() == shadow.size());
    for (Vertex u = 1; u <= 8; ++u) {
        if (!g.has_vertex(u)) continue;
        std::size_t out = 0;
        for (Vertex v : g.out_neighbors(u)) {
            CHECK(shadow.contains({u, v}));
            ++out;
        }
        CHECK(out == g.out_degree(u));
    }
}

TEST_CASE("induced and without subgraphs") {
    const DirectedGraph g = from_arcs({{1, 2}, {2, 3}, {3, 1}, {3, 4}});
    const VertexList keep{1, 2, 3};
    const DirectedGraph h = g.induced(keep);
    CHECK(h.vertex_count() == 3);
    CHECK(h.arc_count() == 3);
    const VertexList drop{3};
    const DirectedGraph w = g.without(drop);
    CHECK(w.arc_count() == 1);
    CHECK(w.has_vertex(4));
}

TEST_CASE("scc_decompose") {
    CHECK(scc_decompose(directed_cycle(3)) == std::vector<VertexList>{{1, 2, 3}});
    CHECK(scc_decompose(from_arcs({{1, 2}, {2, 3}})) == std::vector<VertexList>{{3}, {2}, {1}});
    const auto g = from_arcs({{1, 2}, {2, 1}, {2, 3}, {3, 4}, {4, 3}});
    CHECK(scc_decompose(g) == std::vector<VertexList>{{3, 4}, {1, 2}});
}

TEST_CASE("is_acyclic and find_cycle") {
    CHECK(is_acyclic(from_arcs({{1, 2}, {2, 3}})));
    CHECK_FALSE(is_acyclic(directed_cycle(3)));
    CHECK(is_acyclic(DirectedGraph{}));
    CHECK_FALSE(find_cycle(from_arcs({{1, 2}})));
    const auto c = find_cycle(from_arcs({{1, 2}, {2, 3}, {3, 1}, {3, 4}}));
    REQUIRE(c);
    CHECK(c->size() == 3);
    const auto loop = find_cycle(from_arcs({{5, 5}}));
    REQUIRE(loop);
    CHECK(*loop == VertexList{5});
}

TEST_CASE("weak_articulation_points") {
    CHECK(weak_articulation_points(from_arcs({{1, 2}, {3, 2}})) == VertexList{2});
    CHECK(weak_articulation_points(directed_cycle(4)).empty());
    const auto bowtie = from_arcs({{1, 2}, {2, 3}, {3, 1}, {1, 4}, {4, 5}, {5, 1}});
    CHECK(weak_articulation_points(bowtie) == VertexList{1});
}

TEST_CASE("parse_pace reads arcs, comments and isolated vertices") {
    const auto c3 = parse_pace("3 3 0\n2\n3\n1\n");
    CHECK(c3.graph.same_structure(directed_cycle(3)));
    const auto two = parse_pace("2 2 0\n2\n1\n");
    CHECK(two.graph.has_arc(1, 2));
    CHECK(two.graph.has_arc(2, 1));
    const auto one = parse_pace("1 0 0\n\n");
    CHECK(one.graph.vertex_count() == 1);
    CHECK(one.graph.arc_count() == 0);
    const auto commented = parse_pace("% header next\n2 1 0\n% between\n2\n\n");
    CHECK(commented.graph.arc_count() == 1);
}

TEST_CASE("parse_pace rejects malformed input with a line number") {
    CHECK_THROWS_AS(parse_pace(""), ParseError);
    CHECK_THROWS_AS(parse_pace("3 3 1\n2\n3\n1\n"), ParseError);
    CHECK_THROWS_AS(parse_pace("2 1 0\n3\n\n"), ParseError);
    CHECK_THROWS_AS(parse_pace("2 2 0\n2\n\n"), ParseError);
    CHECK_THROWS_AS(parse_pace("1 0 0\n\nextra\n"), ParseError);
    try {
        parse_pace("2 1 0\nx\n\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("write_pace round trips") {
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        const DirectedGraph g = random_digraph(rng, 1 + pick(rng, 15), 0.2, 0.1);
        const auto back = parse_pace(write_pace(g));
        CHECK(back.graph.same_structure(g));
    }
}

TEST_CASE("solutions are written sorted, one id per line") {
    CHECK(write_solution({3, 1}) == "1\n3\n");
    CHECK(write_solution({}).empty());
    CHECK(write_solution({7}) == "7\n");
    std::istringstream in("3\n% note\n1\n");
    CHECK(parse_solution(in) == VertexList{3, 1});
}
