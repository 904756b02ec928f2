#include <doctest.h>

#include "dfvs/cycle_enum.hpp"
#include "dfvs/graph_algorithms.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace dfvs;
using namespace dfvs::testing;

namespace {

std::set<Cycle> cycles_of(std::initializer_list<VertexList> seqs) {
    std::set<Cycle> out;
    for (const auto& s : seqs) out.insert(Cycle(s));
    return out;
}

}  // namespace

TEST_CASE("cycles are normalized to start at their smallest vertex") {
    CHECK(Cycle({3, 1, 2}).vertices() == VertexList{1, 2, 3});
    CHECK(Cycle({3, 1, 2}) == Cycle({2, 3, 1}));
    CHECK_FALSE(Cycle({1, 2, 3}) == Cycle({1, 3, 2}));
}

TEST_CASE("reduce_two_cycles") {
    auto one = reduce_two_cycles(from_arcs({{1, 2}, {2, 1}}));
    CHECK(one.cycles == std::vector<Cycle>{Cycle({1, 2})});
    CHECK(one.reduced.arc_count() == 0);

    auto none = reduce_two_cycles(directed_cycle(3));
    CHECK(none.cycles.empty());
    CHECK(none.reduced.same_structure(directed_cycle(3)));

    auto tri = reduce_two_cycles(bidirected_complete(3));
    CHECK(std::set<Cycle>(tri.cycles.begin(), tri.cycles.end()) ==
          cycles_of({{1, 2}, {1, 3}, {2, 3}}));
    CHECK(tri.reduced.arc_count() == 0);
    CHECK(chordless_cycles_reference(bidirected_complete(3)) == cycles_of({{1, 2}, {1, 3}, {2, 3}}));
}

TEST_CASE("contract_interior_paths") {
    std::size_t removed = 0;
    auto one = contract_interior_paths(from_arcs({{1, 2}, {2, 3}, {1, 3}, {3, 1}}), &removed);
    CHECK(removed == 1);
    CHECK_FALSE(one.has_vertex(2));

    removed = 0;
    auto none = contract_interior_paths(from_arcs({{1, 2}, {2, 3}, {3, 1}}), &removed);
    CHECK(removed == 0);
    CHECK(none.vertex_count() == 3);

    removed = 0;
    auto two = contract_interior_paths(from_arcs({{1, 2}, {2, 3}, {3, 4}, {1, 4}, {4, 1}}), &removed);
    CHECK(removed == 2);
    CHECK_FALSE(two.has_vertex(2));
    CHECK_FALSE(two.has_vertex(3));
}

TEST_CASE("enumerate_hub") {
    const auto flower = from_arcs({{1, 2}, {2, 3}, {3, 1}, {1, 4}, {4, 5}, {5, 1}});
    const auto both = enumerate_hub(flower);
    REQUIRE(both);
    CHECK(both->complete);
    CHECK(both->cycles == cycles_of({{1, 2, 3}, {1, 4, 5}}));
    CHECK(both->cycles == chordless_cycles_reference(flower));

    const auto plain = enumerate_hub(directed_cycle(3));
    REQUIRE(plain);
    CHECK(plain->cycles == cycles_of({{1, 2, 3}}));

    const auto two_hubs = from_arcs({{1, 2}, {2, 1}, {2, 3}, {3, 2}, {1, 3}, {3, 1}});
    CHECK_FALSE(enumerate_hub(two_hubs, HubSide::In));
}

TEST_CASE("split_on_separator") {
    const auto bowtie = from_arcs({{1, 2}, {2, 3}, {3, 1}, {1, 4}, {4, 5}, {5, 1}});
    const auto parts = split_on_separator(bowtie, SeparatorMode::Vertex);
    REQUIRE(parts);
    REQUIRE(parts->size() == 2);
    for (const auto& p : *parts) {
        CHECK(p.vertex_count() == 3);
        CHECK(p.has_vertex(1));
    }

    CHECK_FALSE(split_on_separator(bidirected_cycle(4), SeparatorMode::Vertex));

    // Two bidirected 4-cliques joined through the arc pair 1<->2.
    DirectedGraph linked = bidirected({{1, 3}, {1, 4}, {1, 5}, {3, 4}, {3, 5}, {4, 5},
                                       {2, 6}, {2, 7}, {2, 8}, {6, 7}, {6, 8}, {7, 8}, {1, 2}});
    const auto halves = split_on_separator(linked, SeparatorMode::Edge);
    REQUIRE(halves);
    CHECK(halves->size() == 2);
    std::set<Cycle> joined;
    VertexList shared = (*halves)[0].vertices();
    for (const auto& p : *halves) {
        std::erase_if(shared, [&](Vertex v) { return !p.has_vertex(v); });
        const auto part = chordless_cycles_reference(p);
        joined.insert(part.begin(), part.end());
    }
    CHECK(shared.size() == 2);
    CHECK(joined == chordless_cycles_reference(linked));
}

TEST_CASE("brute_force_enum") {
    const auto c5 = brute_force_enum(directed_cycle(5));
    CHECK(c5.complete);
    CHECK(c5.cycles == cycles_of({{1, 2, 3, 4, 5}}));

    const auto c4 = bidirected_cycle(4);
    CHECK(brute_force_enum(c4).cycles == cycles_of({{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
    CHECK(brute_force_enum(reduce_two_cycles(c4).reduced).cycles.empty());

    CHECK_FALSE(brute_force_enum(bidirected_complete(5), 0).complete);
}

TEST_CASE("brute_force_enum matches the reference on random graphs") {
    Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        const DirectedGraph g = random_digraph(rng, 2 + pick(rng, 8), 0.3);
        CHECK(brute_force_enum(g).cycles == chordless_cycles_reference(g));
    }
}

TEST_CASE("enumerate_chordless") {
    const auto c4 = enumerate_chordless(bidirected_cycle(4));
    CHECK(c4.cycles.complete);
    CHECK(c4.cycles.cycles.size() == 4);
    CHECK(c4.residuals.empty());

    const auto c3 = enumerate_chordless(directed_cycle(3));
    CHECK(c3.cycles.complete);
    CHECK(c3.cycles.cycles.size() == 1);

    // Dense with no 2-cycles and no separators, so only brute force applies.
    Rng rng(32);
    DirectedGraph t;
    for (Vertex u = 1; u <= 8; ++u)
        for (Vertex v = u + 1; v <= 8; ++v) {
            if (coin(rng, 0.5)) t.add_arc(u, v);
            else t.add_arc(v, u);
        }
    const auto sccs = scc_decompose(t);
    const auto big = *std::max_element(sccs.begin(), sccs.end(),
                                       [](const auto& a, const auto& b) { return a.size() < b.size(); });
    const DirectedGraph core = t.induced(big);
    if (core.vertex_count() >= 4) {
        const auto gave_up = enumerate_chordless(core, 0);
        CHECK_FALSE(gave_up.cycles.complete);
        REQUIRE(gave_up.residuals.size() >= 1);
    }

    CHECK_THROWS(enumerate_chordless(from_arcs({{1, 1}, {1, 2}, {2, 1}})));
}

TEST_CASE("enumeration with budget 0 still covers every cycle") {
    Rng rng(33);
    for (int i = 0; i < 150; ++i) {
        const DirectedGraph g = random_digraph(rng, 3 + pick(rng, 7), 0.35);
        const auto e = enumerate_chordless(g, 0);
        // Any cycle of g must either contain a listed cycle's vertex set or
        // live inside some residual.
        for (const Cycle& c : all_simple_cycles(g)) {
            const auto vs = c.sorted_vertices();
            bool hit = std::any_of(e.cycles.cycles.begin(), e.cycles.cycles.end(), [&](const Cycle& d) {
                const auto ds = d.sorted_vertices();
                return std::includes(vs.begin(), vs.end(), ds.begin(), ds.end());
            });
            for (const auto& r : e.residuals)
                hit = hit || !acyclic_without(r, {});
            CHECK(hit);
        }
    }
}

TEST_CASE("chord_filter and is_chordless") {
    const auto with_chord = from_arcs({{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}});
    CHECK(chord_filter(cycles_of({{1, 2, 3, 4}}), with_chord).empty());
    const auto reverse = from_arcs({{1, 2}, {2, 3}, {3, 4}, {4, 1}, {2, 1}});
    CHECK(chord_filter(cycles_of({{1, 2, 3, 4}}), reverse).empty());
    CHECK(chord_filter(cycles_of({{1, 2, 3}}), directed_cycle(3)).size() == 1);
    CHECK(is_chordless(Cycle({1, 2, 3}), directed_cycle(3)));
}

TEST_CASE("trim_to_chordless") {
    const auto g = from_arcs({{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}});
    CHECK(trim_to_chordless(Cycle({1, 2, 3, 4}), g) == Cycle({1, 3, 4}));
    CHECK(trim_to_chordless(Cycle({1, 2, 3}), directed_cycle(3)) == Cycle({1, 2, 3}));
    const auto five = from_arcs({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 3}, {3, 5}});
    CHECK(trim_to_chordless(Cycle({1, 2, 3, 4, 5}), five) == Cycle({1, 3, 5}));
}

TEST_CASE("trimmed cycles are chordless cycles of the graph") {
    Rng rng(34);
    for (int i = 0; i < 200; ++i) {
        const DirectedGraph g = random_digraph(rng, 3 + pick(rng, 8), 0.35);
        const auto all = all_simple_cycles(g);
        for (const Cycle& c : all) {
            if (c.size() < 2) continue;
            const Cycle t = trim_to_chordless(c, g);
            CHECK(chordless_reference(t, g));
            CHECK(all.contains(t));
        }
    }
}

TEST_CASE("harvest_random_cycles") {
    CHECK(harvest_random_cycles(from_arcs({{1, 2}, {2, 3}}), 10, 0).empty());
    for (std::uint64_t seed : {0ull, 1ull, 99ull})
        CHECK(harvest_random_cycles(directed_cycle(3), 5, seed) == cycles_of({{1, 2, 3}}));
    Rng rng(35);
    const DirectedGraph g = random_digraph(rng, 12, 0.3);
    const auto a = harvest_random_cycles(g, 20, 7);
    CHECK(a == harvest_random_cycles(g, 20, 7));
    const auto chordless = chordless_cycles_reference(g);
    for (const Cycle& c : a) CHECK(chordless.contains(c));
}
