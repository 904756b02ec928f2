#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "dfvs/graph.hpp"

namespace dfvs {

/// Directed cycle stored rotated so that its smallest vertex id leads.
class Cycle {
public:
    Cycle() = default;
    explicit Cycle(VertexList sequence);

    const VertexList& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    /// Vertex ids in ascending order.
    VertexList sorted_vertices() const;

    auto operator<=>(const Cycle&) const = default;

private:
    VertexList vertices_;
};

struct CycleSet {
    std::set<Cycle> cycles;
    bool complete = true;
};

inline constexpr std::uint64_t kDefaultEnumBudget = 10'000'000;

/// Per-rule counters of one enumerate_chordless call.
struct EnumStats {
    std::size_t two_cycles = 0;          // rule 1
    std::size_t scc_splits = 0;          // rule 2
    std::size_t simple_cycles = 0;       // rule 3
    std::size_t path_vertices_removed = 0;  // rule 4
    std::size_t hub_in_cycles = 0;       // rule 5
    std::size_t hub_out_cycles = 0;      // rule 6
    std::size_t vertex_splits = 0;       // rule 7
    std::size_t edge_splits = 0;         // rule 8
    std::size_t brute_force_cycles = 0;  // rule 9
    std::size_t brute_force_gave_up = 0;
    std::size_t chorded_discarded = 0;

    EnumStats& operator+=(const EnumStats& o);
};

struct EnumOutcome {
    CycleSet cycles;
    /// Constraint graphs whose cycles could not all be listed. Every cycle
    /// of the input is hit by a set that hits `cycles` and is a feedback
    /// set of each residual.
    std::vector<DirectedGraph> residuals;
    EnumStats stats;
};

struct TwoCycleSplit {
    std::vector<Cycle> cycles;
    DirectedGraph reduced;
};

/// Emits every 2-cycle and deletes both of its arcs.
TwoCycleSplit reduce_two_cycles(DirectedGraph g);

/// Emits every weak component that is a single directed cycle and drops it.
TwoCycleSplit take_simple_cycle_components(DirectedGraph g);

/// Removes interior vertices of paths u->m1->...->mk->v (each mi with in-
/// and out-degree 1) whenever the shortcut u->v exists. Runs to fixpoint.
DirectedGraph contract_interior_paths(DirectedGraph g, std::size_t* removed = nullptr);

enum class HubSide { In, Out };

/// Lists all chordless cycles when at most one vertex has in-degree >= 2
/// (HubSide::In) or out-degree >= 2 (HubSide::Out). nullopt when the
/// degree precondition fails or g is not strongly connected.
std::optional<CycleSet> enumerate_hub(const DirectedGraph& g, HubSide side);
std::optional<CycleSet> enumerate_hub(const DirectedGraph& g);

enum class SeparatorMode { Vertex, Edge };

/// Splits g at a weak articulation point (Vertex) or at the endpoints of
/// an arc whose removal disconnects the skeleton (Edge). Each piece keeps
/// the separator vertices. nullopt when no separator exists.
std::optional<std::vector<DirectedGraph>> split_on_separator(const DirectedGraph& g,
                                                             SeparatorMode mode);

/// Instrumentation for the block-counting enumerator.
struct BruteForceProbe {
    /// Called on entry to each search call, before counters change.
    std::function<void(std::span<const std::int64_t>)> on_call;
    /// Called on every return that is not caused by budget exhaustion.
    std::function<void(std::span<const std::int64_t>)> on_return;
    std::uint64_t nodes_visited = 0;
};

/// Depth-first chordless cycle enumeration with block counters. Start
/// vertices are taken in g's vertex order. complete is false iff the
/// search visited more than `budget` nodes.
CycleSet brute_force_enum(const DirectedGraph& g, std::uint64_t budget = kDefaultEnumBudget,
                          BruteForceProbe* probe = nullptr);

/// Full rule cascade on one constraint graph. g must be loop-free.
EnumOutcome enumerate_chordless(const DirectedGraph& g, std::uint64_t budget = kDefaultEnumBudget);

bool is_chordless(const Cycle& c, const DirectedGraph& g);

/// Cycles of `cycles` with no chord in g; reverse arcs count as chords.
std::set<Cycle> chord_filter(const std::set<Cycle>& cycles, const DirectedGraph& g);

/// Shortcuts c along chords of g, first chord from the head first, until
/// chordless. Self-loops are ignored.
Cycle trim_to_chordless(const Cycle& c, const DirectedGraph& g);

/// Randomized DFS harvesting: per round, find a cycle, trim it, record it,
/// delete one of its arcs from a scratch copy; repeat until acyclic.
std::set<Cycle> harvest_random_cycles(const DirectedGraph& g, std::size_t rounds,
                                      std::uint64_t seed);

/// One cycle per line, space separated.
std::string format_cycles(const std::set<Cycle>& cycles);

}  // namespace dfvs
