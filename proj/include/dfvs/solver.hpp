#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>

#include "dfvs/cover_reduce.hpp"
#include "dfvs/cycle_enum.hpp"
#include "dfvs/graph.hpp"
#include "dfvs/ilp.hpp"

namespace dfvs {

struct SolverConfig {
    std::size_t harvest_rounds = 50;
    std::uint64_t enum_budget = kDefaultEnumBudget;
    bool generalized_desks = false;
    std::uint64_t seed = 0;
    std::optional<double> time_limit;  // seconds
    /// Polled during search; set from a signal handler to stop early.
    const std::atomic<bool>* stop = nullptr;
};

/// Counters collected along the pipeline.
struct SolveStats {
    std::size_t graph_forced = 0;
    std::size_t graph_removed = 0;  // sources, sinks and contracted vertices
    std::size_t kernel_vertices = 0;
    std::size_t subgraphs = 0;
    EnumStats enumeration;
    std::size_t chordless_cycles = 0;
    bool enumeration_complete = true;
    CoverStats cover;
    std::size_t cover_forced = 0;
    std::size_t cover_offset = 0;
    std::size_t residual_vertices = 0;
    std::size_t residual_graphs = 0;
    std::size_t constraints = 0;
    std::size_t lazy_iterations = 0;
    std::uint64_t bb_nodes = 0;
};

struct Solution {
    VertexList vertices;  // sorted
    bool optimal = true;
    std::size_t lower_bound = 0;
    SolveStats stats;
    /// The last model handed to branch and bound (empty if none was needed).
    IlpModel model;
};

/// Greedy arc-disjoint family of chordless cycles of g minus `removed`, in
/// DFS discovery order.
std::set<Cycle> max_edge_disjoint_cycles(const DirectedGraph& g, const VertexList& removed);

/// Solves a reduced cover problem whose attached graphs are handled by
/// repeated solve-and-cut. Returns a cover of p itself (not lifted).
Solution lazy_loop(const CoverProblem& p, const SolverConfig& cfg);

/// Minimum directed feedback vertex set of g.
Solution solve_dfvs(const DirectedGraph& g, const SolverConfig& cfg = {});

}  // namespace dfvs
