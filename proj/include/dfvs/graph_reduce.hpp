#pragma once

#include <cstddef>
#include <stdexcept>
#include <variant>
#include <vector>

#include "dfvs/graph.hpp"

namespace dfvs {

struct ForcedSelfLoop { Vertex v; };
struct RemovedSourceSink { Vertex v; };
/// v was merged away; every cycle through v also runs through `into`.
struct Contracted { Vertex v; Vertex into; };

using GraphReductionEvent = std::variant<ForcedSelfLoop, RemovedSourceSink, Contracted>;

struct ReductionTrace {
    std::vector<GraphReductionEvent> events;
};

class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class LiftError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct GraphKernel {
    /// Strongly connected, loop-free, every vertex with in- and out-degree >= 2.
    std::vector<DirectedGraph> subgraphs;
    /// Vertices that carried a self-loop; part of every feedback set.
    VertexList forced;
    ReductionTrace trace;
    std::size_t removed_source_sink = 0;
    std::size_t contracted = 0;
    std::size_t scc_resplits = 0;
};

/// Contracts v (in- or out-degree 1) into its unique neighbor on that side.
/// Returns the surviving neighbor. A created arc u->u stays as a self-loop.
Vertex contract_vertex(DirectedGraph& g, Vertex v);

/// Self-loop, source/sink and degree-one contraction rules to fixpoint,
/// with a strongly connected component split in between.
GraphKernel kernelize_graph(DirectedGraph g);

/// sub_solution united with forced; checks the trace for consistency.
VertexList lift_graph_solution(const VertexList& sub_solution, const VertexList& forced,
                               const ReductionTrace& trace);

}  // namespace dfvs
