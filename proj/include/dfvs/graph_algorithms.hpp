#pragma once

#include <optional>
#include <vector>

#include "dfvs/graph.hpp"

namespace dfvs {

/// Strongly connected components in reverse topological order (sinks
/// first). Each component is sorted by vertex id.
std::vector<VertexList> scc_decompose(const DirectedGraph& g);

bool is_strongly_connected(const DirectedGraph& g);

/// True iff g has no directed cycle; a self-loop is a cycle.
bool is_acyclic(const DirectedGraph& g);

/// Some directed cycle of g as a vertex sequence, or nullopt if acyclic.
std::optional<VertexList> find_cycle(const DirectedGraph& g);

/// Connected components of the underlying undirected graph, in order of
/// first vertex appearance.
std::vector<VertexList> weak_components(const DirectedGraph& g);

/// Cut vertices of the underlying undirected graph, sorted.
VertexList weak_articulation_points(const DirectedGraph& g);

}  // namespace dfvs
