#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "dfvs/graph.hpp"

namespace dfvs {

struct Include { Vertex v; };
/// v left the problem without entering the cover.
struct Exclude { Vertex v; };
/// Degree-two fold: `merged` replaced center with neighbors u and w.
struct Fold { Vertex merged; Vertex u; Vertex w; Vertex center; };
/// Some optimal cover takes all of one side and none of the other. At lift
/// time side_b is taken when every vertex of a_neighbors is covered,
/// otherwise side_a (which then needs all of b_neighbors covered).
struct Alternative {
    VertexList side_a, side_b;
    VertexList a_neighbors, b_neighbors;
    std::size_t units = 0;
};

using CoverEvent = std::variant<Include, Exclude, Fold, Alternative>;

/**
 * Hitting-set instance built from chordless cycles: size-two sets are kept
 * as an undirected edge structure, larger sets as "big sets", and cycle
 * families that could not be listed stay attached as directed graphs that
 * the final cover must make acyclic.
 *
 * Degree counts edges only. A vertex is bare when it lies in no big set and
 * no attached graph. Vertices that no longer occur anywhere are dropped
 * silently.
 */
class CoverProblem {
public:
    explicit CoverProblem(Vertex first_fresh_id = 1) : next_fresh_(first_fresh_id) {}

    /// Adds a constraint set. One vertex: included outright; two: an edge.
    /// Throws std::invalid_argument for an empty set.
    void add_set(VertexList members);
    void add_edge(Vertex u, Vertex v);
    void add_graph(DirectedGraph g);

    VertexList vertices() const;
    bool contains(Vertex v) const { return state_.contains(v); }
    std::size_t degree(Vertex v) const;
    const std::set<Vertex>& neighbors(Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const;
    /// Indices of live big sets containing v.
    const std::set<std::size_t>& big_sets_of(Vertex v) const;
    std::size_t graph_count(Vertex v) const;
    bool in_graph(Vertex v) const { return graph_count(v) > 0; }
    bool bare(Vertex v) const;

    std::vector<std::pair<Vertex, Vertex>> edges() const;
    std::size_t edge_count() const { return edge_count_; }
    const VertexList& big_set(std::size_t index) const { return sets_.at(index); }
    /// Live big set indices in creation order.
    std::vector<std::size_t> big_set_indices() const;
    std::vector<VertexList> big_sets() const;
    std::vector<const DirectedGraph*> graphs() const;
    std::size_t graph_total() const;

    /// True once nothing is left to cover.
    bool solved() const { return edge_count_ == 0 && big_set_indices().empty() && graph_total() == 0; }

    const VertexList& forced() const { return forced_; }
    std::size_t offset() const { return offset_; }
    const std::vector<CoverEvent>& trace() const { return trace_; }

    // Primitive mutations used by the reduction rules.

    /// Puts v into the cover: its sets are satisfied, it leaves every
    /// attached graph and those graphs lose their sources and sinks.
    void include(Vertex v);
    /// Drops v from the problem without covering it. Requires degree 0 and
    /// no graph membership; v is removed from its big sets.
    void exclude(Vertex v);
    void remove_big_set(std::size_t index);
    /// Removes v and its edges without recording an event. Requires v to be
    /// in no big set and no graph.
    void erase_vertex(Vertex v);
    Vertex fresh_vertex() { return next_fresh_++; }
    void add_offset(std::size_t units) { offset_ += units; }
    void record(CoverEvent ev) { trace_.push_back(std::move(ev)); }

    /// Debug dump: "e u v" per edge, "s v1 v2 ..." per big set and a "g"
    /// line followed by a PACE block per attached graph.
    std::string dump() const;

private:
    struct VertexState {
        std::set<Vertex> neighbors;
        std::set<std::size_t> sets;
        std::set<std::size_t> graphs;
        bool empty() const { return neighbors.empty() && sets.empty() && graphs.empty(); }
    };

    VertexState& touch(Vertex v) { return state_[v]; }
    void drop_if_empty(Vertex v);
    void remove_edge(Vertex u, Vertex v);
    void trim_graph(std::size_t gi, VertexList seeds);

    std::map<Vertex, VertexState> state_;
    std::vector<VertexList> sets_;  // sorted members; empty when removed
    std::vector<std::optional<DirectedGraph>> graphs_;
    std::size_t edge_count_ = 0;
    VertexList forced_;
    std::size_t offset_ = 0;
    std::vector<CoverEvent> trace_;
    Vertex next_fresh_;
};

}  // namespace dfvs
