#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace dfvs {

/// 1-based vertex identifier, as numbered in the input instance.
using Vertex = std::uint32_t;

using VertexList = std::vector<Vertex>;
using Arc = std::pair<Vertex, Vertex>;

/**
 * Mutable directed graph over arbitrary vertex ids.
 *
 * Adjacency lists keep insertion order, so every traversal is deterministic
 * for a given construction sequence. Removals are lazy: a removed arc or
 * vertex leaves a stale entry in the neighbor lists that iteration skips,
 * and lists are compacted once stale entries outnumber live ones.
 *
 * Parallel arcs are never stored. Self-loops are ordinary arcs v->v.
 */
class DirectedGraph {
    struct Node {
        Vertex id = 0;
        bool alive = false;
        std::vector<Vertex> out;
        std::vector<Vertex> in;
        std::uint32_t out_degree = 0;
        std::uint32_t in_degree = 0;
        std::uint32_t out_stale = 0;
        std::uint32_t in_stale = 0;
    };

public:
    /// Forward range over the live entries of one adjacency list.
    class NeighborRange {
    public:
        class iterator {
        public:
            using iterator_category = std::forward_iterator_tag;
            using value_type = Vertex;
            using difference_type = std::ptrdiff_t;
            using pointer = const Vertex*;
            using reference = Vertex;

            iterator() = default;
            iterator(const DirectedGraph* g, Vertex self, bool outgoing, const Vertex* pos,
                     const Vertex* end)
                : g_(g), self_(self), outgoing_(outgoing), pos_(pos), end_(end) {
                skip();
            }
            Vertex operator*() const { return *pos_; }
            iterator& operator++() {
                ++pos_;
                skip();
                return *this;
            }
            iterator operator++(int) {
                auto copy = *this;
                ++*this;
                return copy;
            }
            bool operator==(const iterator& o) const { return pos_ == o.pos_; }

        private:
            void skip() {
                while (pos_ != end_ && !(outgoing_ ? g_->has_arc(self_, *pos_)
                                                   : g_->has_arc(*pos_, self_)))
                    ++pos_;
            }
            const DirectedGraph* g_ = nullptr;
            Vertex self_ = 0;
            bool outgoing_ = true;
            const Vertex* pos_ = nullptr;
            const Vertex* end_ = nullptr;
        };

        NeighborRange(const DirectedGraph* g, Vertex self, bool outgoing,
                      const std::vector<Vertex>* list)
            : g_(g), self_(self), outgoing_(outgoing), list_(list) {}

        iterator begin() const {
            if (list_ == nullptr) return {};
            return {g_, self_, outgoing_, list_->data(), list_->data() + list_->size()};
        }
        iterator end() const {
            if (list_ == nullptr) return {};
            const Vertex* e = list_->data() + list_->size();
            return {g_, self_, outgoing_, e, e};
        }
        VertexList to_vector() const { return {begin(), end()}; }

    private:
        const DirectedGraph* g_;
        Vertex self_;
        bool outgoing_;
        const std::vector<Vertex>* list_;
    };

    DirectedGraph() = default;

    /// Inserts an isolated vertex. Returns false if it was already present.
    bool add_vertex(Vertex v);
    /// Inserts u->v, adding missing endpoints. Returns false for an existing arc.
    bool add_arc(Vertex u, Vertex v);
    bool remove_arc(Vertex u, Vertex v);
    /// Removes v and every incident arc. No-op for an absent vertex.
    void remove_vertex(Vertex v);

    bool has_vertex(Vertex v) const;
    bool has_arc(Vertex u, Vertex v) const { return arcs_.contains(arc_key(u, v)); }
    bool has_self_loop(Vertex v) const { return has_arc(v, v); }

    std::size_t vertex_count() const { return live_vertices_; }
    std::size_t arc_count() const { return arcs_.size(); }
    bool empty() const { return live_vertices_ == 0; }

    std::size_t out_degree(Vertex v) const;
    std::size_t in_degree(Vertex v) const;

    NeighborRange out_neighbors(Vertex v) const;
    NeighborRange in_neighbors(Vertex v) const;

    /// Live vertices in insertion order.
    VertexList vertices() const;
    /// Live arcs, grouped by tail in vertex insertion order.
    std::vector<Arc> arcs() const;
    Vertex max_vertex() const;

    /// Subgraph induced by `keep`; vertex and arc order follow this graph.
    DirectedGraph induced(std::span<const Vertex> keep) const;
    DirectedGraph without(std::span<const Vertex> drop) const;

    /// Same vertex set and arc set, ignoring insertion order.
    bool same_structure(const DirectedGraph& other) const;

private:
    static std::uint64_t arc_key(Vertex u, Vertex v) {
        return (static_cast<std::uint64_t>(u) << 32) | v;
    }
    Node* node(Vertex v);
    const Node* node(Vertex v) const;
    Node& ensure(Vertex v);
    void compact_out(Node& n);
    void compact_in(Node& n);

    std::vector<Node> nodes_;
    std::unordered_map<Vertex, std::uint32_t> slot_;
    std::unordered_set<std::uint64_t> arcs_;
    std::size_t live_vertices_ = 0;
};

/**
 * Immutable compressed snapshot of a DirectedGraph with vertices relabelled
 * 0..n-1 in the source graph's vertex order. Hot loops (SCC, enumeration,
 * search) run on this form.
 */
struct IndexedGraph {
    VertexList ids;
    std::unordered_map<Vertex, std::uint32_t> index;
    std::vector<std::uint32_t> out_offsets, out_targets;
    std::vector<std::uint32_t> in_offsets, in_targets;

    explicit IndexedGraph(const DirectedGraph& g);

    std::uint32_t size() const { return static_cast<std::uint32_t>(ids.size()); }
    std::span<const std::uint32_t> out(std::uint32_t i) const {
        return {out_targets.data() + out_offsets[i], out_targets.data() + out_offsets[i + 1]};
    }
    std::span<const std::uint32_t> in(std::uint32_t i) const {
        return {in_targets.data() + in_offsets[i], in_targets.data() + in_offsets[i + 1]};
    }
};

}  // namespace dfvs
