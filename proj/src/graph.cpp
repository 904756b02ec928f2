#include "dfvs/graph.hpp"

#include <algorithm>

namespace dfvs {

DirectedGraph::Node* DirectedGraph::node(Vertex v) {
    auto it = slot_.find(v);
    if (it == slot_.end()) return nullptr;
    Node& n = nodes_[it->second];
    return n.alive ? &n : nullptr;
}

const DirectedGraph::Node* DirectedGraph::node(Vertex v) const {
    auto it = slot_.find(v);
    if (it == slot_.end()) return nullptr;
    const Node& n = nodes_[it->second];
    return n.alive ? &n : nullptr;
}

DirectedGraph::Node& DirectedGraph::ensure(Vertex v) {
    auto [it, inserted] = slot_.try_emplace(v, static_cast<std::uint32_t>(nodes_.size()));
    if (inserted) {
        nodes_.emplace_back();
        nodes_.back().id = v;
    }
    Node& n = nodes_[it->second];
    if (!n.alive) {
        n = Node{};
        n.id = v;
        n.alive = true;
        ++live_vertices_;
    }
    return n;
}

bool DirectedGraph::add_vertex(Vertex v) {
    if (node(v) != nullptr) return false;
    ensure(v);
    return true;
}

bool DirectedGraph::has_vertex(Vertex v) const { return node(v) != nullptr; }

void DirectedGraph::compact_out(Node& n) {
    const Vertex self = n.id;
    std::erase_if(n.out, [&](Vertex w) { return !has_arc(self, w); });
    n.out_stale = 0;
}

void DirectedGraph::compact_in(Node& n) {
    const Vertex self = n.id;
    std::erase_if(n.in, [&](Vertex p) { return !has_arc(p, self); });
    n.in_stale = 0;
}

bool DirectedGraph::add_arc(Vertex u, Vertex v) {
    if (has_arc(u, v)) return false;
    ensure(u);
    ensure(v);
    // `ensure` may grow nodes_, so look the slots up only afterwards.
    Node& nu = nodes_[slot_.at(u)];
    if (nu.out_stale > 0) compact_out(nu);
    Node& nv = nodes_[slot_.at(v)];
    if (nv.in_stale > 0) compact_in(nv);
    arcs_.insert(arc_key(u, v));
    nu.out.push_back(v);
    ++nu.out_degree;
    nv.in.push_back(u);
    ++nv.in_degree;
    return true;
}

bool DirectedGraph::remove_arc(Vertex u, Vertex v) {
    if (arcs_.erase(arc_key(u, v)) == 0) return false;
    Node& nu = *node(u);
    Node& nv = *node(v);
    --nu.out_degree;
    ++nu.out_stale;
    --nv.in_degree;
    ++nv.in_stale;
    if (nu.out_stale > nu.out_degree + 8) compact_out(nu);
    if (nv.in_stale > nv.in_degree + 8) compact_in(nv);
    return true;
}

void DirectedGraph::remove_vertex(Vertex v) {
    Node* nv = node(v);
    if (nv == nullptr) return;
    for (Vertex w : nv->out) {
        if (!arcs_.erase(arc_key(v, w)) || w == v) continue;
        Node& nw = *node(w);
        --nw.in_degree;
        ++nw.in_stale;
        if (nw.in_stale > nw.in_degree + 8) compact_in(nw);
    }
    for (Vertex p : nv->in) {
        if (!arcs_.erase(arc_key(p, v))) continue;
        Node& np = *node(p);
        --np.out_degree;
        ++np.out_stale;
        if (np.out_stale > np.out_degree + 8) compact_out(np);
    }
    *nv = Node{};
    nv->id = v;
    --live_vertices_;
}

std::size_t DirectedGraph::out_degree(Vertex v) const {
    const Node* n = node(v);
    return n ? n->out_degree : 0;
}

std::size_t DirectedGraph::in_degree(Vertex v) const {
    const Node* n = node(v);
    return n ? n->in_degree : 0;
}

DirectedGraph::NeighborRange DirectedGraph::out_neighbors(Vertex v) const {
    const Node* n = node(v);
    return {this, v, true, n ? &n->out : nullptr};
}

DirectedGraph::NeighborRange DirectedGraph::in_neighbors(Vertex v) const {
    const Node* n = node(v);
    return {this, v, false, n ? &n->in : nullptr};
}

VertexList DirectedGraph::vertices() const {
    VertexList out;
    out.reserve(live_vertices_);
    for (const Node& n : nodes_)
        if (n.alive) out.push_back(n.id);
    return out;
}

std::vector<Arc> DirectedGraph::arcs() const {
    std::vector<Arc> out;
    out.reserve(arcs_.size());
    for (const Node& n : nodes_) {
        if (!n.alive) continue;
        for (Vertex w : out_neighbors(n.id)) out.emplace_back(n.id, w);
    }
    return out;
}

Vertex DirectedGraph::max_vertex() const {
    Vertex best = 0;
    for (const Node& n : nodes_)
        if (n.alive) best = std::max(best, n.id);
    return best;
}

DirectedGraph DirectedGraph::induced(std::span<const Vertex> keep) const {
    std::unordered_set<Vertex> members(keep.begin(), keep.end());
    DirectedGraph sub;
    for (const Node& n : nodes_)
        if (n.alive && members.contains(n.id)) sub.add_vertex(n.id);
    for (const Node& n : nodes_) {
        if (!n.alive || !members.contains(n.id)) continue;
        for (Vertex w : out_neighbors(n.id))
            if (members.contains(w)) sub.add_arc(n.id, w);
    }
    return sub;
}

DirectedGraph DirectedGraph::without(std::span<const Vertex> drop) const {
    std::unordered_set<Vertex> gone(drop.begin(), drop.end());
    VertexList keep;
    for (Vertex v : vertices())
        if (!gone.contains(v)) keep.push_back(v);
    return induced(keep);
}

bool DirectedGraph::same_structure(const DirectedGraph& other) const {
    if (vertex_count() != other.vertex_count() || arc_count() != other.arc_count()) return false;
    for (Vertex v : vertices())
        if (!other.has_vertex(v)) return false;
    return std::all_of(arcs_.begin(), arcs_.end(),
                       [&](std::uint64_t key) { return other.arcs_.contains(key); });
}

IndexedGraph::IndexedGraph(const DirectedGraph& g) : ids(g.vertices()) {
    const auto n = static_cast<std::uint32_t>(ids.size());
    index.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) index.emplace(ids[i], i);

    out_offsets.assign(n + 1, 0);
    in_offsets.assign(n + 1, 0);
    out_targets.reserve(g.arc_count());
    for (std::uint32_t i = 0; i < n; ++i) {
        for (Vertex w : g.out_neighbors(ids[i])) out_targets.push_back(index.at(w));
        out_offsets[i + 1] = static_cast<std::uint32_t>(out_targets.size());
    }
    in_targets.reserve(g.arc_count());
    for (std::uint32_t i = 0; i < n; ++i) {
        for (Vertex p : g.in_neighbors(ids[i])) in_targets.push_back(index.at(p));
        in_offsets[i + 1] = static_cast<std::uint32_t>(in_targets.size());
    }
}

}  // namespace dfvs
