#include "dfvs/cover_problem.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "dfvs/pace_io.hpp"

namespace dfvs {
namespace {

const std::set<Vertex> kNoVertices;
const std::set<std::size_t> kNoIndices;

}  // namespace

void CoverProblem::add_set(VertexList members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty()) throw std::invalid_argument("CoverProblem: empty constraint set");
    if (members.size() == 1) {
        include(members.front());
        return;
    }
    if (members.size() == 2) {
        add_edge(members[0], members[1]);
        return;
    }
    const std::size_t index = sets_.size();
    for (Vertex v : members) touch(v).sets.insert(index);
    sets_.push_back(std::move(members));
}

void CoverProblem::add_edge(Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("CoverProblem: edge needs two distinct vertices");
    if (touch(u).neighbors.insert(v).second) {
        touch(v).neighbors.insert(u);
        ++edge_count_;
    }
}

void CoverProblem::add_graph(DirectedGraph g) {
    const std::size_t gi = graphs_.size();
    const VertexList verts = g.vertices();
    for (Vertex v : verts) touch(v).graphs.insert(gi);
    graphs_.emplace_back(std::move(g));
    trim_graph(gi, verts);
}

VertexList CoverProblem::vertices() const {
    VertexList out;
    out.reserve(state_.size());
    for (const auto& [v, st] : state_) out.push_back(v);
    return out;
}

std::size_t CoverProblem::degree(Vertex v) const {
    auto it = state_.find(v);
    return it == state_.end() ? 0 : it->second.neighbors.size();
}

const std::set<Vertex>& CoverProblem::neighbors(Vertex v) const {
    auto it = state_.find(v);
    return it == state_.end() ? kNoVertices : it->second.neighbors;
}

bool CoverProblem::adjacent(Vertex u, Vertex v) const { return neighbors(u).contains(v); }

const std::set<std::size_t>& CoverProblem::big_sets_of(Vertex v) const {
    auto it = state_.find(v);
    return it == state_.end() ? kNoIndices : it->second.sets;
}

std::size_t CoverProblem::graph_count(Vertex v) const {
    auto it = state_.find(v);
    return it == state_.end() ? 0 : it->second.graphs.size();
}

bool CoverProblem::bare(Vertex v) const {
    auto it = state_.find(v);
    return it == state_.end() || (it->second.sets.empty() && it->second.graphs.empty());
}

std::vector<std::pair<Vertex, Vertex>> CoverProblem::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count_);
    for (const auto& [u, st] : state_)
        for (auto it = st.neighbors.upper_bound(u); it != st.neighbors.end(); ++it)
            out.emplace_back(u, *it);
    return out;
}

std::vector<std::size_t> CoverProblem::big_set_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < sets_.size(); ++i)
        if (!sets_[i].empty()) out.push_back(i);
    return out;
}

std::vector<VertexList> CoverProblem::big_sets() const {
    std::vector<VertexList> out;
    for (const auto& s : sets_)
        if (!s.empty()) out.push_back(s);
    return out;
}

std::vector<const DirectedGraph*> CoverProblem::graphs() const {
    std::vector<const DirectedGraph*> out;
    for (const auto& g : graphs_)
        if (g) out.push_back(&*g);
    return out;
}

std::size_t CoverProblem::graph_total() const {
    return static_cast<std::size_t>(
        std::count_if(graphs_.begin(), graphs_.end(), [](const auto& g) { return g.has_value(); }));
}

void CoverProblem::drop_if_empty(Vertex v) {
    auto it = state_.find(v);
    if (it != state_.end() && it->second.empty()) state_.erase(it);
}

void CoverProblem::remove_edge(Vertex u, Vertex v) {
    if (state_.at(u).neighbors.erase(v) == 0) return;
    state_.at(v).neighbors.erase(u);
    --edge_count_;
}

void CoverProblem::remove_big_set(std::size_t index) {
    VertexList members = std::move(sets_.at(index));
    sets_[index].clear();
    for (Vertex v : members) {
        state_.at(v).sets.erase(index);
        drop_if_empty(v);
    }
}

// Repeatedly strips vertices with no in- or out-arcs, starting from seeds.
void CoverProblem::trim_graph(std::size_t gi, VertexList seeds) {
    DirectedGraph& g = *graphs_[gi];
    std::deque<Vertex> work(seeds.begin(), seeds.end());
    while (!work.empty()) {
        const Vertex x = work.front();
        work.pop_front();
        if (!g.has_vertex(x)) continue;
        if (g.in_degree(x) > 0 && g.out_degree(x) > 0) continue;
        for (Vertex w : g.out_neighbors(x)) work.push_back(w);
        for (Vertex p : g.in_neighbors(x)) work.push_back(p);
        g.remove_vertex(x);
        state_.at(x).graphs.erase(gi);
        drop_if_empty(x);
    }
    if (g.empty()) graphs_[gi].reset();
}

void CoverProblem::include(Vertex v) {
    forced_.push_back(v);
    trace_.emplace_back(Include{v});
    auto it = state_.find(v);
    if (it == state_.end()) return;
    for (Vertex w : VertexList(it->second.neighbors.begin(), it->second.neighbors.end())) {
        remove_edge(v, w);
        drop_if_empty(w);
    }
    for (std::size_t si : std::vector<std::size_t>(it->second.sets.begin(), it->second.sets.end()))
        remove_big_set(si);
    auto again = state_.find(v);
    if (again == state_.end()) return;
    for (std::size_t gi :
         std::vector<std::size_t>(again->second.graphs.begin(), again->second.graphs.end())) {
        DirectedGraph& g = *graphs_[gi];
        VertexList seeds = g.out_neighbors(v).to_vector();
        for (Vertex p : g.in_neighbors(v)) seeds.push_back(p);
        g.remove_vertex(v);
        state_.at(v).graphs.erase(gi);
        trim_graph(gi, std::move(seeds));
    }
    drop_if_empty(v);
}

void CoverProblem::exclude(Vertex v) {
    auto it = state_.find(v);
    if (it != state_.end()) {
        if (!it->second.neighbors.empty() || !it->second.graphs.empty())
            throw std::logic_error("CoverProblem::exclude: vertex " + std::to_string(v) +
                                   " still has edges or graphs");
        for (std::size_t si :
             std::vector<std::size_t>(it->second.sets.begin(), it->second.sets.end())) {
            VertexList shrunk = sets_[si];
            std::erase(shrunk, v);
            remove_big_set(si);
            add_set(std::move(shrunk));
        }
        drop_if_empty(v);
    }
    trace_.emplace_back(Exclude{v});
}

void CoverProblem::erase_vertex(Vertex v) {
    auto it = state_.find(v);
    if (it == state_.end()) return;
    if (!it->second.sets.empty() || !it->second.graphs.empty())
        throw std::logic_error("CoverProblem::erase_vertex: vertex " + std::to_string(v) +
                               " is not bare");
    for (Vertex w : VertexList(it->second.neighbors.begin(), it->second.neighbors.end())) {
        remove_edge(v, w);
        drop_if_empty(w);
    }
    drop_if_empty(v);
}

std::string CoverProblem::dump() const {
    std::ostringstream out;
    for (const auto& [u, w] : edges()) out << "e " << u << ' ' << w << '\n';
    for (const auto& s : big_sets()) {
        out << 's';
        for (Vertex v : s) out << ' ' << v;
        out << '\n';
    }
    for (const DirectedGraph* g : graphs()) out << "g\n" << write_pace(*g);
    return out.str();
}

}  // namespace dfvs
