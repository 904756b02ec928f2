#include "dfvs/graph_reduce.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "dfvs/graph_algorithms.hpp"

namespace dfvs {
namespace {

class Worklist {
public:
    void push(Vertex v) {
        if (queued_.insert(v).second) queue_.push_back(v);
    }
    bool empty() const { return queue_.empty(); }
    Vertex pop() {
        const Vertex v = queue_.front();
        queue_.pop_front();
        queued_.erase(v);
        return v;
    }

private:
    std::deque<Vertex> queue_;
    std::unordered_set<Vertex> queued_;
};

void push_neighbors(const DirectedGraph& g, Vertex v, Worklist& work) {
    for (Vertex w : g.out_neighbors(v))
        if (w != v) work.push(w);
    for (Vertex p : g.in_neighbors(v))
        if (p != v) work.push(p);
}

// Self-loop, source/sink and contraction rules, in that priority, until no
// vertex in the worklist triggers one.
void reduce_pass(DirectedGraph& g, GraphKernel& kernel) {
    Worklist work;
    for (Vertex v : g.vertices()) work.push(v);
    while (!work.empty()) {
        const Vertex v = work.pop();
        if (!g.has_vertex(v)) continue;
        if (g.has_self_loop(v)) {
            kernel.forced.push_back(v);
            kernel.trace.events.emplace_back(ForcedSelfLoop{v});
            push_neighbors(g, v, work);
            g.remove_vertex(v);
            continue;
        }
        if (g.in_degree(v) == 0 || g.out_degree(v) == 0) {
            kernel.trace.events.emplace_back(RemovedSourceSink{v});
            ++kernel.removed_source_sink;
            push_neighbors(g, v, work);
            g.remove_vertex(v);
            continue;
        }
        if (g.in_degree(v) == 1 || g.out_degree(v) == 1) {
            push_neighbors(g, v, work);
            const Vertex into = contract_vertex(g, v);
            kernel.trace.events.emplace_back(Contracted{v, into});
            ++kernel.contracted;
            work.push(into);
        }
    }
}

}  // namespace

Vertex contract_vertex(DirectedGraph& g, Vertex v) {
    if (!g.has_vertex(v)) throw ContractError("contract_vertex: vertex not in graph");
    if (g.has_self_loop(v)) throw ContractError("contract_vertex: vertex has a self-loop");
    if (g.in_degree(v) == 1) {
        const Vertex u = *g.in_neighbors(v).begin();
        const VertexList succ = g.out_neighbors(v).to_vector();
        g.remove_vertex(v);
        for (Vertex w : succ) g.add_arc(u, w);
        return u;
    }
    if (g.out_degree(v) == 1) {
        const Vertex w = *g.out_neighbors(v).begin();
        const VertexList pred = g.in_neighbors(v).to_vector();
        g.remove_vertex(v);
        for (Vertex p : pred) g.add_arc(p, w);
        return w;
    }
    throw ContractError("contract_vertex: vertex " + std::to_string(v) +
                        " has neither in-degree 1 nor out-degree 1");
}

GraphKernel kernelize_graph(DirectedGraph g) {
    GraphKernel kernel;
    reduce_pass(g, kernel);

    // Components still to be split off; the first pass handles the whole
    // graph, later entries only appear if a second pass broke strong
    // connectivity.
    std::deque<DirectedGraph> pending;
    pending.push_back(std::move(g));
    bool first = true;
    while (!pending.empty()) {
        DirectedGraph current = std::move(pending.front());
        pending.pop_front();
        if (!first) ++kernel.scc_resplits;
        first = false;
        for (const VertexList& comp : scc_decompose(current)) {
            if (comp.size() == 1) {
                kernel.trace.events.emplace_back(RemovedSourceSink{comp.front()});
                ++kernel.removed_source_sink;
                continue;
            }
            DirectedGraph sub = current.induced(comp);
            reduce_pass(sub, kernel);
            if (sub.empty()) continue;
            if (is_strongly_connected(sub))
                kernel.subgraphs.push_back(std::move(sub));
            else
                pending.push_back(std::move(sub));
        }
    }
    return kernel;
}

VertexList lift_graph_solution(const VertexList& sub_solution, const VertexList& forced,
                               const ReductionTrace& trace) {
    std::unordered_set<Vertex> chosen(sub_solution.begin(), sub_solution.end());
    const std::unordered_set<Vertex> from_sub = chosen;
    chosen.insert(forced.begin(), forced.end());
    for (auto it = trace.events.rbegin(); it != trace.events.rend(); ++it) {
        std::visit(
            [&](const auto& ev) {
                using T = std::decay_t<decltype(ev)>;
                if constexpr (std::is_same_v<T, ForcedSelfLoop>) {
                    if (!chosen.contains(ev.v))
                        throw LiftError("self-loop vertex " + std::to_string(ev.v) +
                                        " missing from forced set");
                } else if constexpr (std::is_same_v<T, RemovedSourceSink>) {
                    if (from_sub.contains(ev.v))
                        throw LiftError("removed vertex " + std::to_string(ev.v) +
                                        " appears in a subgraph solution");
                } else {
                    if (from_sub.contains(ev.v))
                        throw LiftError("contracted vertex " + std::to_string(ev.v) +
                                        " appears in a subgraph solution");
                }
            },
            *it);
    }
    VertexList out(chosen.begin(), chosen.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dfvs
