#include "dfvs/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "dfvs/graph_algorithms.hpp"
#include "dfvs/graph_reduce.hpp"

namespace dfvs {
namespace {

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t harvest_seed(std::uint64_t seed, std::size_t iteration, std::size_t graph) {
    return mix(mix(seed) ^ (iteration << 20) ^ graph);
}

// Adds each cycle's vertex set unless an identical constraint exists.
std::size_t add_cycles(IlpModel& m, std::set<VertexList>& seen, const std::set<Cycle>& cycles) {
    std::size_t added = 0;
    for (const Cycle& c : cycles) {
        VertexList key = c.sorted_vertices();
        if (!seen.insert(key).second) continue;
        add_constraint(m, std::move(key));
        ++added;
    }
    return added;
}

// Extends a cover so that every attached graph becomes acyclic.
VertexList make_feasible(VertexList chosen, const std::vector<const DirectedGraph*>& graphs) {
    for (const DirectedGraph* g : graphs) {
        DirectedGraph rest = g->without(chosen);
        while (auto cyc = find_cycle(rest)) {
            const Vertex pick = *std::min_element(cyc->begin(), cyc->end());
            chosen.push_back(pick);
            rest.remove_vertex(pick);
        }
    }
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    return chosen;
}

}  // namespace

std::set<Cycle> max_edge_disjoint_cycles(const DirectedGraph& g, const VertexList& removed) {
    const DirectedGraph base = g.without(removed);
    DirectedGraph rest = base;
    std::set<Cycle> out;
    while (auto raw = find_cycle(rest)) {
        Cycle c = trim_to_chordless(Cycle(*raw), base);
        const auto& vs = c.vertices();
        bool live = true;
        for (std::size_t i = 0; i < vs.size() && live; ++i)
            live = rest.has_arc(vs[i], vs[(i + 1) % vs.size()]);
        if (!live) c = trim_to_chordless(Cycle(*raw), rest);
        const auto& ws = c.vertices();
        for (std::size_t i = 0; i < ws.size(); ++i) rest.remove_arc(ws[i], ws[(i + 1) % ws.size()]);
        out.insert(std::move(c));
    }
    return out;
}

namespace {

Solution lazy_loop_until(const CoverProblem& p, const SolverConfig& cfg, const Deadline& deadline) {
    Solution out;
    const auto graphs = p.graphs();
    IlpModel model = build_model(p);
    std::set<VertexList> seen(model.constraints.begin(), model.constraints.end());
    for (std::size_t gi = 0; gi < graphs.size(); ++gi)
        add_cycles(model, seen,
                   harvest_random_cycles(*graphs[gi], cfg.harvest_rounds, harvest_seed(cfg.seed, 0, gi)));

    for (std::size_t iteration = 1;; ++iteration) {
        out.stats.lazy_iterations = iteration;
        CoverSolution sol = solve_cover_exact(model, deadline);
        out.stats.bb_nodes += sol.nodes;
        out.lower_bound = sol.lower_bound;
        if (!sol.optimal) {
            out.vertices = make_feasible(std::move(sol.chosen), graphs);
            out.optimal = false;
            break;
        }
        std::size_t added = 0;
        for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
            const DirectedGraph rest = graphs[gi]->without(sol.chosen);
            if (is_acyclic(rest)) continue;
            added += add_cycles(model, seen, max_edge_disjoint_cycles(*graphs[gi], sol.chosen));
            add_cycles(model, seen,
                       harvest_random_cycles(rest, cfg.harvest_rounds,
                                             harvest_seed(cfg.seed, iteration, gi)));
        }
        if (added == 0) {
            // Every graph is acyclic under the candidate; it is optimal
            // because each constraint is a cycle the answer must hit.
            out.vertices = std::move(sol.chosen);
            break;
        }
        if (deadline.expired()) {
            out.vertices = make_feasible(std::move(sol.chosen), graphs);
            out.optimal = false;
            break;
        }
    }
    out.stats.constraints = model.constraints.size();
    out.model = std::move(model);
    return out;
}

Solution solve_reduced(const CoverProblem& p, const SolverConfig& cfg, const Deadline& deadline) {
    if (p.graph_total() > 0) return lazy_loop_until(p, cfg, deadline);
    Solution out;
    out.model = build_model(p);
    CoverSolution sol = solve_cover_exact(out.model, deadline);
    out.vertices = std::move(sol.chosen);
    out.optimal = sol.optimal;
    out.lower_bound = sol.lower_bound;
    out.stats.constraints = out.model.constraints.size();
    out.stats.bb_nodes = sol.nodes;
    return out;
}

}  // namespace

Solution lazy_loop(const CoverProblem& p, const SolverConfig& cfg) {
    return lazy_loop_until(p, cfg, Deadline(cfg.time_limit, cfg.stop));
}

Solution solve_dfvs(const DirectedGraph& g, const SolverConfig& cfg) {
    const Deadline deadline(cfg.time_limit, cfg.stop);
    SolveStats st;

    GraphKernel kernel = kernelize_graph(g);
    st.graph_forced = kernel.forced.size();
    st.subgraphs = kernel.subgraphs.size();
    for (const auto& sub : kernel.subgraphs) st.kernel_vertices += sub.vertex_count();
    st.graph_removed = g.vertex_count() - st.graph_forced - st.kernel_vertices;

    CoverProblem p(g.empty() ? 1 : g.max_vertex() + 1);
    for (const auto& sub : kernel.subgraphs) {
        EnumOutcome e = enumerate_chordless(sub, cfg.enum_budget);
        st.enumeration += e.stats;
        st.chordless_cycles += e.cycles.cycles.size();
        st.enumeration_complete = st.enumeration_complete && e.cycles.complete;
        for (const Cycle& c : e.cycles.cycles) p.add_set(c.sorted_vertices());
        for (auto& r : e.residuals) p.add_graph(std::move(r));
    }

    st.cover = reduce_cover(p, CoverConfig{cfg.generalized_desks});
    st.cover_forced = p.forced().size();
    st.cover_offset = p.offset();
    st.residual_vertices = p.vertices().size();
    st.residual_graphs = p.graph_total();

    Solution reduced;
    if (!p.solved()) reduced = solve_reduced(p, cfg, deadline);
    const std::size_t reduced_size = reduced.vertices.size();

    const VertexList cover = lift_cover_solution(reduced.vertices, p.trace());
    Solution out;
    out.vertices = lift_graph_solution(cover, kernel.forced, kernel.trace);
    out.optimal = reduced.optimal;
    out.lower_bound = out.vertices.size() - reduced_size + reduced.lower_bound;
    out.model = std::move(reduced.model);
    st.constraints = reduced.stats.constraints;
    st.lazy_iterations = reduced.stats.lazy_iterations;
    st.bb_nodes = reduced.stats.bb_nodes;
    out.stats = st;

    if (!is_acyclic(g.without(out.vertices)))
        throw std::logic_error("solve_dfvs: lifted solution leaves a cycle");
    for (Vertex v : out.vertices)
        if (!g.has_vertex(v)) throw std::logic_error("solve_dfvs: solution names unknown vertex");
    return out;
}

}  // namespace dfvs
