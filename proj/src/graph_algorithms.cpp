#include "dfvs/graph_algorithms.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace dfvs {
namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

// Undirected skeleton: deduplicated neighbor lists, self-loops dropped.
std::vector<std::vector<std::uint32_t>> undirected_skeleton(const IndexedGraph& ig) {
    const std::uint32_t n = ig.size();
    std::vector<std::vector<std::uint32_t>> adj(n);
    std::vector<std::uint32_t> mark(n, kUnvisited);
    for (std::uint32_t v = 0; v < n; ++v) {
        mark[v] = v;
        for (auto w : ig.out(v))
            if (mark[w] != v) { mark[w] = v; adj[v].push_back(w); }
        for (auto w : ig.in(v))
            if (mark[w] != v) { mark[w] = v; adj[v].push_back(w); }
    }
    return adj;
}

}  // namespace

std::vector<VertexList> scc_decompose(const DirectedGraph& g) {
    const IndexedGraph ig(g);
    const std::uint32_t n = ig.size();
    std::vector<std::uint32_t> order(n, kUnvisited), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<std::uint32_t> stack;
    struct Frame { std::uint32_t v; std::uint32_t pos; };
    std::vector<Frame> calls;
    std::vector<VertexList> result;
    std::uint32_t counter = 0;

    for (std::uint32_t s = 0; s < n; ++s) {
        if (order[s] != kUnvisited) continue;
        order[s] = low[s] = counter++;
        stack.push_back(s);
        on_stack[s] = 1;
        calls.push_back({s, 0});
        while (!calls.empty()) {
            Frame& f = calls.back();
            const auto succ = ig.out(f.v);
            if (f.pos < succ.size()) {
                const std::uint32_t w = succ[f.pos++];
                if (order[w] == kUnvisited) {
                    order[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    calls.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], order[w]);
                }
                continue;
            }
            const std::uint32_t v = f.v;
            calls.pop_back();
            if (!calls.empty()) low[calls.back().v] = std::min(low[calls.back().v], low[v]);
            if (low[v] != order[v]) continue;
            VertexList comp;
            std::uint32_t w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = 0;
                comp.push_back(ig.ids[w]);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            result.push_back(std::move(comp));
        }
    }
    return result;
}

bool is_strongly_connected(const DirectedGraph& g) {
    if (g.empty()) return true;
    const IndexedGraph ig(g);
    const std::uint32_t n = ig.size();
    auto reaches_all = [&](bool forward) {
        std::vector<char> seen(n, 0);
        std::vector<std::uint32_t> todo{0};
        seen[0] = 1;
        std::uint32_t count = 1;
        while (!todo.empty()) {
            const std::uint32_t v = todo.back();
            todo.pop_back();
            for (auto w : forward ? ig.out(v) : ig.in(v))
                if (!seen[w]) { seen[w] = 1; ++count; todo.push_back(w); }
        }
        return count == n;
    };
    return reaches_all(true) && reaches_all(false);
}

bool is_acyclic(const DirectedGraph& g) {
    const IndexedGraph ig(g);
    const std::uint32_t n = ig.size();
    std::vector<std::uint32_t> indeg(n);
    std::vector<std::uint32_t> ready;
    for (std::uint32_t v = 0; v < n; ++v) {
        indeg[v] = static_cast<std::uint32_t>(ig.in(v).size());
        if (indeg[v] == 0) ready.push_back(v);
    }
    std::uint32_t removed = 0;
    while (!ready.empty()) {
        const std::uint32_t v = ready.back();
        ready.pop_back();
        ++removed;
        for (auto w : ig.out(v))
            if (--indeg[w] == 0) ready.push_back(w);
    }
    return removed == n;
}

std::optional<VertexList> find_cycle(const DirectedGraph& g) {
    const IndexedGraph ig(g);
    const std::uint32_t n = ig.size();
    enum : char { kWhite, kGray, kBlack };
    std::vector<char> color(n, kWhite);
    struct Frame { std::uint32_t v; std::uint32_t pos; };
    std::vector<Frame> calls;
    for (std::uint32_t s = 0; s < n; ++s) {
        if (color[s] != kWhite) continue;
        color[s] = kGray;
        calls.push_back({s, 0});
        while (!calls.empty()) {
            Frame& f = calls.back();
            const auto succ = ig.out(f.v);
            if (f.pos == succ.size()) {
                color[f.v] = kBlack;
                calls.pop_back();
                continue;
            }
            const std::uint32_t w = succ[f.pos++];
            if (color[w] == kWhite) {
                color[w] = kGray;
                calls.push_back({w, 0});
            } else if (color[w] == kGray) {
                VertexList cycle;
                auto it = std::find_if(calls.begin(), calls.end(),
                                       [&](const Frame& fr) { return fr.v == w; });
                for (; it != calls.end(); ++it) cycle.push_back(ig.ids[it->v]);
                return cycle;
            }
        }
    }
    return std::nullopt;
}

std::vector<VertexList> weak_components(const DirectedGraph& g) {
    const IndexedGraph ig(g);
    const auto adj = undirected_skeleton(ig);
    const std::uint32_t n = ig.size();
    std::vector<char> seen(n, 0);
    std::vector<VertexList> comps;
    std::vector<std::uint32_t> todo;
    for (std::uint32_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        todo.assign(1, s);
        VertexList comp;
        while (!todo.empty()) {
            const std::uint32_t v = todo.back();
            todo.pop_back();
            comp.push_back(ig.ids[v]);
            for (auto w : adj[v])
                if (!seen[w]) { seen[w] = 1; todo.push_back(w); }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

VertexList weak_articulation_points(const DirectedGraph& g) {
    const IndexedGraph ig(g);
    const auto adj = undirected_skeleton(ig);
    const std::uint32_t n = ig.size();
    std::vector<std::uint32_t> order(n, kUnvisited), low(n, 0), parent(n, kUnvisited);
    std::vector<char> is_cut(n, 0);
    struct Frame { std::uint32_t v; std::uint32_t pos; };
    std::vector<Frame> calls;
    std::uint32_t counter = 0;

    for (std::uint32_t root = 0; root < n; ++root) {
        if (order[root] != kUnvisited) continue;
        order[root] = low[root] = counter++;
        std::uint32_t root_children = 0;
        calls.push_back({root, 0});
        while (!calls.empty()) {
            Frame& f = calls.back();
            const std::uint32_t v = f.v;
            if (f.pos < adj[v].size()) {
                const std::uint32_t w = adj[v][f.pos++];
                if (order[w] == kUnvisited) {
                    parent[w] = v;
                    order[w] = low[w] = counter++;
                    if (v == root) ++root_children;
                    calls.push_back({w, 0});
                } else if (w != parent[v]) {
                    low[v] = std::min(low[v], order[w]);
                }
                continue;
            }
            calls.pop_back();
            if (calls.empty()) continue;
            const std::uint32_t p = calls.back().v;
            low[p] = std::min(low[p], low[v]);
            if (p != root && low[v] >= order[p]) is_cut[p] = 1;
        }
        if (root_children > 1) is_cut[root] = 1;
    }

    VertexList out;
    for (std::uint32_t v = 0; v < n; ++v)
        if (is_cut[v]) out.push_back(ig.ids[v]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dfvs
