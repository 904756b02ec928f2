#include "dfvs/cycle_enum.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "dfvs/graph_algorithms.hpp"

namespace dfvs {

Cycle::Cycle(VertexList sequence) : vertices_(std::move(sequence)) {
    if (vertices_.empty()) return;
    auto lead = std::min_element(vertices_.begin(), vertices_.end());
    std::rotate(vertices_.begin(), lead, vertices_.end());
}

VertexList Cycle::sorted_vertices() const {
    VertexList out = vertices_;
    std::sort(out.begin(), out.end());
    return out;
}

EnumStats& EnumStats::operator+=(const EnumStats& o) {
    two_cycles += o.two_cycles;
    scc_splits += o.scc_splits;
    simple_cycles += o.simple_cycles;
    path_vertices_removed += o.path_vertices_removed;
    hub_in_cycles += o.hub_in_cycles;
    hub_out_cycles += o.hub_out_cycles;
    vertex_splits += o.vertex_splits;
    edge_splits += o.edge_splits;
    brute_force_cycles += o.brute_force_cycles;
    brute_force_gave_up += o.brute_force_gave_up;
    chorded_discarded += o.chorded_discarded;
    return *this;
}

namespace {

bool has_self_loops(const DirectedGraph& g) {
    for (Vertex v : g.vertices())
        if (g.has_self_loop(v)) return true;
    return false;
}

Cycle to_cycle(const IndexedGraph& ig, std::span<const std::uint32_t> idx) {
    VertexList seq;
    seq.reserve(idx.size());
    for (auto i : idx) seq.push_back(ig.ids[i]);
    return Cycle(std::move(seq));
}

// Shortcuts along the first chord found from the head until none is left.
// `pos` is scratch space of size ig.size() filled with -1.
std::vector<std::uint32_t> trim_indexed(const IndexedGraph& ig, std::vector<std::uint32_t> cyc,
                                        std::vector<std::int32_t>& pos) {
    for (;;) {
        const std::size_t k = cyc.size();
        for (std::size_t i = 0; i < k; ++i) pos[cyc[i]] = static_cast<std::int32_t>(i);
        std::vector<std::uint32_t> shorter;
        for (std::size_t i = 0; i < k && shorter.empty(); ++i) {
            for (auto w : ig.out(cyc[i])) {
                const std::int32_t j = pos[w];
                if (j < 0 || w == cyc[i] || static_cast<std::size_t>(j) == (i + 1) % k) continue;
                for (std::size_t t = static_cast<std::size_t>(j); t != i; t = (t + 1) % k)
                    shorter.push_back(cyc[t]);
                shorter.push_back(cyc[i]);
                break;
            }
        }
        for (auto v : cyc) pos[v] = -1;
        if (shorter.empty()) return cyc;
        cyc = std::move(shorter);
    }
}

}  // namespace

TwoCycleSplit reduce_two_cycles(DirectedGraph g) {
    TwoCycleSplit out;
    for (const auto& [u, v] : g.arcs()) {
        if (u >= v || !g.has_arc(u, v) || !g.has_arc(v, u)) continue;
        out.cycles.emplace_back(VertexList{u, v});
        g.remove_arc(u, v);
        g.remove_arc(v, u);
    }
    out.reduced = std::move(g);
    return out;
}

TwoCycleSplit take_simple_cycle_components(DirectedGraph g) {
    TwoCycleSplit out;
    for (const VertexList& comp : weak_components(g)) {
        const bool simple = std::all_of(comp.begin(), comp.end(), [&](Vertex v) {
            return g.in_degree(v) == 1 && g.out_degree(v) == 1;
        });
        if (!simple) continue;
        VertexList seq{comp.front()};
        for (Vertex v = *g.out_neighbors(comp.front()).begin(); v != comp.front();
             v = *g.out_neighbors(v).begin())
            seq.push_back(v);
        out.cycles.emplace_back(std::move(seq));
        for (Vertex v : comp) g.remove_vertex(v);
    }
    out.reduced = std::move(g);
    return out;
}

DirectedGraph contract_interior_paths(DirectedGraph g, std::size_t* removed) {
    auto interior = [&](Vertex x) { return g.in_degree(x) == 1 && g.out_degree(x) == 1; };
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex m : g.vertices()) {
            if (!g.has_vertex(m) || !interior(m)) continue;
            Vertex first = m;
            bool closed = false;
            for (;;) {
                const Vertex p = *g.in_neighbors(first).begin();
                if (p == m) { closed = true; break; }
                if (!interior(p)) break;
                first = p;
            }
            if (closed) continue;
            VertexList chain{first};
            for (;;) {
                const Vertex w = *g.out_neighbors(chain.back()).begin();
                if (w == first || !interior(w)) break;
                chain.push_back(w);
            }
            const Vertex u = *g.in_neighbors(chain.front()).begin();
            const Vertex v = *g.out_neighbors(chain.back()).begin();
            if (u == v || !g.has_arc(u, v)) continue;
            for (Vertex x : chain) g.remove_vertex(x);
            if (removed != nullptr) *removed += chain.size();
            changed = true;
        }
    }
    return g;
}

std::optional<CycleSet> enumerate_hub(const DirectedGraph& g, HubSide side) {
    if (g.empty()) return CycleSet{};
    if (has_self_loops(g) || !is_strongly_connected(g)) return std::nullopt;
    const IndexedGraph ig(g);
    const bool forward = side == HubSide::In;
    std::optional<std::uint32_t> hub;
    for (std::uint32_t v = 0; v < ig.size(); ++v) {
        const std::size_t deg = forward ? ig.in(v).size() : ig.out(v).size();
        if (deg < 2) continue;
        if (hub) return std::nullopt;
        hub = v;
    }
    const std::uint32_t root = hub.value_or(0);

    // Away from the hub every vertex has a unique predecessor on the walk
    // side, so the search is a tree and each hub arc closes one cycle.
    std::set<Cycle> found;
    std::vector<std::uint32_t> path{root};
    struct Frame { std::uint32_t v; std::uint32_t pos; };
    std::vector<Frame> frames{{root, 0}};
    while (!frames.empty()) {
        Frame& f = frames.back();
        const auto next = forward ? ig.out(f.v) : ig.in(f.v);
        if (f.pos == next.size()) {
            frames.pop_back();
            path.pop_back();
            continue;
        }
        const std::uint32_t w = next[f.pos++];
        if (w == root) {
            if (forward) {
                found.insert(to_cycle(ig, path));
            } else {
                std::vector<std::uint32_t> seq{root};
                seq.insert(seq.end(), path.rbegin(), path.rend() - 1);
                found.insert(to_cycle(ig, seq));
            }
            continue;
        }
        if (path.size() > ig.size()) return std::nullopt;  // unreachable for valid input
        path.push_back(w);
        frames.push_back({w, 0});
    }
    CycleSet out;
    out.cycles = chord_filter(found, g);
    return out;
}

std::optional<CycleSet> enumerate_hub(const DirectedGraph& g) {
    if (auto in = enumerate_hub(g, HubSide::In)) return in;
    return enumerate_hub(g, HubSide::Out);
}

std::optional<std::vector<DirectedGraph>> split_on_separator(const DirectedGraph& g,
                                                             SeparatorMode mode) {
    auto pieces = [&](std::span<const Vertex> separator)
        -> std::optional<std::vector<DirectedGraph>> {
        const DirectedGraph rest = g.without(separator);
        if (rest.vertex_count() < 2) return std::nullopt;
        auto comps = weak_components(rest);
        if (comps.size() < 2) return std::nullopt;
        std::vector<DirectedGraph> out;
        for (VertexList& comp : comps) {
            comp.insert(comp.end(), separator.begin(), separator.end());
            out.push_back(g.induced(comp));
        }
        return out;
    };

    if (mode == SeparatorMode::Vertex) {
        for (Vertex v : weak_articulation_points(g)) {
            const Vertex sep[] = {v};
            if (auto out = pieces(sep)) return out;
        }
        return std::nullopt;
    }
    for (const auto& [u, v] : g.arcs()) {
        if (u == v) continue;
        const Vertex sep[] = {u, v};
        if (auto out = pieces(sep)) return out;
    }
    return std::nullopt;
}

CycleSet brute_force_enum(const DirectedGraph& g, std::uint64_t budget, BruteForceProbe* probe) {
    const IndexedGraph ig(g);
    const std::uint32_t n = ig.size();
    std::vector<std::int64_t> blocks(n, 0);
    std::vector<std::uint32_t> path;
    path.reserve(n + 1);
    struct Frame {
        std::uint32_t v;
        std::uint32_t pos;
        bool start_is_child;
    };
    std::vector<Frame> frames;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    CycleSet out;

    auto notify = [&](const std::function<void(std::span<const std::int64_t>)>& hook) {
        if (hook) hook(blocks);
    };
    static const std::function<void(std::span<const std::int64_t>)> kNone;
    const auto& on_call = probe ? probe->on_call : kNone;
    const auto& on_return = probe ? probe->on_return : kNone;

    auto enter = [&](std::uint32_t v) {
        notify(on_call);
        if (++nodes > budget) {
            exhausted = true;
            return;
        }
        if (!path.empty() && v == path.front()) {
            out.cycles.insert(to_cycle(ig, path));
            notify(on_return);
            return;
        }
        if (!path.empty()) {
            ++blocks[v];
            for (auto p : ig.in(v)) ++blocks[p];
        }
        bool start_is_child = false;
        for (auto c : ig.out(v)) {
            ++blocks[c];
            if (!path.empty() ? c == path.front() : c == v) start_is_child = true;
        }
        path.push_back(v);
        frames.push_back({v, 0, start_is_child});
    };

    auto leave = [&] {
        const std::uint32_t v = frames.back().v;
        frames.pop_back();
        path.pop_back();
        if (!path.empty()) {
            --blocks[v];
            for (auto p : ig.in(v)) --blocks[p];
        }
        for (auto c : ig.out(v)) --blocks[c];
        notify(on_return);
    };

    for (std::uint32_t start = 0; start < n && !exhausted; ++start) {
        blocks[start] = -3 * static_cast<std::int64_t>(n);
        enter(start);
        while (!exhausted && !frames.empty()) {
            Frame& f = frames.back();
            if (f.start_is_child) {
                // An arc back to the start closes the only chordless option.
                if (f.pos++ == 0) enter(path.front());
                else leave();
                continue;
            }
            const auto succ = ig.out(f.v);
            bool descended = false;
            while (f.pos < succ.size()) {
                const std::uint32_t c = succ[f.pos++];
                if (blocks[c] <= 1) {
                    enter(c);
                    descended = true;
                    break;
                }
            }
            if (!descended) leave();
        }
        blocks[start] = 1;
    }
    out.complete = !exhausted;
    if (probe != nullptr) probe->nodes_visited = nodes;
    return out;
}

EnumOutcome enumerate_chordless(const DirectedGraph& g, std::uint64_t budget) {
    if (has_self_loops(g)) throw std::invalid_argument("enumerate_chordless: graph has self-loops");
    EnumOutcome out;
    EnumStats& st = out.stats;
    std::set<Cycle> found;
    std::deque<DirectedGraph> work;
    work.push_back(g);

    while (!work.empty()) {
        DirectedGraph cur = std::move(work.front());
        work.pop_front();
        for (;;) {
            auto two = reduce_two_cycles(std::move(cur));
            st.two_cycles += two.cycles.size();
            found.insert(two.cycles.begin(), two.cycles.end());
            cur = std::move(two.reduced);

            auto comps = scc_decompose(cur);
            std::erase_if(comps, [](const VertexList& c) { return c.size() < 2; });
            if (comps.empty()) break;
            if (comps.size() > 1) {
                ++st.scc_splits;
                for (const auto& comp : comps) work.push_back(cur.induced(comp));
                break;
            }
            if (comps.front().size() != cur.vertex_count()) cur = cur.induced(comps.front());

            const VertexList verts = cur.vertices();
            if (std::all_of(verts.begin(), verts.end(), [&](Vertex v) {
                    return cur.in_degree(v) == 1 && cur.out_degree(v) == 1;
                })) {
                auto simple = take_simple_cycle_components(std::move(cur));
                st.simple_cycles += simple.cycles.size();
                found.insert(simple.cycles.begin(), simple.cycles.end());
                break;
            }

            std::size_t removed = 0;
            cur = contract_interior_paths(std::move(cur), &removed);
            if (removed > 0) {
                st.path_vertices_removed += removed;
                continue;
            }

            if (auto hub = enumerate_hub(cur, HubSide::In)) {
                st.hub_in_cycles += hub->cycles.size();
                found.insert(hub->cycles.begin(), hub->cycles.end());
                break;
            }
            if (auto hub = enumerate_hub(cur, HubSide::Out)) {
                st.hub_out_cycles += hub->cycles.size();
                found.insert(hub->cycles.begin(), hub->cycles.end());
                break;
            }

            if (auto parts = split_on_separator(cur, SeparatorMode::Vertex)) {
                ++st.vertex_splits;
                for (auto& p : *parts) work.push_back(std::move(p));
                break;
            }
            if (auto parts = split_on_separator(cur, SeparatorMode::Edge)) {
                ++st.edge_splits;
                for (auto& p : *parts) work.push_back(std::move(p));
                break;
            }

            CycleSet brute = brute_force_enum(cur, budget);
            if (!brute.complete) {
                // The graph stays behind as a constraint; a partial list
                // would only bloat the cover instance.
                ++st.brute_force_gave_up;
                out.residuals.push_back(std::move(cur));
                break;
            }
            st.brute_force_cycles += brute.cycles.size();
            found.insert(brute.cycles.begin(), brute.cycles.end());
            break;
        }
    }

    out.cycles.cycles = chord_filter(found, g);
    st.chorded_discarded = found.size() - out.cycles.cycles.size();
    out.cycles.complete = out.residuals.empty();
    return out;
}

bool is_chordless(const Cycle& c, const DirectedGraph& g) {
    const VertexList& seq = c.vertices();
    const std::size_t k = seq.size();
    std::unordered_map<Vertex, std::size_t> pos;
    pos.reserve(k);
    for (std::size_t i = 0; i < k; ++i) pos.emplace(seq[i], i);
    for (std::size_t i = 0; i < k; ++i) {
        for (Vertex w : g.out_neighbors(seq[i])) {
            auto it = pos.find(w);
            if (it != pos.end() && it->second != (i + 1) % k) return false;
        }
    }
    return true;
}

std::set<Cycle> chord_filter(const std::set<Cycle>& cycles, const DirectedGraph& g) {
    std::set<Cycle> out;
    for (const Cycle& c : cycles)
        if (is_chordless(c, g)) out.insert(out.end(), c);
    return out;
}

Cycle trim_to_chordless(const Cycle& c, const DirectedGraph& g) {
    const IndexedGraph ig(g);
    std::vector<std::uint32_t> idx;
    idx.reserve(c.size());
    for (Vertex v : c.vertices()) idx.push_back(ig.index.at(v));
    std::vector<std::int32_t> pos(ig.size(), -1);
    return to_cycle(ig, trim_indexed(ig, std::move(idx), pos));
}

std::set<Cycle> harvest_random_cycles(const DirectedGraph& g, std::size_t rounds,
                                      std::uint64_t seed) {
    const IndexedGraph ig(g);
    const std::uint32_t n = ig.size();
    std::set<Cycle> found;
    std::vector<std::int32_t> pos(n, -1);
    enum : char { kWhite, kGray, kBlack };

    for (std::size_t round = 0; round < rounds; ++round) {
        std::seed_seq sseq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                           static_cast<std::uint32_t>(round)};
        std::mt19937_64 rng(sseq);
        std::vector<std::vector<std::uint32_t>> adj(n);
        for (std::uint32_t v = 0; v < n; ++v) adj[v].assign(ig.out(v).begin(), ig.out(v).end());
        // Deleting arcs never creates cycles, so black vertices stay black.
        std::vector<char> color(n, kWhite);
        std::vector<std::uint32_t> order(n);
        struct Frame { std::uint32_t v; std::uint32_t offset; std::uint32_t seen; };
        std::vector<Frame> frames;

        for (;;) {
            for (auto& c : color)
                if (c == kGray) c = kWhite;
            for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
            for (std::uint32_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng() % i]);

            std::vector<std::uint32_t> cycle;
            for (std::uint32_t s : order) {
                if (color[s] != kWhite) continue;
                frames.clear();
                color[s] = kGray;
                frames.push_back({s, adj[s].empty() ? 0u : static_cast<std::uint32_t>(rng() % adj[s].size()), 0});
                while (!frames.empty() && cycle.empty()) {
                    Frame& f = frames.back();
                    const auto& succ = adj[f.v];
                    if (f.seen == succ.size()) {
                        color[f.v] = kBlack;
                        frames.pop_back();
                        continue;
                    }
                    const std::uint32_t w = succ[(f.offset + f.seen++) % succ.size()];
                    if (color[w] == kWhite) {
                        color[w] = kGray;
                        const auto off = adj[w].empty() ? 0u : static_cast<std::uint32_t>(rng() % adj[w].size());
                        frames.push_back({w, off, 0});
                    } else if (color[w] == kGray) {
                        auto it = std::find_if(frames.begin(), frames.end(),
                                               [&](const Frame& fr) { return fr.v == w; });
                        for (; it != frames.end(); ++it) cycle.push_back(it->v);
                    }
                }
                if (!cycle.empty()) break;
            }
            if (cycle.empty()) break;

            const auto trimmed = trim_indexed(ig, cycle, pos);
            found.insert(to_cycle(ig, trimmed));

            auto live_arcs = [&](const std::vector<std::uint32_t>& cyc) {
                std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;
                for (std::size_t i = 0; i < cyc.size(); ++i) {
                    const auto a = cyc[i], b = cyc[(i + 1) % cyc.size()];
                    if (std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end())
                        arcs.emplace_back(a, b);
                }
                return arcs;
            };
            auto candidates = live_arcs(trimmed);
            if (candidates.empty()) candidates = live_arcs(cycle);
            const auto [a, b] = candidates[rng() % candidates.size()];
            adj[a].erase(std::find(adj[a].begin(), adj[a].end(), b));
        }
    }
    return found;
}

std::string format_cycles(const std::set<Cycle>& cycles) {
    std::ostringstream out;
    for (const Cycle& c : cycles) {
        const auto& seq = c.vertices();
        for (std::size_t i = 0; i < seq.size(); ++i) out << (i ? " " : "") << seq[i];
        out << '\n';
    }
    return out.str();
}

}  // namespace dfvs
