#include "dfvs/cover_reduce.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "dfvs/graph_reduce.hpp"

namespace dfvs {
namespace {

VertexList as_list(const std::set<Vertex>& s) { return {s.begin(), s.end()}; }

bool is_clique(const CoverProblem& p, const VertexList& members) {
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!p.adjacent(members[i], members[j])) return false;
    return true;
}

std::set<Vertex> union_of(const std::set<Vertex>& x, const std::set<Vertex>& y) {
    std::set<Vertex> out = x;
    out.insert(y.begin(), y.end());
    return out;
}

std::size_t difference_size(const std::set<Vertex>& x, const std::set<Vertex>& y) {
    std::size_t n = 0;
    for (Vertex v : x)
        if (!y.contains(v)) ++n;
    return n;
}

bool induces_four_cycle(const CoverProblem& p, const DeskCandidate& k) {
    return p.adjacent(k.a, k.b) && p.adjacent(k.b, k.c) && p.adjacent(k.c, k.d) &&
           p.adjacent(k.d, k.a) && !p.adjacent(k.a, k.c) && !p.adjacent(k.b, k.d);
}

bool desk_is_bare(const CoverProblem& p, const DeskCandidate& k) {
    for (Vertex x : {k.a, k.b, k.c, k.d}) {
        if (!p.bare(x)) return false;
        for (Vertex y : p.neighbors(x))
            if (!p.bare(y)) return false;
    }
    return true;
}

// Removes both sides of a resolved alternative. Common neighbors of the two
// sides lie in every normalized optimum and are included first; the rest of
// the neighborhoods are joined completely.
void fold_alternative(CoverProblem& p, const VertexList& side_a, const VertexList& side_b,
                      std::set<Vertex> a_nbrs, std::set<Vertex> b_nbrs) {
    VertexList common;
    std::set_intersection(a_nbrs.begin(), a_nbrs.end(), b_nbrs.begin(), b_nbrs.end(),
                          std::back_inserter(common));
    for (Vertex y : common) {
        p.include(y);
        a_nbrs.erase(y);
        b_nbrs.erase(y);
    }
    p.record(Alternative{side_a, side_b, as_list(a_nbrs), as_list(b_nbrs), side_a.size()});
    for (Vertex x : side_a) p.erase_vertex(x);
    for (Vertex x : side_b) p.erase_vertex(x);
    for (Vertex x : a_nbrs)
        for (Vertex y : b_nbrs) p.add_edge(x, y);
    p.add_offset(side_a.size());
}

}  // namespace

bool rule_subsumption(CoverProblem& p) {
    bool changed = false;
    for (std::size_t idx : p.big_set_indices()) {
        const VertexList& t = p.big_set(idx);
        bool holds_edge = false;
        for (Vertex u : t) {
            for (auto it = p.neighbors(u).upper_bound(u); it != p.neighbors(u).end(); ++it)
                if (std::binary_search(t.begin(), t.end(), *it)) { holds_edge = true; break; }
            if (holds_edge) break;
        }
        if (holds_edge) {
            p.remove_big_set(idx);
            changed = true;
        }
    }

    auto order = p.big_set_indices();
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return p.big_set(x).size() < p.big_set(y).size();
    });
    for (std::size_t si : order) {
        if (p.big_set(si).empty()) continue;
        const VertexList s = p.big_set(si);
        Vertex pivot = s.front();
        for (Vertex x : s)
            if (p.big_sets_of(x).size() < p.big_sets_of(pivot).size()) pivot = x;
        const std::vector<std::size_t> others(p.big_sets_of(pivot).begin(),
                                              p.big_sets_of(pivot).end());
        for (std::size_t ti : others) {
            if (ti == si) continue;
            const VertexList& t = p.big_set(ti);
            if (t.size() < s.size() || !std::includes(t.begin(), t.end(), s.begin(), s.end()))
                continue;
            p.remove_big_set(ti);
            changed = true;
        }
    }
    return changed;
}

bool rule_single_big_set(CoverProblem& p) {
    bool changed = false;
    for (Vertex v : p.vertices()) {
        if (!p.contains(v) || p.degree(v) != 0 || p.in_graph(v) || p.big_sets_of(v).size() != 1)
            continue;
        p.exclude(v);
        changed = true;
    }
    return changed;
}

bool rule_degree_one(CoverProblem& p) {
    bool changed = false;
    for (Vertex v : p.vertices()) {
        if (!p.contains(v) || !p.bare(v) || p.degree(v) != 1) continue;
        p.include(*p.neighbors(v).begin());
        p.exclude(v);
        changed = true;
    }
    return changed;
}

bool rule_degree_low(CoverProblem& p) {
    const bool a = rule_single_big_set(p);
    const bool b = rule_degree_one(p);
    return a || b;
}

bool rule_fold_degree_two(CoverProblem& p) {
    bool changed = false;
    for (Vertex v : p.vertices()) {
        if (!p.contains(v) || !p.bare(v) || p.degree(v) != 2) continue;
        const Vertex u = *p.neighbors(v).begin();
        const Vertex w = *std::next(p.neighbors(v).begin());
        if (p.adjacent(u, w)) {
            p.include(u);
            p.include(w);
            p.exclude(v);
            changed = true;
            continue;
        }
        if (!p.bare(u) || !p.bare(w)) continue;
        std::set<Vertex> merged = union_of(p.neighbors(u), p.neighbors(w));
        merged.erase(v);
        const Vertex z = p.fresh_vertex();
        p.erase_vertex(v);
        p.erase_vertex(u);
        p.erase_vertex(w);
        for (Vertex x : merged) p.add_edge(z, x);
        p.add_offset(1);
        p.record(Fold{z, u, w, v});
        changed = true;
    }
    return changed;
}

bool rule_simplicial(CoverProblem& p) {
    bool changed = false;
    for (Vertex v : p.vertices()) {
        if (!p.contains(v) || !p.bare(v)) continue;
        const VertexList nbrs = as_list(p.neighbors(v));
        if (!is_clique(p, nbrs)) continue;
        for (Vertex x : nbrs) p.include(x);
        p.exclude(v);
        changed = true;
    }
    return changed;
}

bool rule_domination(CoverProblem& p) {
    bool changed = false;
    for (Vertex u : p.vertices()) {
        if (!p.contains(u) || p.in_graph(u)) continue;
        for (Vertex v : as_list(p.neighbors(u))) {
            if (p.degree(v) + 1 < p.degree(u)) continue;
            const auto& nu = p.neighbors(u);
            const bool nbrs_ok = std::all_of(nu.begin(), nu.end(),
                                             [&](Vertex x) { return x == v || p.adjacent(v, x); });
            if (!nbrs_ok) continue;
            const auto& su = p.big_sets_of(u);
            const auto& sv = p.big_sets_of(v);
            if (!std::includes(sv.begin(), sv.end(), su.begin(), su.end())) continue;
            p.include(v);
            changed = true;
            break;
        }
    }
    return changed;
}

bool rule_funnel(CoverProblem& p) {
    bool changed = false;
    for (Vertex v : p.vertices()) {
        if (!p.contains(v) || !p.bare(v) || p.degree(v) < 2) continue;
        const VertexList nbrs = as_list(p.neighbors(v));
        // The out-vertex must touch every non-adjacent pair in N(v).
        std::set<Vertex> candidates(nbrs.begin(), nbrs.end());
        bool any_gap = false;
        for (std::size_t i = 0; i < nbrs.size() && !candidates.empty(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size() && !candidates.empty(); ++j) {
                if (p.adjacent(nbrs[i], nbrs[j])) continue;
                any_gap = true;
                std::erase_if(candidates,
                              [&](Vertex x) { return x != nbrs[i] && x != nbrs[j]; });
            }
        if (!any_gap) continue;  // simplicial
        for (Vertex u : candidates) {
            if (p.in_graph(u)) continue;
            std::set<Vertex> k_side;
            for (Vertex x : nbrs)
                if (x != u && !p.adjacent(u, x)) k_side.insert(x);
            if (!p.big_sets_of(u).empty() &&
                std::any_of(k_side.begin(), k_side.end(), [&](Vertex x) { return p.in_graph(x); }))
                continue;

            VertexList common;
            for (Vertex x : nbrs)
                if (x != u && p.adjacent(u, x)) common.push_back(x);
            for (Vertex y : common) p.include(y);

            std::set<Vertex> u_side = p.neighbors(u);
            u_side.erase(v);
            for (std::size_t ci : std::vector<std::size_t>(p.big_sets_of(u).begin(),
                                                           p.big_sets_of(u).end())) {
                const VertexList members = p.big_set(ci);
                p.remove_big_set(ci);
                for (Vertex w : k_side) {
                    VertexList replica;
                    for (Vertex x : members)
                        if (x != u) replica.push_back(x);
                    replica.push_back(w);
                    p.add_set(std::move(replica));
                }
            }
            p.record(Alternative{{v}, {u}, as_list(k_side), as_list(u_side), 1});
            p.erase_vertex(u);
            p.erase_vertex(v);
            for (Vertex x : k_side)
                for (Vertex y : u_side) p.add_edge(x, y);
            p.add_offset(1);
            changed = true;
            break;
        }
    }
    return changed;
}

Confinement check_confinement(const CoverProblem& p, Vertex v) {
    std::set<Vertex> s{v};
    std::set<Vertex> ns = p.neighbors(v);
    for (;;) {
        for (const auto* group : {&s, &ns})
            for (Vertex x : *group)
                if (!p.bare(x)) return Confinement::Blocked;

        std::optional<Vertex> best_ext;
        std::size_t best_size = 0;
        bool found = false;
        for (Vertex u : ns) {
            std::size_t in_s = 0;
            std::size_t outside = 0;
            Vertex last_outside = 0;
            for (Vertex x : p.neighbors(u)) {
                if (s.contains(x)) ++in_s;
                else if (!ns.contains(x)) { ++outside; last_outside = x; }
            }
            if (in_s != 1) continue;
            if (!found || outside < best_size) {
                found = true;
                best_size = outside;
                best_ext = outside == 1 ? std::optional<Vertex>(last_outside) : std::nullopt;
                if (outside == 0) break;
            }
        }
        if (!found) return Confinement::Confined;
        if (best_size == 0) return Confinement::Unconfined;
        if (best_size > 1) return Confinement::Confined;
        const Vertex w = *best_ext;
        s.insert(w);
        for (Vertex y : p.neighbors(w))
            if (!s.contains(y)) ns.insert(y);
    }
}

bool rule_unconfined(CoverProblem& p) {
    bool changed = false;
    for (Vertex v : p.vertices()) {
        if (!p.contains(v) || !p.bare(v) || p.degree(v) == 0) continue;
        if (check_confinement(p, v) != Confinement::Unconfined) continue;
        p.include(v);
        changed = true;
    }
    return changed;
}

bool is_classic_desk(const CoverProblem& p, const DeskCandidate& k) {
    if (!induces_four_cycle(p, k)) return false;
    for (Vertex x : {k.a, k.b, k.c, k.d})
        if (p.degree(x) < 3 || p.degree(x) > 4) return false;
    return union_of(p.neighbors(k.a), p.neighbors(k.c)).size() <= 4 &&
           union_of(p.neighbors(k.b), p.neighbors(k.d)).size() <= 4;
}

bool is_generalized_desk(const CoverProblem& p, const DeskCandidate& k) {
    if (!induces_four_cycle(p, k)) return false;
    for (Vertex x : {k.a, k.b, k.c, k.d})
        if (p.degree(x) < 3) return false;
    return union_of(p.neighbors(k.a), p.neighbors(k.c)).size() <= 4 &&
           difference_size(p.neighbors(k.b), p.neighbors(k.d)) <= 1 &&
           difference_size(p.neighbors(k.d), p.neighbors(k.b)) <= 1;
}

std::optional<DeskCandidate> find_desk(const CoverProblem& p, bool generalized) {
    for (Vertex a : p.vertices()) {
        if (!p.bare(a) || p.degree(a) < 3 || p.degree(a) > 4) continue;
        const VertexList na = as_list(p.neighbors(a));
        for (std::size_t i = 0; i < na.size(); ++i)
            for (std::size_t j = i + 1; j < na.size(); ++j) {
                const Vertex b = na[i], d = na[j];
                if (p.adjacent(b, d)) continue;
                for (Vertex c : p.neighbors(b)) {
                    if (c == a || !p.adjacent(c, d) || p.adjacent(a, c)) continue;
                    const DeskCandidate k{a, b, c, d};
                    const bool shape = generalized ? is_generalized_desk(p, k) : is_classic_desk(p, k);
                    if (shape && desk_is_bare(p, k)) return k;
                }
            }
    }
    return std::nullopt;
}

void fold_desk(CoverProblem& p, const DeskCandidate& k) {
    std::set<Vertex> a_nbrs = union_of(p.neighbors(k.a), p.neighbors(k.c));
    a_nbrs.erase(k.b);
    a_nbrs.erase(k.d);
    std::set<Vertex> b_nbrs = union_of(p.neighbors(k.b), p.neighbors(k.d));
    b_nbrs.erase(k.a);
    b_nbrs.erase(k.c);
    fold_alternative(p, {k.a, k.c}, {k.b, k.d}, std::move(a_nbrs), std::move(b_nbrs));
}

bool rule_desk(CoverProblem& p, bool generalized) {
    bool changed = false;
    while (auto k = find_desk(p, generalized)) {
        fold_desk(p, *k);
        changed = true;
    }
    return changed;
}

CoverStats reduce_cover(CoverProblem& p, const CoverConfig& cfg) {
    CoverStats st;
    for (;;) {
        if (rule_subsumption(p)) { ++st.fired[1]; continue; }
        if (rule_single_big_set(p)) { ++st.fired[2]; continue; }
        if (rule_degree_one(p)) { ++st.fired[3]; continue; }
        if (rule_fold_degree_two(p)) { ++st.fired[4]; continue; }
        if (rule_simplicial(p)) { ++st.fired[5]; continue; }
        if (rule_domination(p)) { ++st.fired[6]; continue; }
        if (rule_funnel(p)) { ++st.fired[7]; continue; }
        if (rule_unconfined(p)) { ++st.fired[8]; continue; }
        if (rule_desk(p, cfg.generalized_desks)) { ++st.fired[9]; continue; }
        return st;
    }
}

VertexList lift_cover_solution(const VertexList& reduced_solution,
                               const std::vector<CoverEvent>& trace) {
    std::set<Vertex> s(reduced_solution.begin(), reduced_solution.end());
    auto covered = [&](const VertexList& xs) {
        return std::all_of(xs.begin(), xs.end(), [&](Vertex x) { return s.contains(x); });
    };
    for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
        std::visit(
            [&](const auto& ev) {
                using T = std::decay_t<decltype(ev)>;
                if constexpr (std::is_same_v<T, Include>) {
                    s.insert(ev.v);
                } else if constexpr (std::is_same_v<T, Exclude>) {
                    if (s.contains(ev.v))
                        throw LiftError("excluded vertex " + std::to_string(ev.v) +
                                        " present in reduced solution");
                } else if constexpr (std::is_same_v<T, Fold>) {
                    if (s.erase(ev.merged) > 0) {
                        s.insert(ev.u);
                        s.insert(ev.w);
                    } else {
                        s.insert(ev.center);
                    }
                } else {
                    if (covered(ev.a_neighbors)) {
                        s.insert(ev.side_b.begin(), ev.side_b.end());
                    } else if (covered(ev.b_neighbors)) {
                        s.insert(ev.side_a.begin(), ev.side_a.end());
                    } else {
                        throw LiftError("alternative with neither side's neighborhood covered");
                    }
                }
            },
            *it);
    }
    return {s.begin(), s.end()};
}

}  // namespace dfvs
