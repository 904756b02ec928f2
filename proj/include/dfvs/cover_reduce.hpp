#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "dfvs/cover_problem.hpp"

namespace dfvs {

struct CoverConfig {
    /// Also fold desks whose b/d side only satisfies the relaxed
    /// neighborhood-difference bounds. Off by default.
    bool generalized_desks = false;
};

/// How often each cover rule fired, indexed 1..9 (slot 0 unused).
struct CoverStats {
    std::array<std::size_t, 10> fired{};
};

// Each rule sweeps the problem once and reports whether anything changed.

/// Rule 1: a set containing another set is dropped.
bool rule_subsumption(CoverProblem& p);
/// Rules 2 and 3: degree-0 vertices leave their only big set; bare degree-1
/// vertices are dropped and their neighbor included.
bool rule_degree_low(CoverProblem& p);
/// Rule 2 alone: a graph-free, edge-free vertex in exactly one big set leaves it.
bool rule_single_big_set(CoverProblem& p);
/// Rule 3 alone: bare degree-1 vertices.
bool rule_degree_one(CoverProblem& p);
/// Rule 4: bare degree-2 vertices, simplicial or folded.
bool rule_fold_degree_two(CoverProblem& p);
/// Rule 5: bare simplicial vertices.
bool rule_simplicial(CoverProblem& p);
/// Rule 6: include v when it dominates a graph-free neighbor.
bool rule_domination(CoverProblem& p);
/// Rule 7: funnels v with out-vertex u, resolved as the alternative {u}/{v}.
bool rule_funnel(CoverProblem& p);
/// Rule 8: include unconfined vertices whose confinement witness is bare.
bool rule_unconfined(CoverProblem& p);
/// Rule 9: fold (generalized) desks.
bool rule_desk(CoverProblem& p, bool generalized);

struct DeskCandidate {
    Vertex a, b, c, d;
};

/// First desk found in vertex order; {a, c} is the side whose joint
/// neighborhood has at most four vertices.
std::optional<DeskCandidate> find_desk(const CoverProblem& p, bool generalized);
bool is_classic_desk(const CoverProblem& p, const DeskCandidate& k);
bool is_generalized_desk(const CoverProblem& p, const DeskCandidate& k);
/// Resolves the alternative {a, c} / {b, d}: common neighbors of the two
/// sides are included, the four vertices removed and the remaining
/// neighborhoods joined completely. Commits two cover units.
void fold_desk(CoverProblem& p, const DeskCandidate& k);

/// Outcome of the confinement procedure for one vertex.
enum class Confinement { Confined, Unconfined, Blocked };
Confinement check_confinement(const CoverProblem& p, Vertex v);

/// Rules 1..9 to fixpoint, restarting from rule 1 after any change.
CoverStats reduce_cover(CoverProblem& p, const CoverConfig& cfg = {});

/// Replays the trace newest-first over a cover of the reduced problem and
/// returns a cover of the original problem. Throws LiftError if the trace
/// and solution disagree.
VertexList lift_cover_solution(const VertexList& reduced_solution,
                               const std::vector<CoverEvent>& trace);

}  // namespace dfvs
