#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dfvs/cover_problem.hpp"

namespace dfvs {

/// Minimize the number of chosen variables subject to every constraint
/// having at least one chosen member.
struct IlpModel {
    VertexList variables;                 // sorted
    std::vector<VertexList> constraints;  // each sorted, nonempty
};

class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Edges and big sets of p; attached graphs are ignored.
IlpModel build_model(const CoverProblem& p);

/// Appends a constraint, extending the variable list. Throws ModelError on
/// an empty set.
void add_constraint(IlpModel& m, VertexList members);

/// LP-file text with variables named x<id>.
std::string export_lp(const IlpModel& m);
/// Reads back the subset of the LP format written by export_lp.
IlpModel parse_lp(std::string_view text);

/// Wall-clock limit plus an optional external stop flag.
class Deadline {
public:
    Deadline() = default;
    Deadline(std::optional<double> seconds, const std::atomic<bool>* stop);
    bool expired() const;

private:
    std::optional<std::chrono::steady_clock::time_point> until_;
    const std::atomic<bool>* stop_ = nullptr;
};

struct CoverSolution {
    VertexList chosen;
    bool optimal = true;
    std::size_t lower_bound = 0;
    std::uint64_t nodes = 0;
};

/// Minimum hitting set by branch and bound. On expiry of the deadline the
/// greedy or best incumbent is returned with optimal = false.
CoverSolution solve_cover_exact(const IlpModel& m, const Deadline& deadline = {});

/// True iff every constraint has a member in `chosen` (sorted).
bool satisfies(const IlpModel& m, const VertexList& chosen);

}  // namespace dfvs
