#pragma once

#include <atomic>
#include <iosfwd>
#include <string>
#include <vector>

#include "dfvs/solver.hpp"

namespace dfvs {

/// Summary of one solve, printed as "key: value" lines.
struct RunReport {
    std::string instance;
    std::size_t n = 0;
    std::size_t m = 0;
    SolveStats stats;
    std::size_t solution_size = 0;
    std::size_t lower_bound = 0;
    bool optimal = true;
    double wall_seconds = 0.0;
};

std::string format_report(const RunReport& r);

/// Entry point behind the dfvs executable. args excludes the program name.
/// `stop` may be set asynchronously to end a solve early.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err, const std::atomic<bool>* stop = nullptr);

}  // namespace dfvs
