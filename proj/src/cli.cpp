#include "dfvs/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>

#include "dfvs/graph_algorithms.hpp"
#include "dfvs/graph_reduce.hpp"
#include "dfvs/oracle.hpp"
#include "dfvs/pace_io.hpp"

namespace dfvs {
namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kNotOptimal = 2;  // solve: timed out; verify: cycle left

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Opens `path`, or hands back stdin for "-".
std::istream& open_input(const std::string& path, std::istream& in, std::ifstream& file) {
    if (path == "-") return in;
    file.open(path);
    if (!file) throw InputError("cannot open " + path);
    return file;
}

PaceInstance read_instance(const std::string& path, std::istream& in) {
    std::ifstream file;
    std::istream& src = open_input(path, in, file);
    try {
        return parse_pace(src);
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw InputError("cannot write " + path);
    f << text;
}

struct SolveOptions {
    std::string input;
    bool stats = false;
    std::uint64_t seed = 0;
    double time_limit = 0.0;
    std::size_t harvest = 50;
    std::uint64_t enum_budget = kDefaultEnumBudget;
    bool generalized_desks = false;
    std::string export_lp;
    std::string dump_cycles;
    std::string dump_cover;
};

SolverConfig config_from(const SolveOptions& o, const std::atomic<bool>* stop) {
    SolverConfig cfg;
    cfg.harvest_rounds = o.harvest;
    cfg.enum_budget = o.enum_budget;
    cfg.generalized_desks = o.generalized_desks;
    cfg.seed = o.seed;
    if (o.time_limit > 0) cfg.time_limit = o.time_limit;
    cfg.stop = stop;
    return cfg;
}

// Debug dumps rerun the front half of the pipeline.
void write_dumps(const DirectedGraph& g, const SolveOptions& o) {
    if (o.dump_cycles.empty() && o.dump_cover.empty()) return;
    GraphKernel kernel = kernelize_graph(g);
    std::set<Cycle> cycles;
    CoverProblem p(g.empty() ? 1 : g.max_vertex() + 1);
    for (const auto& sub : kernel.subgraphs) {
        EnumOutcome e = enumerate_chordless(sub, o.enum_budget);
        cycles.insert(e.cycles.cycles.begin(), e.cycles.cycles.end());
        for (const Cycle& c : e.cycles.cycles) p.add_set(c.sorted_vertices());
        for (auto& r : e.residuals) p.add_graph(std::move(r));
    }
    if (!o.dump_cycles.empty()) write_file(o.dump_cycles, format_cycles(cycles));
    if (!o.dump_cover.empty()) {
        reduce_cover(p, CoverConfig{o.generalized_desks});
        write_file(o.dump_cover, p.dump());
    }
}

RunReport solve_instance(const SolveOptions& o, std::istream& in, const std::atomic<bool>* stop,
                         Solution& sol) {
    const auto start = std::chrono::steady_clock::now();
    PaceInstance inst = read_instance(o.input, in);
    sol = solve_dfvs(inst.graph, config_from(o, stop));
    write_dumps(inst.graph, o);
    if (!o.export_lp.empty()) write_file(o.export_lp, export_lp(sol.model));

    RunReport r;
    r.instance = o.input;
    r.n = inst.declared_vertices;
    r.m = inst.declared_arcs;
    r.stats = sol.stats;
    r.solution_size = sol.vertices.size();
    r.lower_bound = sol.lower_bound;
    r.optimal = sol.optimal;
    r.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

void add_solve_flags(CLI::App* cmd, SolveOptions& o) {
    cmd->add_option("input", o.input, "PACE instance, - for stdin")->required();
    cmd->add_option("--seed", o.seed, "seed for random cycle harvesting");
    cmd->add_option("--time-limit", o.time_limit, "seconds; 0 means none")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--harvest", o.harvest, "random harvesting rounds per graph");
    cmd->add_option("--enum-budget", o.enum_budget, "brute-force search node budget");
    cmd->add_flag("--generalized-desks", o.generalized_desks, "fold generalized desks too");
    cmd->add_option("--export-lp", o.export_lp, "write the final cover model as an LP file");
    cmd->add_option("--dump-cycles", o.dump_cycles, "write enumerated chordless cycles");
    cmd->add_option("--dump-cover", o.dump_cover, "write the reduced cover instance");
}

}  // namespace

std::string format_report(const RunReport& r) {
    std::ostringstream out;
    const auto& s = r.stats;
    const auto& e = s.enumeration;
    out << "instance: " << r.instance << '\n'
        << "n: " << r.n << '\n'
        << "m: " << r.m << '\n'
        << "graph_forced: " << s.graph_forced << '\n'
        << "graph_removed: " << s.graph_removed << '\n'
        << "kernel_vertices: " << s.kernel_vertices << '\n'
        << "subgraphs: " << s.subgraphs << '\n'
        << "cycles_two: " << e.two_cycles << '\n'
        << "scc_splits: " << e.scc_splits << '\n'
        << "cycles_simple: " << e.simple_cycles << '\n'
        << "path_vertices_removed: " << e.path_vertices_removed << '\n'
        << "cycles_hub_in: " << e.hub_in_cycles << '\n'
        << "cycles_hub_out: " << e.hub_out_cycles << '\n'
        << "vertex_splits: " << e.vertex_splits << '\n'
        << "edge_splits: " << e.edge_splits << '\n'
        << "cycles_brute_force: " << e.brute_force_cycles << '\n'
        << "brute_force_gave_up: " << e.brute_force_gave_up << '\n'
        << "chorded_discarded: " << e.chorded_discarded << '\n'
        << "chordless_cycles: " << s.chordless_cycles << '\n'
        << "enumeration_complete: " << (s.enumeration_complete ? "yes" : "no") << '\n';
    for (std::size_t i = 1; i < s.cover.fired.size(); ++i)
        out << "cover_rule" << i << ": " << s.cover.fired[i] << '\n';
    out << "cover_forced: " << s.cover_forced << '\n'
        << "cover_offset: " << s.cover_offset << '\n'
        << "residual_vertices: " << s.residual_vertices << '\n'
        << "residual_graphs: " << s.residual_graphs << '\n'
        << "constraints: " << s.constraints << '\n'
        << "lazy_iterations: " << s.lazy_iterations << '\n'
        << "bb_nodes: " << s.bb_nodes << '\n'
        << "solution_size: " << r.solution_size << '\n'
        << "lower_bound: " << r.lower_bound << '\n'
        << "optimal: " << (r.optimal ? "yes" : "no") << '\n'
        << "wall_time: " << r.wall_seconds << '\n';
    return out.str();
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err, const std::atomic<bool>* stop) {
    CLI::App app{"Exact minimum directed feedback vertex set"};
    app.require_subcommand(1);

    SolveOptions solve_opts;
    auto* solve = app.add_subcommand("solve", "print a minimum feedback vertex set");
    add_solve_flags(solve, solve_opts);
    solve->add_flag("--stats", solve_opts.stats, "report to stderr");

    SolveOptions stats_opts;
    auto* stats = app.add_subcommand("stats", "solve and print only the report");
    add_solve_flags(stats, stats_opts);

    std::string verify_instance, verify_solution;
    auto* verify = app.add_subcommand("verify", "check that a solution leaves the graph acyclic");
    verify->add_option("instance", verify_instance)->required();
    verify->add_option("solution", verify_solution)->required();

    std::string oracle_input;
    std::size_t oracle_max_n = kDefaultOracleMaxN;
    auto* oracle = app.add_subcommand("oracle", "optimum size by subset enumeration");
    oracle->add_option("input", oracle_input)->required();
    oracle->add_option("--oracle-max-n", oracle_max_n, "refuse larger instances");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (solve->parsed()) {
            Solution sol;
            const RunReport r = solve_instance(solve_opts, in, stop, sol);
            out << write_solution(sol.vertices);
            out.flush();
            if (solve_opts.stats) err << format_report(r);
            return sol.optimal ? kOk : kNotOptimal;
        }
        if (stats->parsed()) {
            Solution sol;
            const RunReport r = solve_instance(stats_opts, in, stop, sol);
            out << format_report(r);
            return sol.optimal ? kOk : kNotOptimal;
        }
        if (verify->parsed()) {
            PaceInstance inst = read_instance(verify_instance, in);
            std::ifstream file;
            std::istream& src = open_input(verify_solution, in, file);
            VertexList sol;
            try {
                sol = parse_solution(src);
            } catch (const ParseError& e) {
                throw InputError(verify_solution + ": " + e.what());
            }
            for (Vertex v : sol)
                if (!inst.graph.has_vertex(v))
                    throw InputError("solution names unknown vertex " + std::to_string(v));
            auto cycle = find_cycle(inst.graph.without(sol));
            if (!cycle) {
                out << "ok\n";
                return kOk;
            }
            const Cycle witness(*cycle);
            out << "cycle:";
            for (Vertex v : witness.vertices()) out << ' ' << v;
            out << '\n';
            return kNotOptimal;
        }
        PaceInstance inst = read_instance(oracle_input, in);
        auto best = oracle_dfvs(inst.graph, oracle_max_n);
        if (!best) {
            err << "instance has " << inst.graph.vertex_count() << " vertices, more than "
                << oracle_max_n << '\n';
            return kInputError;
        }
        out << best->size() << '\n';
        return kOk;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

}  // namespace dfvs
