#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "dfvs/cli.hpp"
#include "dfvs/oracle.hpp"
#include "dfvs/pace_io.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace dfvs;
using namespace dfvs::testing;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
    return std::string(DFVS_FIXTURES) + "/" + name;
}

std::string temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("dfvs_cli_" + name);
    std::ofstream(path) << text;
    return path.string();
}

const std::string c3 = "3 3 0\n2\n3\n1\n";

std::map<std::string, std::string> report(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto colon = line.find(':');
        if (colon != std::string::npos) kv[line.substr(0, colon)] = line.substr(colon + 2);
    }
    return kv;
}

}  // namespace

TEST_CASE("solve") {
    const Run r = run({"solve", "-"}, c3);
    CHECK(r.code == 0);
    CHECK(r.out.size() == 2);

    const Run dag = run({"solve", fixture("dag.gr")});
    CHECK(dag.code == 0);
    CHECK(dag.out.empty());

    const Run a = run({"solve", fixture("bidirected_k4.gr"), "--seed", "7"});
    const Run b = run({"solve", fixture("bidirected_k4.gr"), "--seed", "7"});
    CHECK(a.out == b.out);
    CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 3);
}

TEST_CASE("solve reports input errors") {
    CHECK(run({"solve", "-"}, "3 3\n2\n").code == 1);
    CHECK(run({"solve", "/nonexistent/file.gr"}).code == 1);
    CHECK(run({"frobnicate"}).code != 0);
}

TEST_CASE("verify") {
    const std::string inst = temp_file("c3.gr", c3);
    CHECK(run({"verify", inst, temp_file("one.sol", "1\n")}).code == 0);
    const Run empty = run({"verify", inst, temp_file("empty.sol", "")});
    CHECK(empty.code != 0);
    CHECK(empty.out == "cycle: 1 2 3\n");
    CHECK(run({"verify", inst, temp_file("bad.sol", "99\n")}).code == 1);
}

TEST_CASE("oracle") {
    CHECK(run({"oracle", "-"}, c3).out == "1\n");
    CHECK(run({"oracle", fixture("bidirected_c4.gr")}).out == "2\n");
    const std::string big = write_pace(directed_cycle(30));
    const Run r = run({"oracle", "-"}, big);
    CHECK(r.code == 1);
    CHECK(run({"oracle", "-", "--oracle-max-n", "30"}, big).out == "1\n");
}

TEST_CASE("stats accounting") {
    Rng rng(61);
    for (int i = 0; i < 20; ++i) {
        const DirectedGraph g = random_digraph(rng, 15, 0.15, 0.05);
        const Run r = run({"stats", "-"}, write_pace(g));
        REQUIRE(r.code == 0);
        auto kv = report(r.out);
        REQUIRE(kv.contains("graph_removed"));
        const auto n = std::stoul(kv["n"]);
        CHECK(n == g.vertex_count());
        CHECK(std::stoul(kv["graph_removed"]) + std::stoul(kv["graph_forced"]) +
                  std::stoul(kv["kernel_vertices"]) ==
              n);
        CHECK(std::stoul(kv["solution_size"]) == dfvs_reference(g));
    }
}

TEST_CASE("solve --stats writes the report to stderr") {
    const Run r = run({"solve", "-", "--stats"}, c3);
    CHECK(r.code == 0);
    CHECK(report(r.err).contains("wall_time"));
    CHECK(report(r.out).empty());
}

TEST_CASE("fixtures solve to verified optima") {
    for (const auto& entry : std::filesystem::directory_iterator(DFVS_FIXTURES)) {
        const std::string path = entry.path().string();
        CAPTURE(path);
        const Run s = run({"solve", path});
        REQUIRE(s.code == 0);
        const std::string sol = temp_file("fixture.sol", s.out);
        CHECK(run({"verify", path, sol}).out == "ok\n");
        const Run o = run({"oracle", path});
        CHECK(std::to_string(std::count(s.out.begin(), s.out.end(), '\n')) + "\n" == o.out);
    }
}
