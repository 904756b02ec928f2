#include <atomic>
#include <csignal>
#include <iostream>
#include <string>
#include <vector>

#include "dfvs/cli.hpp"

namespace {

std::atomic<bool> g_stop{false};

extern "C" void on_term(int) { g_stop.store(true); }

}  // namespace

int main(int argc, char** argv) {
    std::signal(SIGTERM, on_term);
    std::signal(SIGINT, on_term);
    std::ios::sync_with_stdio(false);
    std::vector<std::string> args(argv + 1, argv + argc);
    return dfvs::run_cli(args, std::cin, std::cout, std::cerr, &g_stop);
}
