#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dfvs/graph.hpp"

namespace dfvs {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct PaceInstance {
    DirectedGraph graph;
    std::size_t declared_vertices = 0;
    std::size_t declared_arcs = 0;
    /// Arcs listed more than once; each repeat is dropped.
    std::size_t duplicate_arcs = 0;
};

/// Reads a PACE 2022 instance: header "n m 0", then one out-neighbor line
/// per vertex. Lines starting with '%' are comments anywhere in the file.
PaceInstance parse_pace(std::istream& in);
PaceInstance parse_pace(std::string_view text);

/// Serializes g in PACE format with n = max vertex id; ids missing from g
/// get empty neighbor lines.
std::string write_pace(const DirectedGraph& g);

/// One vertex id per line in ascending order.
std::string write_solution(VertexList solution);

/// Reads a solution file: one id per line, '%' comments and blank lines
/// ignored.
VertexList parse_solution(std::istream& in);

}  // namespace dfvs
