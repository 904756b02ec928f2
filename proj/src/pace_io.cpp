#include "dfvs/pace_io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>
#include <vector>

namespace dfvs {
namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

bool parse_uint(std::string_view token, std::uint64_t& out) {
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

bool is_comment(std::string_view line) { return !line.empty() && line.front() == '%'; }

}  // namespace

PaceInstance parse_pace(std::istream& in) {
    PaceInstance inst;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::uint64_t n = 0, m = 0;
    std::uint64_t next_vertex = 1;
    std::uint64_t listed = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment(line)) continue;
        const auto tokens = split_tokens(line);
        if (!have_header) {
            if (tokens.empty()) continue;
            std::uint64_t t = 0;
            if (tokens.size() != 3 || !parse_uint(tokens[0], n) || !parse_uint(tokens[1], m) ||
                !parse_uint(tokens[2], t) || t != 0)
                throw ParseError(line_no, "malformed header, expected \"n m 0\"");
            if (n > 0xFFFFFFFEull) throw ParseError(line_no, "vertex count too large");
            have_header = true;
            for (std::uint64_t v = 1; v <= n; ++v) inst.graph.add_vertex(static_cast<Vertex>(v));
            continue;
        }
        if (next_vertex > n) {
            if (tokens.empty()) continue;
            throw ParseError(line_no, "unexpected content after " + std::to_string(n) +
                                          " neighbor lines");
        }
        const auto u = static_cast<Vertex>(next_vertex++);
        for (auto tok : tokens) {
            std::uint64_t w = 0;
            if (!parse_uint(tok, w)) throw ParseError(line_no, "bad vertex id '" + std::string(tok) + "'");
            if (w < 1 || w > n)
                throw ParseError(line_no, "neighbor " + std::to_string(w) + " outside 1.." +
                                              std::to_string(n));
            ++listed;
            if (!inst.graph.add_arc(u, static_cast<Vertex>(w))) ++inst.duplicate_arcs;
        }
    }
    if (!have_header) throw ParseError(line_no, "missing header");
    // Trailing vertices may be omitted when their neighbor lines are empty.
    if (listed != m)
        throw ParseError(line_no, "header declares " + std::to_string(m) + " arcs but " +
                                      std::to_string(listed) + " were listed");
    inst.declared_vertices = n;
    inst.declared_arcs = m;
    return inst;
}

PaceInstance parse_pace(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_pace(in);
}

std::string write_pace(const DirectedGraph& g) {
    const Vertex n = g.max_vertex();
    std::ostringstream out;
    out << n << ' ' << g.arc_count() << " 0\n";
    for (Vertex v = 1; v <= n; ++v) {
        bool first = true;
        for (Vertex w : g.out_neighbors(v)) {
            if (!first) out << ' ';
            out << w;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

std::string write_solution(VertexList solution) {
    std::sort(solution.begin(), solution.end());
    solution.erase(std::unique(solution.begin(), solution.end()), solution.end());
    std::string out;
    for (Vertex v : solution) {
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

VertexList parse_solution(std::istream& in) {
    VertexList out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment(line)) continue;
        for (auto tok : split_tokens(line)) {
            std::uint64_t v = 0;
            if (!parse_uint(tok, v) || v == 0 || v > 0xFFFFFFFFull)
                throw ParseError(line_no, "bad vertex id '" + std::string(tok) + "'");
            out.push_back(static_cast<Vertex>(v));
        }
    }
    return out;
}

}  // namespace dfvs
