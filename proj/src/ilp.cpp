#include "dfvs/ilp.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

namespace dfvs {

void add_constraint(IlpModel& m, VertexList members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty()) throw ModelError("empty constraint");
    for (Vertex v : members) {
        auto it = std::lower_bound(m.variables.begin(), m.variables.end(), v);
        if (it == m.variables.end() || *it != v) m.variables.insert(it, v);
    }
    m.constraints.push_back(std::move(members));
}

IlpModel build_model(const CoverProblem& p) {
    IlpModel m;
    for (const auto& [u, w] : p.edges()) m.constraints.push_back({u, w});
    for (const auto& s : p.big_sets()) {
        if (s.empty()) throw ModelError("empty constraint");
        m.constraints.push_back(s);
    }
    std::set<Vertex> vars;
    for (const auto& c : m.constraints) vars.insert(c.begin(), c.end());
    m.variables.assign(vars.begin(), vars.end());
    return m;
}

std::string export_lp(const IlpModel& m) {
    std::ostringstream out;
    out << "Minimize\n obj:";
    if (m.variables.empty()) out << " 0";
    for (std::size_t i = 0; i < m.variables.size(); ++i)
        out << (i == 0 ? " x" : " + x") << m.variables[i];
    out << "\nSubject To\n";
    for (std::size_t i = 0; i < m.constraints.size(); ++i) {
        out << " c" << i + 1 << ':';
        for (std::size_t j = 0; j < m.constraints[i].size(); ++j)
            out << (j == 0 ? " x" : " + x") << m.constraints[i][j];
        out << " >= 1\n";
    }
    out << "Binary\n";
    for (Vertex v : m.variables) out << " x" << v << '\n';
    out << "End\n";
    return out.str();
}

namespace {

std::vector<std::string> tokens(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

Vertex variable_id(const std::string& tok) {
    Vertex v = 0;
    if (tok.size() < 2 || tok[0] != 'x' ||
        std::from_chars(tok.data() + 1, tok.data() + tok.size(), v).ptr != tok.data() + tok.size())
        throw ModelError("bad variable name '" + tok + "'");
    return v;
}

}  // namespace

IlpModel parse_lp(std::string_view text) {
    enum class Section { None, Objective, Constraints, Binary, Done } section = Section::None;
    IlpModel m;
    std::set<Vertex> declared;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
        auto tok = tokens(line);
        if (tok.empty()) continue;
        if (tok[0] == "Minimize") { section = Section::Objective; continue; }
        if (tok[0] == "Subject" || tok[0] == "st") { section = Section::Constraints; continue; }
        if (tok[0] == "Binary" || tok[0] == "Binaries") { section = Section::Binary; continue; }
        if (tok[0] == "End") { section = Section::Done; continue; }
        switch (section) {
        case Section::Objective:
            break;  // always the plain sum of all variables
        case Section::Constraints: {
            if (tok.size() < 4 || tok[tok.size() - 2] != ">=" || tok.back() != "1")
                throw ModelError("unsupported constraint: " + line);
            VertexList members;
            for (std::size_t i = 1; i + 2 < tok.size(); ++i)
                if (tok[i] != "+") members.push_back(variable_id(tok[i]));
            add_constraint(m, std::move(members));
            break;
        }
        case Section::Binary:
            for (const auto& t : tok) declared.insert(variable_id(t));
            break;
        default:
            throw ModelError("content outside a section: " + line);
        }
    }
    if (section != Section::Done) throw ModelError("missing End");
    declared.insert(m.variables.begin(), m.variables.end());
    m.variables.assign(declared.begin(), declared.end());
    return m;
}

Deadline::Deadline(std::optional<double> seconds, const std::atomic<bool>* stop) : stop_(stop) {
    if (seconds)
        until_ = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(*seconds));
}

bool Deadline::expired() const {
    if (stop_ != nullptr && stop_->load(std::memory_order_relaxed)) return true;
    return until_ && std::chrono::steady_clock::now() >= *until_;
}

bool satisfies(const IlpModel& m, const VertexList& chosen) {
    return std::all_of(m.constraints.begin(), m.constraints.end(), [&](const VertexList& c) {
        return std::any_of(c.begin(), c.end(), [&](Vertex v) {
            return std::binary_search(chosen.begin(), chosen.end(), v);
        });
    });
}

namespace {

// Branch and bound over one connected block of constraints. Variables are
// local indices ordered by id, so "smallest index" means "smallest id".
class Search {
public:
    Search(std::vector<std::vector<int>> cons, int nv, const Deadline& deadline)
        : cons_(std::move(cons)), occ_(nv), val_(nv, -1), hits_(cons_.size(), 0),
          free_(cons_.size()), deadline_(deadline) {
        for (std::size_t c = 0; c < cons_.size(); ++c) {
            free_[c] = static_cast<int>(cons_[c].size());
            for (int v : cons_[c]) occ_[v].push_back(static_cast<int>(c));
        }
        greedy();
    }

    void run() {
        root_lb_ = 0;
        dfs(0, true);
        if (!aborted_) root_lb_ = best_.size();
    }

    const std::vector<int>& best() const { return best_; }
    bool aborted() const { return aborted_; }
    std::size_t lower_bound() const { return std::min(root_lb_, best_.size()); }
    std::uint64_t nodes() const { return nodes_; }

private:
    void assign(int v, int x) {
        val_[v] = static_cast<std::int8_t>(x);
        for (int c : occ_[v]) {
            --free_[c];
            if (x == 1) ++hits_[c];
        }
    }
    void unassign(int v) {
        for (int c : occ_[v]) {
            ++free_[c];
            if (val_[v] == 1) --hits_[c];
        }
        val_[v] = -1;
    }

    void greedy() {
        std::vector<char> hit(cons_.size(), 0);
        std::vector<int> freq(occ_.size());
        for (std::size_t v = 0; v < occ_.size(); ++v) freq[v] = static_cast<int>(occ_[v].size());
        std::vector<int> chosen;
        for (;;) {
            const auto it = std::max_element(freq.begin(), freq.end());
            if (it == freq.end() || *it == 0) break;
            const int v = static_cast<int>(it - freq.begin());
            chosen.push_back(v);
            for (int c : occ_[v]) {
                if (hit[c]) continue;
                hit[c] = 1;
                for (int w : cons_[c]) --freq[w];
            }
        }
        // Drop vertices made redundant by later picks.
        std::vector<int> cover(cons_.size(), 0);
        for (int v : chosen)
            for (int c : occ_[v]) ++cover[c];
        std::vector<int> kept;
        for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) {
            const bool needed =
                std::any_of(occ_[*it].begin(), occ_[*it].end(), [&](int c) { return cover[c] == 1; });
            if (needed) kept.push_back(*it);
            else
                for (int c : occ_[*it]) --cover[c];
        }
        std::sort(kept.begin(), kept.end());
        best_ = std::move(kept);
    }

    void dfs(std::size_t in_count, bool root) {
        if (aborted_) return;
        if ((++nodes_ & 1023) == 0 && deadline_.expired()) {
            aborted_ = true;
            return;
        }
        std::vector<int> trail;
        auto undo = [&] {
            for (auto it = trail.rbegin(); it != trail.rend(); ++it) unassign(*it);
        };

        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t c = 0; c < cons_.size(); ++c) {
                if (hits_[c] > 0) continue;
                if (free_[c] == 0) { undo(); return; }
                if (free_[c] > 1) continue;
                for (int v : cons_[c])
                    if (val_[v] == -1) {
                        assign(v, 1);
                        trail.push_back(v);
                        ++in_count;
                        break;
                    }
                changed = true;
            }
        }
        if (in_count >= best_.size()) { undo(); return; }

        std::vector<int> open;
        std::vector<int> freq(occ_.size(), 0);
        for (std::size_t c = 0; c < cons_.size(); ++c) {
            if (hits_[c] > 0) continue;
            open.push_back(static_cast<int>(c));
            for (int v : cons_[c])
                if (val_[v] == -1) ++freq[v];
        }
        if (open.empty()) {
            best_.clear();
            for (std::size_t v = 0; v < val_.size(); ++v)
                if (val_[v] == 1) best_.push_back(static_cast<int>(v));
            undo();
            return;
        }

        std::stable_sort(open.begin(), open.end(), [&](int a, int b) { return free_[a] < free_[b]; });
        std::vector<char> used(occ_.size(), 0);
        std::size_t packed = 0;
        for (int c : open) {
            const bool clash = std::any_of(cons_[c].begin(), cons_[c].end(),
                                           [&](int v) { return val_[v] == -1 && used[v]; });
            if (clash) continue;
            ++packed;
            for (int v : cons_[c])
                if (val_[v] == -1) used[v] = 1;
        }
        if (root) root_lb_ = in_count + packed;
        if (in_count + packed >= best_.size()) { undo(); return; }

        const int b = static_cast<int>(std::max_element(freq.begin(), freq.end()) - freq.begin());
        assign(b, 1);
        dfs(in_count + 1, false);
        unassign(b);
        assign(b, 0);
        dfs(in_count, false);
        unassign(b);
        undo();
    }

    std::vector<std::vector<int>> cons_;
    std::vector<std::vector<int>> occ_;
    std::vector<std::int8_t> val_;
    std::vector<int> hits_;
    std::vector<int> free_;
    const Deadline& deadline_;
    std::vector<int> best_;
    std::size_t root_lb_ = 0;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

CoverSolution solve_cover_exact(const IlpModel& m, const Deadline& deadline) {
    CoverSolution out;
    std::set<VertexList> unique(m.constraints.begin(), m.constraints.end());
    std::vector<VertexList> cons(unique.begin(), unique.end());
    for (const auto& c : cons)
        if (c.empty()) throw ModelError("empty constraint");

    std::set<Vertex> var_set;
    for (const auto& c : cons) var_set.insert(c.begin(), c.end());
    const VertexList vars(var_set.begin(), var_set.end());
    auto index_of = [&](Vertex v) {
        return static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
    };

    std::vector<std::size_t> parent(vars.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& c : cons)
        for (std::size_t i = 1; i < c.size(); ++i) {
            const std::size_t a = find_root(parent, index_of(c[0]));
            const std::size_t b = find_root(parent, index_of(c[i]));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }

    // Components in order of their smallest variable id.
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<std::size_t> block_of(vars.size(), SIZE_MAX);
    std::vector<std::size_t> root_block(vars.size(), SIZE_MAX);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const std::size_t r = find_root(parent, i);
        if (root_block[r] == SIZE_MAX) {
            root_block[r] = blocks.size();
            blocks.emplace_back();
        }
        block_of[i] = root_block[r];
        blocks[block_of[i]].push_back(i);
    }
    std::vector<std::vector<VertexList>> block_cons(blocks.size());
    for (const auto& c : cons) block_cons[block_of[index_of(c[0])]].push_back(c);

    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        const auto& members = blocks[bi];
        auto local = [&](Vertex v) {
            return static_cast<int>(std::lower_bound(members.begin(), members.end(), index_of(v)) -
                                    members.begin());
        };
        std::vector<std::vector<int>> local_cons;
        for (const auto& c : block_cons[bi]) {
            std::vector<int> lc;
            for (Vertex v : c) lc.push_back(local(v));
            local_cons.push_back(std::move(lc));
        }
        Search s(std::move(local_cons), static_cast<int>(members.size()), deadline);
        s.run();
        for (int v : s.best()) out.chosen.push_back(vars[members[v]]);
        out.lower_bound += s.lower_bound();
        out.nodes += s.nodes();
        if (s.aborted()) out.optimal = false;
    }
    std::sort(out.chosen.begin(), out.chosen.end());
    if (out.optimal) out.lower_bound = out.chosen.size();
    return out;
}

}  // namespace dfvs
