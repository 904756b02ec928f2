#include "dfvs/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace dfvs {
namespace {

// Peels vertices with no predecessor inside `alive` until nothing changes.
bool acyclic_within(const std::vector<std::uint32_t>& preds, std::uint32_t alive) {
    for (bool changed = true; changed && alive != 0;) {
        changed = false;
        for (std::uint32_t rest = alive; rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            if ((preds[v] & alive) == 0) {
                alive &= ~(std::uint32_t{1} << v);
                changed = true;
            }
        }
    }
    return alive == 0;
}

}  // namespace

std::optional<VertexList> oracle_dfvs(const DirectedGraph& g, std::size_t max_n) {
    const IndexedGraph ig(g);
    const std::uint32_t n = ig.size();
    if (n > max_n || n > 31) return std::nullopt;
    std::vector<std::uint32_t> preds(n, 0);
    for (std::uint32_t v = 0; v < n; ++v)
        for (std::uint32_t w : ig.out(v)) preds[w] |= std::uint32_t{1} << v;
    const std::uint32_t all = n == 0 ? 0 : (n == 32 ? ~0u : (std::uint32_t{1} << n) - 1);

    for (std::uint32_t k = 0; k <= n; ++k) {
        // Gosper's hack walks the k-subsets in increasing numeric order.
        std::uint64_t s = k == 0 ? 0 : (std::uint64_t{1} << k) - 1;
        while (s <= all) {
            if (acyclic_within(preds, all & ~static_cast<std::uint32_t>(s))) {
                VertexList out;
                for (std::uint32_t v = 0; v < n; ++v)
                    if (s >> v & 1) out.push_back(ig.ids[v]);
                std::sort(out.begin(), out.end());
                return out;
            }
            if (k == 0) break;
            const std::uint64_t c = s & (~s + 1);
            const std::uint64_t r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return VertexList{};
}

}  // namespace dfvs
