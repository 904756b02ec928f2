#pragma once

#include <cstddef>
#include <optional>

#include "dfvs/graph.hpp"

namespace dfvs {

inline constexpr std::size_t kDefaultOracleMaxN = 20;

/// Minimum feedback vertex set by trying vertex subsets in increasing size.
/// Returns nullopt when g has more than max_n vertices.
std::optional<VertexList> oracle_dfvs(const DirectedGraph& g,
                                      std::size_t max_n = kDefaultOracleMaxN);

}  // namespace dfvs
