#pragma once

#include <chrono>

#include "sunsys/verify.hpp"

namespace sunsys {

enum class SearchStatus { Found, Infeasible, Timeout };

struct SearchResult {
  SearchStatus status = SearchStatus::Infeasible;
  std::vector<IntSun> blocks;  // canonical blocks of the first cover found
  long long nodes = 0;         // branching nodes visited
};

// Exact-cover search (columns = edges of the target, rows = candidate
// 3-suns). Deterministic: rows in lexicographic order, branch on the
// column with fewest candidates (leftmost on ties). Infeasible means
// the search space was exhausted.
SearchResult brute_force_decompose(
    const HoleGraph& target,
    std::chrono::milliseconds time_limit = std::chrono::milliseconds(60000));

// Same, for the complete graph K_order.
SearchResult brute_force_decompose(
    int complete_order,
    std::chrono::milliseconds time_limit = std::chrono::milliseconds(60000));

// Frozen small systems (orders 9, 12 and 13), originally produced by
// brute_force_decompose; throws UnsupportedBase for any other order.
Decomposition base_system(int n);

}  // namespace sunsys
