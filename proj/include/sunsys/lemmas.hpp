#pragma once

#include <optional>
#include <vector>

#include "sunsys/core.hpp"

namespace sunsys {

// Result of one constructive lemma: a block list that exactly partitions
// the edges of its target graph (checked by verify_partition).
struct LemmaOutput {
  HoleGraph graph;
  std::vector<Sun> blocks;
};

// <Z_u u {inf1,inf2}, {2}>, u = 0 mod 4, u >= 8.
LemmaOutput two_inf_diff2(int u);

// <Z_u u {inf1..inf4}, {2}>, u = 0 mod 12.
LemmaOutput four_inf_diff2_mod12(int u);

// <Z_u u {inf1..inf4}, {2,4}>, u >= 7, u = 0,1,3 mod 4, u != 8.
// For u = 7 the difference 4 wraps to 3 and the target is {2,3}.
LemmaOutput four_inf_diff24(int u);

// <Z_u u {inf1..inf8}, {1, u/3}>, u = 0 mod 3, u >= 12.
LemmaOutput eight_inf_diff_1_u3(int u);

// <Z_u u {inf1..inf3}, {1, u/2}>, u = 0 mod 4, u >= 8.
LemmaOutput three_inf_1_half(int u);

// <Z_u u {inf1..inf4}, {1, u/2}>, u = 0 mod 12.
LemmaOutput four_inf_1_half(int u);

// <Z_u u {inf1..inf6}, {1, u/2}>, u = 0 mod 4, u >= 8.
LemmaOutput six_inf_1_half(int u);

// <Z_u u {inf1..inf7}, {1, u/2}>, u = 0 mod 12.
LemmaOutput seven_inf_1_half(int u);

// <Z_u u {inf1..inf3}, {1, 2, u/2}>, u = 0 mod 12.
LemmaOutput three_inf_12_half(int u);

// <Z_u u {inf}, {d}>, u = 0 mod 3, d not in {u/2, u/3},
// u/gcd(u,d) = 0 mod 3.
LemmaOutput one_inf_single_diff(int u, int d);

// <Z_u u {inf}, {d1..d5}>, all distinct, != u/2, and
// d3 = d2 - d1 or d1 + d2 + d3 = u.
LemmaOutput one_inf_five_diffs(int u, const std::array<int, 5>& d);

// <Z_u u {inf1,inf2}, {d1..d4}>, same triple condition.
LemmaOutput two_inf_four_diffs(int u, const std::array<int, 4>& d);

// <Z_u u {inf1..inf3}, {d1,d2,d3}>, same triple condition.
LemmaOutput three_inf_three_diffs(int u, const std::array<int, 3>& d);

// <Z_u u {inf1..inf5}, {d}>, d != u/2.
LemmaOutput five_inf_single_diff(int u, int d);

// Difference-leave decomposition of <Z_u, L> where
//   alpha = 0: L = [1, 6s]
//   alpha = 4: L = [3, 6s+2]
//   alpha = 8: L = [3, 6s+4] \ {4, 6s+3}   (s != 1 here)
// skip_first (alpha = 0 only) omits the first orbit, leaving
// [3, 6s] \ {2s+1, 4s, 5s, 5s+1}. Differences are reduced mod u, so
// u = 12s+7 is accepted for alpha = 8. s = 0 yields an empty output.
LemmaOutput leave_decomposition(int u, int s, int alpha, bool skip_first);

// Patch for the degenerate alpha = 8, s = 1 leave: a single orbit
// covering L = {3,5,6,7,8,10} (values reduced mod u; u >= 19, u != 20).
LemmaOutput leave_alpha8_s1(int u);

// The reduced difference set a leave task will cover.
std::vector<int> leave_diff_set(int u, int s, int alpha, bool skip_first);

// Lexicographically first ordering of the given reduced differences whose
// first three entries satisfy d3 = d2 - d1 or d1 + d2 + d3 = u.
std::optional<std::vector<int>> order_for_triple_condition(int u, std::vector<int> diffs);

}  // namespace sunsys
