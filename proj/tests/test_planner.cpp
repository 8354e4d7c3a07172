#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "sunsys/oracle.hpp"
#include "sunsys/planner.hpp"

using namespace sunsys;

TEST_CASE("is_admissible_order") {
  CHECK(is_admissible_order(9).admissible);
  CHECK(is_admissible_order(12).admissible);
  CHECK(is_admissible_order(13).admissible);
  CHECK_FALSE(is_admissible_order(10).admissible);
  CHECK_FALSE(is_admissible_order(14).admissible);

  auto a4 = is_admissible_order(4);
  CHECK(a4.admissible);
  CHECK(a4.nonexistent);

  auto a0 = is_admissible_order(0);
  CHECK(a0.admissible);
  CHECK(a0.trivial);
  CHECK(is_admissible_order(1).trivial);
  CHECK_FALSE(is_admissible_order(9).trivial);
  CHECK_FALSE(is_admissible_order(9).nonexistent);
}

TEST_CASE("hole_residues") {
  CHECK(hole_residues(12) == std::array<int, 4>{0, 1, 4, 9});
  CHECK(hole_residues(13) == std::array<int, 4>{0, 3, 8, 11});
  CHECK(hole_residues(9) == std::array<int, 4>{0, 3, 4, 7});
}

TEST_CASE("min_embedding_order") {
  CHECK(min_embedding_order(9) == 14);
  CHECK(min_embedding_order(12) == 18);
  CHECK(min_embedding_order(13) == 20);
  CHECK(min_embedding_order(25) == 36);
  // the bound is the least integer >= 7n/5 + 1 (it need not be admissible
  // itself: embedding additionally requires m admissible)
  for (long long n = 9; n <= 1000; ++n) {
    if (!is_admissible_order(n).admissible || is_admissible_order(n).nonexistent)
      continue;
    long long m = min_embedding_order(n);
    CHECK(m == (7 * n + 4) / 5 + 1);  // ceil(7n/5) + 1
  }
}

TEST_CASE("counting_feasible") {
  auto a = counting_feasible(12, 4);
  CHECK(a.lhs == -18);
  CHECK_FALSE(a.feasible);
  auto b = counting_feasible(9, 7);
  CHECK(b.lhs == 42);
  CHECK(b.feasible);
  auto c = counting_feasible(10, 5);
  CHECK(c.lhs == 0);
  CHECK(c.feasible);
}

TEST_CASE("build_plan dispatch") {
  auto star = build_plan(9, 7);
  CHECK(star.case_label == "star/n9");
  CHECK(star.params.u_min == 5);  // generic 24k + 2r + 3 for c = 4

  auto p = build_plan(25, 11);
  CHECK(p.params.k == 0);
  CHECK(p.params.r == 5);
  CHECK(p.params.c == 0);
  CHECK(p.params.u_min == 11);
  // every planned difference lands in the task list exactly once
  size_t ndiffs = 0;
  for (const auto& t : p.tasks) ndiffs += t.diffs.size();
  CHECK(ndiffs > 0);

  CHECK_THROWS_AS(build_plan(9, 5), Error);   // below u_min
  CHECK_THROWS_AS(build_plan(9, 6), Error);   // wrong residue
  CHECK_THROWS_AS(build_plan(10, 7), Error);  // n not admissible
}

TEST_CASE("decompose_hole block counts") {
  auto d1 = decompose_hole(9, 7);
  CHECK(d1.m == 16);
  CHECK(d1.hole_size == 9);
  CHECK(d1.blocks.size() == 14);
  CHECK(verify_partition(d1).ok);

  auto d2 = decompose_hole(12, 9);
  CHECK(d2.blocks.size() == 24);
  CHECK(verify_partition(d2).ok);

  auto d3 = decompose_hole(13, 15);
  // u(u + 2n - 1)/12 = 15 * 40 / 12 = 50
  CHECK(d3.blocks.size() == 50);
  CHECK(verify_partition(d3).ok);
}

TEST_CASE("embed") {
  auto base = base_system(9);
  auto e = embed(base, 16);
  CHECK(e.m == 16);
  CHECK(e.hole_size == 0);
  CHECK(e.blocks.size() == 20);
  CHECK(verify_partition(e).ok);
  // the base system reappears verbatim on the top 9 ids
  int shift = 0;
  std::vector<IntSun> top;
  for (const auto& b : e.blocks)
    if (std::all_of(b.begin(), b.end(), [](int v) { return v >= 7; })) {
      top.push_back(b);
      for (int& v : top.back()) v -= 7;
    }
  std::sort(top.begin(), top.end());
  auto want = base.blocks;
  std::sort(want.begin(), want.end());
  CHECK(top == want);
  (void)shift;

  CHECK(embed(base, 9).blocks == base.blocks);  // m = n: identity
  CHECK_THROWS_AS(embed(base, 12), Error);      // 12 < 14
  CHECK_THROWS_AS(embed(base, 13), Error);
  CHECK_THROWS_AS(embed(base, 8), Error);  // m < n
}

TEST_CASE("construct_3ss") {
  for (int m : {0, 1}) CHECK(construct_3ss(m).blocks.empty());
  CHECK_THROWS_AS(construct_3ss(4), Error);
  CHECK_THROWS_AS(construct_3ss(10), Error);
  for (int m : {9, 12, 13, 16, 21, 24, 25, 28, 33, 36, 37, 40}) {
    auto d = construct_3ss(m);
    CHECK((long long)d.blocks.size() == (long long)m * (m - 1) / 12);
    CHECK(verify_partition(d).ok);
  }
}
