#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "sunsys/lemmas.hpp"
#include "sunsys/verify.hpp"

using namespace sunsys;

namespace {

void check_output(const LemmaOutput& out, size_t blocks) {
  CHECK(out.blocks.size() == blocks);
  auto rep = verify_partition(out.blocks, out.graph);
  CHECK(rep.ok);
  CHECK(rep.expected_edge_count == 6 * (long long)blocks);
}

}  // namespace

TEST_CASE("two_inf_diff2") {
  check_output(two_inf_diff2(8), 4);
  check_output(two_inf_diff2(12), 6);
  CHECK_THROWS_AS(two_inf_diff2(6), Error);
}

TEST_CASE("four_inf_diff2_mod12") {
  check_output(four_inf_diff2_mod12(12), 10);
  check_output(four_inf_diff2_mod12(24), 20);
  CHECK_THROWS_AS(four_inf_diff2_mod12(16), Error);
}

TEST_CASE("four_inf_diff24") {
  auto o7 = four_inf_diff24(7);
  CHECK(o7.graph.diffs() == std::vector<int>{2, 3});  // 4 wraps to 3 mod 7
  check_output(o7, 7);
  check_output(four_inf_diff24(12), 12);
  check_output(four_inf_diff24(9), 9);
  check_output(four_inf_diff24(11), 11);
  CHECK_THROWS_AS(four_inf_diff24(8), Error);
  CHECK_THROWS_AS(four_inf_diff24(10), Error);  // u = 2 mod 4 has no closing family
}

TEST_CASE("eight_inf_diff_1_u3") {
  check_output(eight_inf_diff_1_u3(12), 20);
  check_output(eight_inf_diff_1_u3(15), 25);
  CHECK_THROWS_AS(eight_inf_diff_1_u3(9), Error);
}

TEST_CASE("half-difference families") {
  check_output(three_inf_1_half(8), 6);
  check_output(four_inf_1_half(12), 11);
  check_output(six_inf_1_half(8), 10);
  check_output(seven_inf_1_half(12), 17);
  check_output(three_inf_12_half(12), 11);
  CHECK_THROWS_AS(three_inf_12_half(10), Error);
}

TEST_CASE("one_inf_single_diff") {
  check_output(one_inf_single_diff(9, 2), 3);   // one 9-cycle, q = 3
  check_output(one_inf_single_diff(12, 2), 4);  // two linked 6-cycles, q = 2
  check_output(one_inf_single_diff(15, 2), 5);  // one 15-cycle, q = 5
  CHECK_THROWS_AS(one_inf_single_diff(9, 3), Error);  // d = u/3
}

TEST_CASE("one_inf_five_diffs") {
  auto o = one_inf_five_diffs(11, {1, 3, 2, 4, 5});
  // orbit of (1,3,0; inf,8,4)
  Sun base(Vertex::cyclic(1, 11), Vertex::cyclic(3, 11), Vertex::cyclic(0, 11),
           Vertex::infinity(1), Vertex::cyclic(8, 11), Vertex::cyclic(4, 11));
  CHECK(o.blocks.front() == base);
  check_output(o, 11);
  check_output(one_inf_five_diffs(13, {1, 3, 2, 4, 5}), 13);
  auto sum = one_inf_five_diffs(13, {2, 5, 6, 1, 3});  // 2+5+6 = 13: the -d1 variant
  Sun sum_base(Vertex::cyclic(11, 13), Vertex::cyclic(5, 13), Vertex::cyclic(0, 13),
               Vertex::infinity(1), Vertex::cyclic(8, 13), Vertex::cyclic(1, 13));
  CHECK(sum.blocks.front() == sum_base);
  check_output(sum, 13);
  // differences must lie in [1, u/2]: five distinct classes do not fit in D_9
  CHECK_THROWS_AS(one_inf_five_diffs(9, {1, 3, 5, 2, 4}), Error);
}

TEST_CASE("two_inf_four_diffs") {
  check_output(two_inf_four_diffs(9, {1, 3, 2, 4}), 9);
  check_output(two_inf_four_diffs(12, {1, 4, 3, 5}), 12);
  CHECK_THROWS_AS(two_inf_four_diffs(9, {1, 3, 4, 2}), Error);  // no triple condition
}

TEST_CASE("three_inf_three_diffs") {
  check_output(three_inf_three_diffs(9, {1, 3, 2}), 9);
  check_output(three_inf_three_diffs(11, {3, 4, 1}), 11);
  // u/2 among the differences makes the edge count 44, indivisible by 6
  CHECK_THROWS_AS(three_inf_three_diffs(8, {1, 3, 4}), Error);
}

TEST_CASE("five_inf_single_diff") {
  check_output(five_inf_single_diff(11, 1), 11);  // q = 3, r = 2
  check_output(five_inf_single_diff(9, 3), 9);    // three 3-cycles
  check_output(five_inf_single_diff(8, 2), 8);    // 4-cycles
  check_output(five_inf_single_diff(10, 4), 10);  // 5-cycles
  CHECK_THROWS_AS(five_inf_single_diff(8, 4), Error);  // d = u/2
}

TEST_CASE("leave_decomposition") {
  auto a0 = leave_decomposition(13, 1, 0, false);
  CHECK(a0.graph.diffs() == std::vector<int>{1, 2, 3, 4, 5, 6});
  check_output(a0, 13);

  auto a4 = leave_decomposition(17, 1, 4, false);
  CHECK(a4.graph.diffs() == std::vector<int>{3, 4, 5, 6, 7, 8});
  check_output(a4, 17);

  auto a8 = leave_decomposition(33, 2, 8, false);
  std::vector<int> want = {3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 16};
  CHECK(a8.graph.diffs() == want);
  check_output(a8, 66);

  auto skip = leave_decomposition(25, 2, 0, true);
  check_output(skip, 25);

  // the wrap case u = 12s+7 for alpha = 8
  check_output(leave_decomposition(31, 2, 8, false), 62);

  CHECK(leave_decomposition(13, 0, 0, false).blocks.empty());
  CHECK_THROWS_AS(leave_decomposition(19, 1, 8, false), Error);  // routed to the patch
  CHECK_THROWS_AS(leave_decomposition(13, 1, 4, false), Error);  // u <= 12s + alpha
}

TEST_CASE("leave_alpha8_s1") {
  check_output(leave_alpha8_s1(21), 21);
  check_output(leave_alpha8_s1(23), 23);
  // u = 19 (needed for the order-9 hole with u = 12s+7, s = 1): 10 wraps to 9
  auto o19 = leave_alpha8_s1(19);
  CHECK(o19.graph.diffs() == std::vector<int>{3, 5, 6, 7, 8, 9});
  check_output(o19, 19);
  CHECK_THROWS_AS(leave_alpha8_s1(20), Error);  // 10 = u/2
}

TEST_CASE("leave_diff_set matches outputs") {
  for (int s : {1, 2, 3}) {
    for (int alpha : {0, 4, 8}) {
      if (alpha == 8 && s == 1) continue;
      int u = 12 * s + alpha + 5;
      CHECK(leave_decomposition(u, s, alpha, false).graph.diffs() ==
            leave_diff_set(u, s, alpha, false));
    }
  }
}

TEST_CASE("order_for_triple_condition") {
  auto o = order_for_triple_condition(11, {4, 3, 1});
  REQUIRE(o.has_value());
  CHECK(*o == std::vector<int>{1, 4, 3});  // 3 = 4 - 1, lexicographically first
  auto sum = order_for_triple_condition(9, {5, 3, 1});
  REQUIRE(sum.has_value());
  CHECK(*sum == std::vector<int>{1, 3, 5});  // 1 + 3 + 5 = 9
  CHECK_FALSE(order_for_triple_condition(20, {1, 3, 7}).has_value());
}
