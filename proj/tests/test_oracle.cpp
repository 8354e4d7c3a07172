#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sunsys/oracle.hpp"
#include "sunsys/verify.hpp"

using namespace sunsys;

namespace {

void check_found(const SearchResult& res, int m, int hole, size_t blocks) {
  REQUIRE(res.status == SearchStatus::Found);
  CHECK(res.blocks.size() == blocks);
  Decomposition dec{m, hole, res.blocks};
  CHECK(verify_partition(dec).ok);
}

}  // namespace

TEST_CASE("complete graphs") {
  check_found(brute_force_decompose(9), 9, 0, 6);
  check_found(brute_force_decompose(12), 12, 0, 11);
  check_found(brute_force_decompose(13), 13, 0, 13);
}

TEST_CASE("infeasible instances") {
  // K_12 minus K_9 has 30 edges: divisible by 6 but no decomposition exists
  CHECK(brute_force_decompose(HoleGraph::complete_with_hole(3, 9)).status ==
        SearchStatus::Infeasible);
  CHECK(brute_force_decompose(4).status == SearchStatus::Infeasible);
  CHECK(brute_force_decompose(HoleGraph::complete_with_hole(4, 9)).status ==
        SearchStatus::Infeasible);
}

TEST_CASE("holes that do admit decompositions") {
  check_found(brute_force_decompose(HoleGraph::complete_with_hole(7, 9)), 16, 9, 14);
}

TEST_CASE("holes below the embedding bound are infeasible") {
  // an order-16 system embeds only into m >= 24, so K_21 \ K_16 fails
  CHECK(brute_force_decompose(HoleGraph::complete_with_hole(5, 16)).status ==
        SearchStatus::Infeasible);
}

TEST_CASE("frozen base systems match a fresh search") {
  for (int n : {9, 12, 13}) {
    auto fixture = base_system(n);
    auto fresh = brute_force_decompose(n);
    REQUIRE(fresh.status == SearchStatus::Found);
    CHECK(fixture.blocks == fresh.blocks);
    CHECK(verify_partition(fixture).ok);
  }
}

TEST_CASE("base_system rejects other orders") {
  CHECK_THROWS_AS(base_system(10), Error);
  CHECK_THROWS_AS(base_system(16), Error);
}
