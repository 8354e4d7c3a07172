#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sunsys/planner.hpp"
#include "sunsys/verify.hpp"

using namespace sunsys;

TEST_CASE("verify_partition accepts a valid decomposition") {
  auto dec = decompose_hole(9, 7);
  auto rep = verify_partition(dec);
  CHECK(rep.ok);
  CHECK(rep.block_count == (long long)dec.blocks.size());
  CHECK(rep.expected_edge_count == 6 * rep.block_count);
  CHECK(rep.missing_edges.empty());
  CHECK(rep.duplicated_edges.empty());
  CHECK(rep.foreign_edges.empty());
}

TEST_CASE("verify_partition flags missing edges") {
  auto dec = decompose_hole(9, 7);
  dec.blocks.pop_back();
  auto rep = verify_partition(dec);
  CHECK_FALSE(rep.ok);
  CHECK(rep.missing_edges.size() == 6);
  CHECK(rep.duplicated_edges.empty());
}

TEST_CASE("verify_partition flags duplicated edges") {
  auto dec = decompose_hole(9, 7);
  dec.blocks.back() = dec.blocks.front();
  auto rep = verify_partition(dec);
  CHECK_FALSE(rep.ok);
  CHECK(rep.duplicated_edges.size() == 6);
  CHECK(rep.missing_edges.size() == 6);
}

TEST_CASE("verify_partition flags foreign edges") {
  auto dec = decompose_hole(9, 7);
  // rewrite one block to touch two hole vertices: its pendant edge lies
  // inside the hole, which the target graph does not contain
  auto& b = dec.blocks.back();
  b = {0, 1, 2, 3, 4, 5};
  int u = dec.u();
  b = {u, 1, 2, u + 1, 4, 5};
  auto rep = verify_partition(dec);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.foreign_edges.empty());
}

TEST_CASE("canonical_sun picks the least of the six symmetries") {
  IntSun s = {2, 0, 1, 5, 3, 4};
  IntSun c = canonical_sun(s);
  CHECK(c == IntSun{0, 1, 2, 3, 4, 5});
  // every rotation/reflection of the triangle (with pendants attached)
  // canonicalizes to the same tuple
  IntSun rots[] = {{0, 1, 2, 3, 4, 5}, {1, 2, 0, 4, 5, 3}, {2, 0, 1, 5, 3, 4},
                   {0, 2, 1, 3, 5, 4}, {2, 1, 0, 5, 4, 3}, {1, 0, 2, 4, 3, 5}};
  for (const auto& r : rots) CHECK(canonical_sun(r) == c);
}

TEST_CASE("sun/int round trip") {
  Sun s(Vertex::infinity(1), Vertex::cyclic(2, 8), Vertex::cyclic(0, 8),
        Vertex::cyclic(3, 8), Vertex::cyclic(4, 8), Vertex::infinity(2));
  IntSun i = to_int_sun(s, 8);
  CHECK(i == IntSun{8, 2, 0, 3, 4, 9});
  CHECK(from_int_sun(i, 8) == s);
}
