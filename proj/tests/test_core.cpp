#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sunsys/core.hpp"
#include "sunsys/verify.hpp"

using namespace sunsys;

TEST_CASE("canonical_difference") {
  CHECK(canonical_difference(0, 4, 8) == 4);
  CHECK(canonical_difference(1, 6, 7) == 2);
  CHECK(canonical_difference(6, 1, 7) == 2);
  // the wrap the appendix constructions rely on: |6s+4| mod (12s+7) = 6s+3
  CHECK(canonical_difference(0, 10, 19) == 9);
  CHECK_THROWS_AS((void)canonical_difference(3, 3, 9), Error);
}

TEST_CASE("reduce_difference") {
  CHECK(reduce_difference(10, 19) == 9);
  CHECK(reduce_difference(3, 19) == 3);
  CHECK(reduce_difference(6, 12) == 6);
}

TEST_CASE("vertex ordering and reduction") {
  CHECK(Vertex::cyclic(13, 9) == Vertex::cyclic(4, 9));
  CHECK(Vertex::cyclic(-1, 9) == Vertex::cyclic(8, 9));
  CHECK(Vertex::cyclic(8, 9) < Vertex::infinity(1));
  CHECK(Vertex::infinity(1) < Vertex::infinity(2));
  CHECK_THROWS_AS((void)Vertex::infinity(0), Error);
}

TEST_CASE("edge canonicalization") {
  Edge e1(Vertex::infinity(1), Vertex::cyclic(2, 8));
  Edge e2(Vertex::cyclic(2, 8), Vertex::infinity(1));
  CHECK(e1 == e2);
  CHECK(e1.a().is_cyclic());
  CHECK_THROWS_AS(Edge(Vertex::cyclic(3, 8), Vertex::cyclic(3, 8)), Error);
}

TEST_CASE("sun edges") {
  auto C = [](int i) { return Vertex::cyclic(i, 6); };
  Sun s(C(0), C(1), C(2), C(3), C(4), C(5));
  auto es = s.edges();
  std::set<Edge> got(es.begin(), es.end());
  std::set<Edge> want{Edge(C(0), C(1)), Edge(C(1), C(2)), Edge(C(0), C(2)),
                      Edge(C(0), C(3)), Edge(C(1), C(4)), Edge(C(2), C(5))};
  CHECK(got == want);

  auto C8 = [](int i) { return Vertex::cyclic(i, 8); };
  Sun b(Vertex::infinity(1), C8(2), C8(0), C8(3), C8(4), Vertex::infinity(2));
  std::set<Edge> got2;
  for (auto& e : b.edges()) got2.insert(e);
  std::set<Edge> want2{Edge(Vertex::infinity(1), C8(2)), Edge(C8(2), C8(0)),
                       Edge(Vertex::infinity(1), C8(0)), Edge(Vertex::infinity(1), C8(3)),
                       Edge(C8(2), C8(4)), Edge(C8(0), Vertex::infinity(2))};
  CHECK(got2 == want2);

  Sun degenerate(C(0), C(1), C(2), C(3), C(1), C(5));
  CHECK(degenerate.degenerate());
  CHECK_THROWS_AS((void)degenerate.edges(), Error);
}

TEST_CASE("translate") {
  const int u = 11;
  auto C = [&](int i) { return Vertex::cyclic(i, u); };
  Sun s(C(1), C(3), C(0), Vertex::infinity(1), C(8), C(4));
  Sun t = s.translated(1, u);
  CHECK(t == Sun(C(2), C(4), C(1), Vertex::infinity(1), C(9), C(5)));
  CHECK(s.translated(0, u) == s);
  CHECK(s.translated(u, u) == s);
}

TEST_CASE("orbit covers its difference classes") {
  const int u = 9;
  auto C = [&](int i) { return Vertex::cyclic(i, u); };
  Sun base(C(1), C(3), C(0), Vertex::infinity(1), Vertex::infinity(2), Vertex::infinity(3));
  auto suns = orbit(base, u);
  REQUIRE(suns.size() == 9);
  CHECK(verify_partition(suns, HoleGraph(u, 3, {1, 2, 3})).ok);
}

TEST_CASE("orbit of a leave generator covers D_13") {
  // s = 1, u = 13: base (5s+1, 5s, 0; 3s, s, u-2)
  const int u = 13;
  auto C = [&](int i) { return Vertex::cyclic(i, u); };
  Sun base(C(6), C(5), C(0), C(3), C(1), C(11));
  auto suns = orbit(base, u);
  REQUIRE(suns.size() == 13);
  CHECK(verify_partition(suns, HoleGraph(u, 0, {1, 2, 3, 4, 5, 6})).ok);
}

TEST_CASE("cycles_of_difference") {
  auto c93 = cycles_of_difference(9, 3);
  REQUIRE(c93.size() == 3);
  CHECK(c93[0] == std::vector<int>{0, 3, 6});
  CHECK(c93[1] == std::vector<int>{1, 4, 7});
  CHECK(c93[2] == std::vector<int>{2, 5, 8});

  auto c122 = cycles_of_difference(12, 2);
  REQUIRE(c122.size() == 2);
  CHECK(c122[0].size() == 6);
  std::set<std::pair<int, int>> edges;
  for (auto& cyc : c122)
    for (size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  CHECK(edges.size() == 12);

  CHECK(cycles_of_difference(7, 3).size() == 1);
  CHECK(cycles_of_difference(7, 3)[0].size() == 7);
  CHECK_THROWS_AS((void)cycles_of_difference(8, 4), Error);
}

TEST_CASE("hole graph edge counts") {
  CHECK(HoleGraph(8, 2, {2}).edge_count() == 24);
  CHECK(HoleGraph(8, 0, {4}).edge_count() == 4);  // 1-factor on the half difference
  HoleGraph g(9, 12, {1, 2, 3, 4});
  CHECK(g.edge_count() == 144);
  CHECK(g.edge_count() == 21 * 20 / 2 - 12 * 11 / 2);
  CHECK((long long)g.edges().size() == g.edge_count());
  CHECK_THROWS_AS(HoleGraph(8, 0, {5}), Error);
}

TEST_CASE("complete graph with hole") {
  HoleGraph g = HoleGraph::complete_with_hole(7, 9);
  CHECK(g.u() == 7);
  CHECK(g.t() == 9);
  CHECK(g.diffs() == std::vector<int>{1, 2, 3});
  CHECK(g.edge_count() == 16 * 15 / 2 - 9 * 8 / 2);
}
