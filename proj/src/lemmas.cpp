#include "sunsys/lemmas.hpp"

#include <algorithm>
#include <set>

namespace sunsys {

namespace {

// Base-block builder over Z_u; all cyclic coordinates are reduced mod u.
struct Builder {
  int u = 0;
  std::vector<Sun> blocks = {};

  Vertex C(long long x) const { return Vertex::cyclic(x, u); }
  Vertex I(int k) const { return Vertex::infinity(k); }

  void add(Vertex a, Vertex b, Vertex c, Vertex d, Vertex e, Vertex f) {
    blocks.emplace_back(a, b, c, d, e, f);
  }
};

// 1-based cycle coordinate with wrap-around, as in the cycle constructions.
Vertex cyc_at(const std::vector<int>& cycle, long long idx1, int u) {
  long long l = static_cast<long long>(cycle.size());
  long long i = (idx1 - 1) % l;
  if (i < 0) i += l;
  return Vertex::cyclic(cycle[static_cast<size_t>(i)], u);
}

void require(bool cond, const std::string& msg) {
  if (!cond) fail(Errc::PreconditionViolated, msg);
}

std::vector<int> reduce_all(int u, const std::vector<int>& raw) {
  std::vector<int> out;
  out.reserve(raw.size());
  for (int d : raw) out.push_back(reduce_difference(d, u));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

LemmaOutput two_inf_diff2(int u) {
  require(u % 4 == 0 && u >= 8, "two_inf_diff2 needs u = 0 mod 4, u >= 8");
  Builder b{u};
  for (int i = 0; i < u / 4; ++i) {
    b.add(b.I(1), b.C(2 + 4 * i), b.C(4 * i), b.C(3 + 4 * i), b.C(4 + 4 * i), b.I(2));
    b.add(b.I(2), b.C(3 + 4 * i), b.C(1 + 4 * i), b.C(2 + 4 * i), b.C(5 + 4 * i), b.I(1));
  }
  return {HoleGraph(u, 2, {2}), std::move(b.blocks)};
}

LemmaOutput four_inf_diff2_mod12(int u) {
  require(u % 12 == 0 && u >= 12, "four_inf_diff2_mod12 needs u = 0 mod 12");
  Builder b{u};
  for (int i = 0; i < u / 12; ++i) {
    int o = 12 * i;
    b.add(b.I(1), b.C(o), b.C(2 + o), b.C(7 + o), b.I(3), b.I(4));
    b.add(b.I(1), b.C(4 + o), b.C(6 + o), b.C(9 + o), b.I(3), b.I(4));
    b.add(b.I(1), b.C(8 + o), b.C(10 + o), b.C(11 + o), b.I(3), b.I(4));
    b.add(b.I(2), b.C(2 + o), b.C(4 + o), b.C(1 + o), b.I(3), b.I(4));
    b.add(b.I(2), b.C(6 + o), b.C(8 + o), b.C(7 + o), b.I(3), b.I(4));
    b.add(b.I(2), b.C(10 + o), b.C(12 + o), b.C(11 + o), b.I(3), b.I(4));
    b.add(b.I(3), b.C(1 + o), b.C(3 + o), b.C(9 + o), b.I(1), b.I(2));
    b.add(b.I(3), b.C(5 + o), b.C(7 + o), b.C(11 + o), b.I(1), b.C(9 + o));
    b.add(b.I(4), b.C(3 + o), b.C(5 + o), b.C(1 + o), b.I(1), b.I(2));
    b.add(b.I(4), b.C(9 + o), b.C(11 + o), b.C(7 + o), b.I(2), b.C(13 + o));
  }
  return {HoleGraph(u, 4, {2}), std::move(b.blocks)};
}

LemmaOutput four_inf_diff24(int u) {
  require(u >= 7 && u != 8, "four_inf_diff24 needs u >= 7, u != 8");
  int k = u / 4, r = u % 4;
  require(r == 0 || r == 1 || r == 3, "four_inf_diff24 does not cover u = 2 mod 4");
  Builder b{u};
  for (int i = 0; i + 3 <= k; ++i) {
    b.add(b.I(1), b.C(4 + 4 * i), b.C(6 + 4 * i), b.C(5 + 4 * i), b.C(8 + 4 * i), b.I(4));
    b.add(b.I(2), b.C(5 + 4 * i), b.C(7 + 4 * i), b.C(6 + 4 * i), b.C(9 + 4 * i), b.I(1));
    b.add(b.I(3), b.C(6 + 4 * i), b.C(8 + 4 * i), b.C(7 + 4 * i), b.C(10 + 4 * i), b.I(2));
    b.add(b.I(4), b.C(7 + 4 * i), b.C(9 + 4 * i), b.C(8 + 4 * i), b.C(11 + 4 * i), b.I(3));
  }
  int K = 4 * k;
  if (r == 0) {
    b.add(b.I(1), b.C(0), b.C(2), b.C(1), b.C(4), b.I(4));
    b.add(b.I(2), b.C(1), b.C(3), b.C(2), b.C(5), b.I(1));
    b.add(b.I(3), b.C(2), b.C(4), b.C(3), b.C(6), b.I(2));
    b.add(b.I(4), b.C(3), b.C(5), b.C(4), b.C(7), b.I(3));
    b.add(b.I(1), b.C(K - 4), b.C(K - 2), b.C(K - 3), b.C(0), b.I(4));
    b.add(b.I(2), b.C(K - 3), b.C(K - 1), b.C(K - 2), b.C(1), b.I(1));
    b.add(b.I(3), b.C(K - 2), b.C(0), b.C(K - 1), b.C(2), b.I(2));
    b.add(b.I(4), b.C(K - 1), b.C(1), b.C(0), b.C(3), b.I(3));
  } else if (r == 1) {
    b.add(b.I(1), b.C(0), b.C(2), b.C(1), b.C(4), b.I(2));
    b.add(b.I(2), b.C(1), b.C(3), b.C(0), b.C(5), b.I(1));
    b.add(b.I(3), b.C(2), b.C(4), b.C(3), b.C(6), b.I(2));
    b.add(b.I(4), b.C(3), b.C(5), b.C(4), b.C(7), b.I(3));
    b.add(b.I(1), b.C(K - 4), b.C(K - 2), b.C(K - 3), b.C(K), b.I(2));
    b.add(b.I(2), b.C(K - 3), b.C(K - 1), b.C(K), b.C(0), b.I(1));
    b.add(b.I(3), b.C(K - 2), b.C(K), b.C(K - 1), b.C(1), b.I(1));
    b.add(b.I(4), b.C(K - 1), b.C(0), b.C(K - 2), b.C(2), b.I(3));
    b.add(b.I(4), b.C(K), b.C(1), b.C(2), b.C(3), b.I(3));
  } else {  // r == 3
    b.add(b.I(1), b.C(0), b.C(2), b.C(1), b.C(4), b.I(4));
    b.add(b.I(2), b.C(1), b.C(3), b.C(2), b.C(5), b.I(1));
    b.add(b.I(3), b.C(2), b.C(4), b.C(3), b.C(6), b.I(2));
    b.add(b.I(4), b.C(3), b.C(5), b.C(4), b.C(7), b.I(3));
    b.add(b.I(1), b.C(K - 4), b.C(K - 2), b.C(K - 3), b.C(K), b.I(4));
    b.add(b.I(2), b.C(K - 3), b.C(K - 1), b.C(K - 2), b.C(K + 1), b.I(1));
    b.add(b.I(3), b.C(K - 2), b.C(K), b.C(K - 1), b.C(K + 2), b.I(2));
    b.add(b.I(4), b.C(K - 1), b.C(K + 1), b.C(K), b.C(0), b.I(3));
    b.add(b.I(1), b.C(K), b.C(K + 2), b.C(K + 1), b.C(1), b.I(4));
    b.add(b.I(2), b.C(K + 1), b.C(0), b.C(K + 2), b.C(2), b.I(4));
    b.add(b.I(3), b.C(K + 2), b.C(1), b.C(0), b.C(3), b.I(4));
  }
  if (u == 7) {
    // k = 1 produces each block twice; keep the seven distinct ones.
    std::vector<Sun> uniq;
    for (const Sun& s : b.blocks)
      if (std::find(uniq.begin(), uniq.end(), s) == uniq.end()) uniq.push_back(s);
    b.blocks = std::move(uniq);
  }
  return {HoleGraph(u, 4, reduce_all(u, {2, 4})), std::move(b.blocks)};
}

LemmaOutput eight_inf_diff_1_u3(int u) {
  require(u % 3 == 0 && u >= 12, "eight_inf_diff_1_u3 needs u = 0 mod 3, u >= 12");
  const int t3 = u / 3, t23 = 2 * u / 3;
  Builder b{u};
  if (u % 6 == 0) {
    for (int i = 0; i <= u / 6 - 1; ++i)
      b.add(b.I(1), b.C(2 * i), b.C(t3 + 2 * i), b.C(t23 + 2 * i), b.I(5), b.I(6));
    for (int i = 0; i <= u / 6 - 1; ++i)
      b.add(b.I(1), b.C(1 + 2 * i), b.C(t3 + 1 + 2 * i), b.C(t23 + 1 + 2 * i), b.I(6), b.I(5));
    for (int i = 0; i <= u / 6 - 2; ++i)
      b.add(b.I(2), b.C(t23 + 2 * i), b.C(t3 + 2 * i), b.C(2 + 2 * i), b.C(2 * i), b.I(5));
    for (int i = 0; i <= u / 6 - 2; ++i)
      b.add(b.I(2), b.C(t23 + 1 + 2 * i), b.C(t3 + 1 + 2 * i), b.C(3 + 2 * i), b.C(1 + 2 * i), b.I(6));
    b.add(b.I(2), b.C(u - 2), b.C(t23 - 2), b.C(0), b.C(t3 - 2), b.I(5));
    b.add(b.I(2), b.C(u - 1), b.C(t23 - 1), b.C(1), b.C(t3 - 1), b.I(6));
    for (int i = 0; i <= u / 6 - 1; ++i)
      b.add(b.I(3), b.C(2 * i), b.C(1 + 2 * i), b.C(t23 + 2 * i), b.I(7), b.I(8));
    for (int i = 0; i <= u / 6 - 1; ++i)
      b.add(b.I(3), b.C(t3 + 2 * i), b.C(t3 + 1 + 2 * i), b.C(t23 + 1 + 2 * i), b.I(7), b.I(8));
    for (int i = 0; i <= u / 6 - 1; ++i)
      b.add(b.I(4), b.C(1 + 2 * i), b.C(2 + 2 * i), b.C(t23 + 2 + 2 * i), b.I(7), b.I(8));
    for (int i = 0; i <= u / 6 - 1; ++i)
      b.add(b.I(4), b.C(t3 + 1 + 2 * i), b.C(t3 + 2 + 2 * i), b.C(t23 + 1 + 2 * i), b.I(7), b.I(8));
    for (int i = 0; i <= u / 6 - 1; ++i)
      b.add(b.I(5), b.C(t23 + 2 * i), b.C(t23 + 1 + 2 * i), b.C(1 + 2 * i), b.I(7), b.I(8));
    for (int i = 0; i <= u / 6 - 2; ++i)
      b.add(b.I(6), b.C(t23 + 3 + 2 * i), b.C(t23 + 4 + 2 * i), b.C(2 + 2 * i), b.I(7), b.I(8));
    b.add(b.I(6), b.C(t23 + 1), b.C(t23 + 2), b.C(t23), b.I(7), b.I(8));
  } else {  // u = 3 mod 6
    for (int i = 0; i <= (u - 3) / 6; ++i)
      b.add(b.I(1), b.C(2 * i), b.C(t3 + 2 * i), b.C(t23 + 2 * i), b.I(5), b.I(6));
    for (int i = 0; i <= (u - 9) / 6; ++i)
      b.add(b.I(1), b.C(1 + 2 * i), b.C(t3 + 1 + 2 * i), b.C(t23 + 1 + 2 * i), b.I(6), b.I(5));
    for (int i = 0; i <= (u - 9) / 6; ++i)
      b.add(b.I(2), b.C(t23 + 2 * i), b.C(t3 + 2 * i), b.C(2 + 2 * i), b.C(2 * i), b.I(5));
    b.add(b.I(2), b.C(u - 1), b.C(t23 - 1), b.C(0), b.C(t3 - 1), b.I(5));
    for (int i = 0; i <= (u - 15) / 6; ++i)
      b.add(b.I(2), b.C(t23 + 1 + 2 * i), b.C(t3 + 1 + 2 * i), b.C(3 + 2 * i), b.C(1 + 2 * i), b.I(6));
    b.add(b.I(2), b.C(u - 2), b.C(t23 - 2), b.C(1), b.C(t3 - 2), b.I(6));
    for (int i = 2; i <= (u - 3) / 6; ++i)
      b.add(b.I(3), b.C(2 * i), b.C(1 + 2 * i), b.C(t23 + 2 * i), b.I(7), b.I(8));
    b.add(b.I(3), b.C(0), b.C(1), b.C(t23), b.I(6), b.I(8));
    b.add(b.I(3), b.C(2), b.C(3), b.C(t23 + 2), b.I(6), b.I(8));
    for (int i = 0; i <= (u - 9) / 6; ++i)
      b.add(b.I(3), b.C(t3 + 1 + 2 * i), b.C(t3 + 2 + 2 * i), b.C(t23 + 1 + 2 * i), b.I(7), b.I(8));
    for (int i = 0; i <= (u - 9) / 6; ++i)
      b.add(b.I(4), b.C(1 + 2 * i), b.C(2 + 2 * i), b.C(t23 + 2 + 2 * i), b.I(7), b.I(8));
    for (int i = 0; i <= (u - 3) / 6; ++i)
      b.add(b.I(4), b.C(t3 + 2 * i), b.C(t3 + 1 + 2 * i), b.C(t23 + 1 + 2 * i), b.I(7), b.I(8));
    for (int i = 0; i <= (u - 9) / 6; ++i)
      b.add(b.I(5), b.C(t23 + 2 * i), b.C(t23 + 1 + 2 * i), b.C(1 + 2 * i), b.I(7), b.I(8));
    for (int i = 0; i <= (u - 15) / 6; ++i)
      b.add(b.I(6), b.C(t23 + 1 + 2 * i), b.C(t23 + 2 + 2 * i), b.C(4 + 2 * i), b.I(7), b.I(8));
    b.add(b.I(6), b.C(u - 2), b.C(u - 1), b.C(t23), b.I(7), b.I(8));
    b.add(b.I(7), b.C(u - 1), b.C(0), b.C(2), b.I(5), b.I(8));
  }
  return {HoleGraph(u, 8, {1, u / 3}), std::move(b.blocks)};
}

LemmaOutput three_inf_1_half(int u) {
  require(u % 2 == 0 && u >= 8, "three_inf_1_half needs even u >= 8");
  require(u % 4 == 0, "three_inf_1_half needs u = 0 mod 4 (edge count)");
  const int h = u / 2;
  Builder b{u};
  for (int i = 0; i <= u / 4 - 2; ++i)
    b.add(b.I(1), b.C(2 * i), b.C(1 + 2 * i), b.C(h + 2 + 2 * i), b.C(h + 2 * i), b.I(3));
  b.add(b.I(1), b.C(h - 2), b.C(h - 1), b.C(h), b.C(u - 2), b.I(3));
  for (int i = 0; i <= u / 4 - 1; ++i)
    b.add(b.I(2), b.C(1 + 2 * i), b.C(h + 1 + 2 * i), b.C(2 * i), b.C(2 + 2 * i), b.I(1));
  for (int i = 0; i <= u / 4 - 1; ++i)
    b.add(b.I(3), b.C(h + 1 + 2 * i), b.C(h + 2 * i), b.C(2 * i), b.C(h + 2 + 2 * i), b.I(2));
  return {HoleGraph(u, 3, {1, h}), std::move(b.blocks)};
}

LemmaOutput four_inf_1_half(int u) {
  require(u % 12 == 0 && u >= 12, "four_inf_1_half needs u = 0 mod 12");
  const int h = u / 2;
  Builder b{u};
  for (int i = 0; i < u / 12; ++i) {
    int o = 6 * i;
    b.add(b.I(1), b.C(o), b.C(h + o), b.C(4 + o), b.I(3), b.I(2));
    b.add(b.I(1), b.C(1 + o), b.C(h + 1 + o), b.C(5 + o), b.I(4), b.I(2));
    b.add(b.I(1), b.C(2 + o), b.C(h + 2 + o), b.C(h + 3 + o), b.I(4), b.I(3));
    b.add(b.I(2), b.C(1 + o), b.C(o), b.C(h + 3 + o), b.I(3), b.I(4));
    b.add(b.I(2), b.C(2 + o), b.C(3 + o), b.C(h + 4 + o), b.C(1 + o), b.I(4));
    b.add(b.I(2), b.C(5 + o), b.C(4 + o), b.C(h + 5 + o), b.C(6 + o), b.C(3 + o));
    b.add(b.I(3), b.C(3 + o), b.C(h + 3 + o), b.C(2 + o), b.I(1), b.C(h + 2 + o));
    b.add(b.I(3), b.C(4 + o), b.C(h + 4 + o), b.C(h + o), b.I(4), b.I(1));
    b.add(b.I(3), b.C(5 + o), b.C(h + 5 + o), b.C(h + 1 + o), b.I(4), b.I(1));
    b.add(b.I(4), b.C(h + 1 + o), b.C(h + 2 + o), b.C(h + 3 + o), b.C(h + o), b.I(2));
    b.add(b.I(4), b.C(h + 4 + o), b.C(h + 5 + o), b.C(h + o), b.C(h + 3 + o), b.C(h + 6 + o));
  }
  return {HoleGraph(u, 4, {1, h}), std::move(b.blocks)};
}

LemmaOutput six_inf_1_half(int u) {
  require(u % 2 == 0 && u >= 8, "six_inf_1_half needs even u >= 8");
  require(u % 4 == 0, "six_inf_1_half needs u = 0 mod 4 (edge count)");
  const int h = u / 2;
  Builder b{u};
  for (int i = 0; i <= u / 4 - 2; ++i)
    b.add(b.I(1), b.C(2 * i), b.C(1 + 2 * i), b.C(h + 2 + 2 * i), b.C(h + 2 * i), b.I(3));
  b.add(b.I(1), b.C(h - 2), b.C(h - 1), b.C(h), b.C(u - 2), b.I(3));
  for (int i = 0; i <= u / 4 - 1; ++i)
    b.add(b.I(2), b.C(1 + 2 * i), b.C(h + 1 + 2 * i), b.C(2 * i), b.I(6), b.I(1));
  for (int i = 0; i <= u / 4 - 1; ++i)
    b.add(b.I(3), b.C(h + 1 + 2 * i), b.C(h + 2 * i), b.C(2 * i), b.I(6), b.I(2));
  for (int i = 0; i <= u / 4 - 1; ++i)
    b.add(b.I(4), b.C(1 + 2 * i), b.C(2 + 2 * i), b.C(h + 2 + 2 * i), b.I(5), b.I(6));
  for (int i = 0; i <= u / 4 - 1; ++i)
    b.add(b.I(5), b.C(h + 1 + 2 * i), b.C(h + 2 + 2 * i), b.C(2 + 2 * i), b.I(4), b.I(6));
  return {HoleGraph(u, 6, {1, h}), std::move(b.blocks)};
}

LemmaOutput seven_inf_1_half(int u) {
  require(u % 12 == 0 && u >= 12, "seven_inf_1_half needs u = 0 mod 12");
  const int h = u / 2;
  Builder b{u};
  for (int i = 0; i < u / 12; ++i) {
    int o = 6 * i;
    b.add(b.I(1), b.C(o), b.C(h + o), b.C(4 + o), b.I(7), b.I(2));
    b.add(b.I(1), b.C(1 + o), b.C(h + 1 + o), b.C(h + 3 + o), b.I(7), b.I(4));
    b.add(b.I(1), b.C(2 + o), b.C(h + 2 + o), b.C(h + 5 + o), b.I(5), b.I(2));
    b.add(b.I(2), b.C(3 + o), b.C(h + 3 + o), b.C(o), b.I(1), b.I(4));
    b.add(b.I(2), b.C(4 + o), b.C(h + 4 + o), b.C(2 + o), b.I(7), b.I(1));
    b.add(b.I(2), b.C(5 + o), b.C(h + 5 + o), b.C(h + 1 + o), b.I(1), b.I(7));
    b.add(b.I(3), b.C(o), b.C(1 + o), b.C(h + o), b.I(5), b.I(6));
    b.add(b.I(3), b.C(2 + o), b.C(3 + o), b.C(h + 2 + o), b.I(7), b.I(6));
    b.add(b.I(3), b.C(4 + o), b.C(5 + o), b.C(h + 5 + o), b.I(5), b.I(6));
    b.add(b.I(4), b.C(1 + o), b.C(2 + o), b.C(h + 6 + o), b.I(2), b.I(6));
    b.add(b.I(4), b.C(3 + o), b.C(4 + o), b.C(h + 4 + o), b.I(7), b.I(6));
    b.add(b.I(4), b.C(5 + o), b.C(6 + o), b.C(h + 5 + o), b.I(7), b.I(6));
    b.add(b.I(5), b.C(h + o), b.C(h + 1 + o), b.C(1 + o), b.I(7), b.I(3));
    b.add(b.I(5), b.C(h + 2 + o), b.C(h + 3 + o), b.C(3 + o), b.I(7), b.I(3));
    b.add(b.I(5), b.C(h + 4 + o), b.C(h + 5 + o), b.C(5 + o), b.I(7), b.C(h + 6 + o));
    b.add(b.I(6), b.C(h + 1 + o), b.C(h + 2 + o), b.C(h + 5 + o), b.I(7), b.I(4));
    b.add(b.I(6), b.C(h + 3 + o), b.C(h + 4 + o), b.C(h + 6 + o), b.I(7), b.I(3));
  }
  return {HoleGraph(u, 7, {1, h}), std::move(b.blocks)};
}

LemmaOutput three_inf_12_half(int u) {
  require(u % 12 == 0 && u >= 12, "three_inf_12_half needs u = 0 mod 12");
  const int h = u / 2;
  Builder b{u};
  for (int i = 0; i < u / 12; ++i) {
    int o = 6 * i;
    b.add(b.I(1), b.C(o), b.C(1 + o), b.C(h + 1 + o), b.C(h + o), b.C(3 + o));
    b.add(b.I(1), b.C(2 + o), b.C(3 + o), b.C(h + 5 + o), b.C(h + 2 + o), b.C(5 + o));
    b.add(b.I(1), b.C(4 + o), b.C(5 + o), b.C(h + 2 + o), b.C(h + 4 + o), b.C(7 + o));
    b.add(b.I(1), b.C(h + 3 + o), b.C(h + 4 + o), b.C(h + o), b.C(h + 2 + o), b.I(2));
    b.add(b.I(2), b.C(1 + o), b.C(h + 1 + o), b.C(h + 3 + o), b.C(2 + o), b.C(h + 2 + o));
    b.add(b.I(2), b.C(3 + o), b.C(4 + o), b.C(2 + o), b.C(h + 3 + o), b.C(6 + o));
    b.add(b.I(2), b.C(5 + o), b.C(h + 5 + o), b.C(h + 2 + o), b.C(6 + o), b.C(h + 6 + o));
    b.add(b.I(3), b.C(2 + o), b.C(o), b.C(1 + o), b.C(4 + o), b.I(2));
    b.add(b.I(3), b.C(h + 2 + o), b.C(h + o), b.C(4 + o), b.C(h + 4 + o), b.I(2));
    b.add(b.I(3), b.C(h + 1 + o), b.C(h + 3 + o), b.C(3 + o), b.C(h + o), b.C(h + 5 + o));
    b.add(b.I(3), b.C(h + 5 + o), b.C(h + 4 + o), b.C(5 + o), b.C(h + 7 + o), b.C(h + 6 + o));
  }
  return {HoleGraph(u, 3, {1, 2, h}), std::move(b.blocks)};
}

LemmaOutput one_inf_single_diff(int u, int d) {
  require(u % 3 == 0, "one_inf_single_diff needs u = 0 mod 3");
  require(d >= 1 && 2 * d <= u, "difference out of range");
  require(2 * d != u && 3 * d != u, "d must avoid u/2 and u/3");
  auto cycles = cycles_of_difference(u, d);
  const int p = static_cast<int>(cycles[0].size());
  require(p % 3 == 0, "u/gcd(u,d) must be divisible by 3");
  const int q = p / 3;
  Builder b{u};
  if (q > 2) {
    for (const auto& cyc : cycles)
      for (int i = 0; i < q; ++i)
        b.add(b.I(1), cyc_at(cyc, 2 + 3 * i, u), cyc_at(cyc, 3 + 3 * i, u),
              cyc_at(cyc, 7 + 3 * i, u), cyc_at(cyc, 1 + 3 * i, u), cyc_at(cyc, 4 + 3 * i, u));
  } else {  // q == 2: link the six-cycles in order
    const int nc = static_cast<int>(cycles.size());
    for (int j = 0; j < nc; ++j) {
      const auto& cyc = cycles[j];
      const auto& nxt = cycles[(j + 1) % nc];
      b.add(b.I(1), cyc_at(cyc, 2, u), cyc_at(cyc, 3, u), cyc_at(nxt, 1, u), cyc_at(cyc, 1, u),
            cyc_at(cyc, 4, u));
      b.add(b.I(1), cyc_at(cyc, 5, u), cyc_at(cyc, 6, u), cyc_at(nxt, 4, u), cyc_at(cyc, 4, u),
            cyc_at(cyc, 1, u));
    }
  }
  return {HoleGraph(u, 1, {d}), std::move(b.blocks)};
}

namespace {

// Shared base-block choice of the five/four/three-difference lemmas:
// returns the triangle corner a (d1 or -d1) after checking the condition.
int triple_base_corner(int u, int d1, int d2, int d3) {
  if (d3 == d2 - d1) return d1;
  if (d1 + d2 + d3 == u) return u - d1;
  fail(Errc::PreconditionViolated, "need d3 = d2 - d1 or d1 + d2 + d3 = u");
}

void check_diffs(int u, const std::vector<int>& d) {
  std::set<int> seen;
  for (int x : d) {
    require(x >= 1 && 2 * x <= u, "difference out of range");
    require(2 * x != u, "difference u/2 not allowed here");
    require(seen.insert(x).second, "differences must be distinct");
  }
}

}  // namespace

LemmaOutput one_inf_five_diffs(int u, const std::array<int, 5>& d) {
  check_diffs(u, {d.begin(), d.end()});
  int a = triple_base_corner(u, d[0], d[1], d[2]);
  int e = (d[1] + d[4]) % u;
  int f = (e == d[3]) ? u - d[3] : d[3];
  Sun base(Vertex::cyclic(a, u), Vertex::cyclic(d[1], u), Vertex::cyclic(0, u),
           Vertex::infinity(1), Vertex::cyclic(e, u), Vertex::cyclic(f, u));
  if (base.degenerate()) fail(Errc::DegenerateSun, "base block " + base.str());
  return {HoleGraph(u, 1, {d.begin(), d.end()}), orbit(base, u)};
}

LemmaOutput two_inf_four_diffs(int u, const std::array<int, 4>& d) {
  check_diffs(u, {d.begin(), d.end()});
  int a = triple_base_corner(u, d[0], d[1], d[2]);
  Sun base(Vertex::cyclic(a, u), Vertex::cyclic(d[1], u), Vertex::cyclic(0, u),
           Vertex::infinity(1), Vertex::infinity(2), Vertex::cyclic(d[3], u));
  if (base.degenerate()) fail(Errc::DegenerateSun, "base block " + base.str());
  return {HoleGraph(u, 2, {d.begin(), d.end()}), orbit(base, u)};
}

LemmaOutput three_inf_three_diffs(int u, const std::array<int, 3>& d) {
  check_diffs(u, {d.begin(), d.end()});
  int a = triple_base_corner(u, d[0], d[1], d[2]);
  Sun base(Vertex::cyclic(a, u), Vertex::cyclic(d[1], u), Vertex::cyclic(0, u),
           Vertex::infinity(1), Vertex::infinity(2), Vertex::infinity(3));
  if (base.degenerate()) fail(Errc::DegenerateSun, "base block " + base.str());
  return {HoleGraph(u, 3, {d.begin(), d.end()}), orbit(base, u)};
}

LemmaOutput five_inf_single_diff(int u, int d) {
  require(d >= 1 && 2 * d <= u, "difference out of range");
  require(2 * d != u, "difference u/2 not allowed");
  Builder b{u};
  for (const auto& cyc : cycles_of_difference(u, d)) {
    const int l = static_cast<int>(cyc.size());
    const int q = l / 3, r = l % 3;
    auto X = [&](long long i) { return cyc_at(cyc, i, u); };
    for (int i = 0; i + 2 <= q; ++i) {
      b.add(b.I(1), X(1 + 3 * i), X(2 + 3 * i), X(3 + 3 * i), b.I(4), b.I(5));
      b.add(b.I(2), X(2 + 3 * i), X(3 + 3 * i), X(4 + 3 * i), b.I(4), b.I(5));
      b.add(b.I(3), X(3 + 3 * i), X(4 + 3 * i), X(5 + 3 * i), b.I(4), b.I(5));
    }
    const int Q = 3 * q;
    if (r == 0) {
      b.add(b.I(1), X(Q - 2), X(Q - 1), X(Q), b.I(4), b.I(5));
      b.add(b.I(2), X(Q - 1), X(Q), X(1), b.I(4), b.I(5));
      b.add(b.I(3), X(Q), X(1), X(2), b.I(4), b.I(5));
    } else if (r == 1) {
      b.add(b.I(1), X(Q - 2), X(Q - 1), X(Q + 1), b.I(4), b.I(5));
      b.add(b.I(2), X(Q - 1), X(Q), X(1), b.I(4), b.I(1));
      b.add(b.I(3), X(Q), X(Q + 1), X(2), b.I(4), b.I(2));
      b.add(b.I(5), X(Q + 1), X(1), X(Q), b.I(4), b.I(3));
    } else {  // r == 2
      b.add(b.I(1), X(Q - 2), X(Q - 1), X(Q + 2), b.I(4), b.I(5));
      b.add(b.I(2), X(Q - 1), X(Q), X(1), b.I(4), b.I(5));
      b.add(b.I(3), X(Q), X(Q + 1), X(2), b.I(1), b.I(2));
      b.add(b.I(4), X(Q + 1), X(Q + 2), X(Q), b.I(1), b.I(3));
      b.add(b.I(5), X(Q + 2), X(1), X(Q + 1), b.I(2), b.I(3));
    }
  }
  return {HoleGraph(u, 5, {d}), std::move(b.blocks)};
}

namespace {

// Orbit generators of the leave tables.
Sun leave_base(int u, int s, int j) {
  return Sun(Vertex::cyclic(5 * s + 1 + j, u), Vertex::cyclic(5 * s - j, u),
             Vertex::cyclic(0, u), Vertex::cyclic(3 * s, u), Vertex::cyclic(s, u),
             Vertex::cyclic(u - 2 - 2 * j, u));
}

Sun leave_base_alpha4(int u, int s) {
  return Sun(Vertex::cyclic(6 * s + 1, u), Vertex::cyclic(4 * s, u), Vertex::cyclic(0, u),
             Vertex::cyclic(s, u), Vertex::cyclic(9 * s, u), Vertex::cyclic(6 * s + 2, u));
}

Sun leave_base_alpha8_first(int u, int s) {
  return Sun(Vertex::cyclic(6 * s + 1, u), Vertex::cyclic(4 * s, u), Vertex::cyclic(0, u),
             Vertex::cyclic(s, u), Vertex::cyclic(9 * s, u), Vertex::cyclic(6 * s + 4, u));
}

Sun leave_base_alpha8_second(int u, int s) {
  return Sun(Vertex::cyclic(5 * s + 2, u), Vertex::cyclic(5 * s - 1, u), Vertex::cyclic(0, u),
             Vertex::cyclic(3 * s, u), Vertex::cyclic(s, u), Vertex::cyclic(6 * s + 2, u));
}

}  // namespace

std::vector<int> leave_diff_set(int u, int s, int alpha, bool skip_first) {
  require(alpha == 0 || alpha == 4 || alpha == 8, "alpha must be 0, 4 or 8");
  require(!skip_first || alpha == 0, "skip_first only applies to alpha = 0");
  if (s == 0) return {};
  std::vector<int> raw;
  if (alpha == 0) {
    for (int d = skip_first ? 3 : 1; d <= 6 * s; ++d) raw.push_back(d);
    if (skip_first)
      for (int x : {2 * s + 1, 4 * s, 5 * s, 5 * s + 1})
        raw.erase(std::find(raw.begin(), raw.end(), x));
  } else if (alpha == 4) {
    for (int d = 3; d <= 6 * s + 2; ++d) raw.push_back(d);
  } else {
    for (int d = 3; d <= 6 * s + 4; ++d)
      if (d != 4 && d != 6 * s + 3) raw.push_back(d);
  }
  return reduce_all(u, raw);
}

LemmaOutput leave_decomposition(int u, int s, int alpha, bool skip_first) {
  require(s >= 0, "s must be >= 0");
  require(alpha == 0 || alpha == 4 || alpha == 8, "alpha must be 0, 4 or 8");
  require(!skip_first || alpha == 0, "skip_first only applies to alpha = 0");
  if (s == 0) return {HoleGraph(u, 0, {}), {}};
  require(!(alpha == 8 && s == 1), "alpha = 8, s = 1 is handled by leave_alpha8_s1");
  // u = 12s+7 is admitted for alpha = 8: the top difference 6s+4 wraps to 6s+3.
  require(u > 12 * s + alpha || (alpha == 8 && u == 12 * s + 7),
          "need u > 12s + alpha");
  Builder b{u};
  for (int j = skip_first ? 1 : 0; j < s; ++j) {
    Sun base = leave_base(u, s, j);
    if (alpha != 0 && j == 0) base = (alpha == 4) ? leave_base_alpha4(u, s) : leave_base_alpha8_first(u, s);
    if (alpha == 8 && j == 1) base = leave_base_alpha8_second(u, s);
    for (Sun& t : orbit(base, u)) b.blocks.push_back(std::move(t));
  }
  return {HoleGraph(u, 0, leave_diff_set(u, s, alpha, skip_first)), std::move(b.blocks)};
}

LemmaOutput leave_alpha8_s1(int u) {
  // Frozen base block with triangle differences {3,7,10} and pendant
  // differences {5,6,8}; found once by bounded search, re-verified in tests.
  // For u = 19 the difference 10 reduces to 9 and the orbit still covers
  // the required leave [3,9] \ {4}. u = 20 collides with u/2.
  require(u >= 19 && u != 20, "leave_alpha8_s1 needs u >= 19, u != 20");
  Sun base(Vertex::cyclic(3, u), Vertex::cyclic(10, u), Vertex::cyclic(0, u),
           Vertex::cyclic(8, u), Vertex::cyclic(4, u), Vertex::cyclic(u - 8, u));
  std::vector<int> diffs = reduce_all(u, {3, 5, 6, 7, 8, 10});
  return {HoleGraph(u, 0, std::move(diffs)), orbit(base, u)};
}

std::optional<std::vector<int>> order_for_triple_condition(int u, std::vector<int> diffs) {
  std::sort(diffs.begin(), diffs.end());
  do {
    if (diffs[2] == diffs[1] - diffs[0] || diffs[0] + diffs[1] + diffs[2] == u) return diffs;
  } while (std::next_permutation(diffs.begin(), diffs.end()));
  return std::nullopt;
}

}  // namespace sunsys
