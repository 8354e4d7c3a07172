#include "sunsys/verify.hpp"

#include <algorithm>
#include <map>

namespace sunsys {

IntSun to_int_sun(const Sun& s, int u) {
  IntSun out;
  for (int i = 0; i < 6; ++i) {
    Vertex v = s.vertices()[i];
    out[i] = v.is_cyclic() ? v.index() : u + v.label() - 1;
  }
  return out;
}

Sun from_int_sun(const IntSun& s, int u) {
  auto vx = [&](int id) {
    return id < u ? Vertex::cyclic(id, u) : Vertex::infinity(id - u + 1);
  };
  return Sun(vx(s[0]), vx(s[1]), vx(s[2]), vx(s[3]), vx(s[4]), vx(s[5]));
}

IntSun canonical_sun(const IntSun& s) {
  static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                      {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  IntSun best = s;
  for (const auto& p : perms) {
    IntSun cand = {s[p[0]], s[p[1]], s[p[2]], s[3 + p[0]], s[3 + p[1]], s[3 + p[2]]};
    if (cand < best) best = cand;
  }
  return best;
}

namespace {

using IntEdge = std::pair<int, int>;

IntEdge norm_edge(int a, int b) { return a < b ? IntEdge{a, b} : IntEdge{b, a}; }

}  // namespace

VerificationReport verify_partition(const std::vector<IntSun>& blocks, const HoleGraph& target) {
  VerificationReport rep;
  rep.block_count = static_cast<long long>(blocks.size());
  rep.expected_edge_count = target.edge_count();

  const int u = target.u();
  std::map<IntEdge, int> want;
  for (const Edge& e : target.edges()) {
    auto id = [&](Vertex v) { return v.is_cyclic() ? v.index() : u + v.label() - 1; };
    want[norm_edge(id(e.a()), id(e.b()))] = 1;
  }

  std::map<IntEdge, int> have;
  static constexpr int pairs[6][2] = {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}, {2, 5}};
  for (const IntSun& b : blocks)
    for (const auto& p : pairs) {
      if (b[p[0]] == b[p[1]]) {
        rep.foreign_edges.push_back({b[p[0]], b[p[1]]});  // loop: never in a target
        continue;
      }
      ++have[norm_edge(b[p[0]], b[p[1]])];
    }

  for (const auto& [e, mult] : have) {
    auto it = want.find(e);
    if (it == want.end()) {
      rep.foreign_edges.push_back(e);
    } else if (mult > 1) {
      rep.duplicated_edges.push_back(e);
    }
  }
  for (const auto& [e, mult] : want)
    if (!have.count(e)) rep.missing_edges.push_back(e);

  rep.ok = rep.missing_edges.empty() && rep.duplicated_edges.empty() &&
           rep.foreign_edges.empty() && 6 * rep.block_count == rep.expected_edge_count;
  return rep;
}

VerificationReport verify_partition(const std::vector<Sun>& blocks, const HoleGraph& target) {
  std::vector<IntSun> ints;
  ints.reserve(blocks.size());
  for (const Sun& s : blocks) ints.push_back(to_int_sun(s, target.u()));
  return verify_partition(ints, target);
}

VerificationReport verify_partition(const Decomposition& d) {
  return verify_partition(d.blocks, HoleGraph::complete_with_hole(d.u(), d.hole_size));
}

}  // namespace sunsys
