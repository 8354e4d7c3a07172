#include "sunsys/core.hpp"

#include <algorithm>
#include <numeric>

namespace sunsys {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidEdge: return "InvalidEdge";
    case Errc::DegenerateSun: return "DegenerateSun";
    case Errc::NotTwoFactor: return "NotTwoFactor";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NotAdmissible: return "NotAdmissible";
    case Errc::BoundViolated: return "BoundViolated";
    case Errc::NoCaseMatch: return "NoCaseMatch";
    case Errc::NonExistent: return "NonExistent";
    case Errc::UnsupportedBase: return "UnsupportedBase";
    case Errc::VerifyFailed: return "VerifyFailed";
    case Errc::ParseError: return "ParseError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

std::string Vertex::str() const {
  if (is_cyclic()) return std::to_string(value_);
  return "inf" + std::to_string(value_);
}

int canonical_difference(int i, int j, int u) {
  if (u < 1) fail(Errc::PreconditionViolated, "modulus must be positive");
  if (i < 0 || i >= u || j < 0 || j >= u)
    fail(Errc::PreconditionViolated, "indices must lie in [0,u)");
  if (i == j) fail(Errc::InvalidEdge, "difference of equal indices");
  int d = std::abs(i - j);
  return std::min(d, u - d);
}

int reduce_difference(long long value, int u) {
  long long v = value % u;
  if (v < 0) v += u;
  if (v == 0) fail(Errc::InvalidEdge, "difference reduces to 0 mod " + std::to_string(u));
  return static_cast<int>(std::min(v, u - v));
}

bool Sun::degenerate() const {
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (v_[i] == v_[j]) return true;
  return false;
}

std::array<Edge, 6> Sun::edges() const {
  if (degenerate()) fail(Errc::DegenerateSun, "repeated vertex in " + str());
  return {Edge(v_[0], v_[1]), Edge(v_[1], v_[2]), Edge(v_[2], v_[0]),
          Edge(v_[0], v_[3]), Edge(v_[1], v_[4]), Edge(v_[2], v_[5])};
}

Sun Sun::translated(int i, int u) const {
  std::array<Vertex, 6> w = v_;
  for (auto& x : w)
    if (x.is_cyclic()) x = Vertex::cyclic(x.index() + i, u);
  return Sun(w[0], w[1], w[2], w[3], w[4], w[5]);
}

std::string Sun::str() const {
  return "(" + v_[0].str() + "," + v_[1].str() + "," + v_[2].str() + ";" +
         v_[3].str() + "," + v_[4].str() + "," + v_[5].str() + ")";
}

std::vector<Sun> orbit(const Sun& base, int u) {
  if (base.degenerate()) fail(Errc::DegenerateSun, "degenerate base block " + base.str());
  std::vector<Sun> out;
  out.reserve(u);
  for (int i = 0; i < u; ++i) out.push_back(base.translated(i, u));
  return out;
}

std::vector<std::vector<int>> cycles_of_difference(int u, int d) {
  if (d < 1 || 2 * d > u) fail(Errc::PreconditionViolated, "difference out of range");
  if (2 * d == u) fail(Errc::NotTwoFactor, "difference u/2 yields a 1-factor, not cycles");
  int g = std::gcd(u, d);
  int len = u / g;
  std::vector<std::vector<int>> cycles;
  cycles.reserve(g);
  for (int j = 0; j < g; ++j) {
    std::vector<int> cyc;
    cyc.reserve(len);
    int x = j;
    for (int i = 0; i < len; ++i) {
      cyc.push_back(x);
      x = (x + d) % u;
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

HoleGraph::HoleGraph(int u, int t, std::vector<int> diffs)
    : u_(u), t_(t), diffs_(std::move(diffs)) {
  if (u_ < 0) fail(Errc::PreconditionViolated, "negative cyclic order");
  if (t_ < 0) fail(Errc::PreconditionViolated, "negative infinity count");
  std::sort(diffs_.begin(), diffs_.end());
  diffs_.erase(std::unique(diffs_.begin(), diffs_.end()), diffs_.end());
  for (int d : diffs_)
    if (d < 1 || 2 * d > u_)
      fail(Errc::PreconditionViolated,
           "difference " + std::to_string(d) + " outside [1," + std::to_string(u_ / 2) + "]");
}

bool HoleGraph::has_diff(int d) const {
  return std::binary_search(diffs_.begin(), diffs_.end(), d);
}

long long HoleGraph::edge_count() const {
  long long n = 0;
  for (int d : diffs_) n += (2 * d == u_) ? u_ / 2 : u_;
  return n + static_cast<long long>(t_) * u_;
}

std::vector<Edge> HoleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(edge_count()));
  for (int d : diffs_) {
    int count = (2 * d == u_) ? u_ / 2 : u_;
    for (int i = 0; i < count; ++i)
      out.emplace_back(Vertex::cyclic(i, u_), Vertex::cyclic(i + d, u_));
  }
  for (int k = 1; k <= t_; ++k)
    for (int i = 0; i < u_; ++i) out.emplace_back(Vertex::infinity(k), Vertex::cyclic(i, u_));
  std::sort(out.begin(), out.end());
  return out;
}

HoleGraph HoleGraph::complete_with_hole(int u, int t) {
  std::vector<int> diffs(u / 2);
  std::iota(diffs.begin(), diffs.end(), 1);
  return HoleGraph(u, t, std::move(diffs));
}

}  // namespace sunsys
