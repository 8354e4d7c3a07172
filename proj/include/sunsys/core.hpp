#pragma once

#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace sunsys {

enum class Errc {
  InvalidEdge,
  DegenerateSun,
  NotTwoFactor,
  PreconditionViolated,
  NotAdmissible,
  BoundViolated,
  NoCaseMatch,
  NonExistent,
  UnsupportedBase,
  VerifyFailed,
  ParseError,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

// A vertex is either a point of Z_u or an infinity (hole) point.
// Ordering: cyclic points first (by index), then infinity points (by label).
class Vertex {
 public:
  static Vertex cyclic(long long index, int u) {
    long long i = index % u;
    if (i < 0) i += u;
    return Vertex(Kind::cyclic, static_cast<int>(i));
  }
  static Vertex infinity(int label) {
    if (label < 1) fail(Errc::PreconditionViolated, "infinity label must be >= 1");
    return Vertex(Kind::infinity, label);
  }

  bool is_cyclic() const { return kind_ == Kind::cyclic; }
  bool is_infinity() const { return kind_ == Kind::infinity; }
  int index() const { return value_; }  // cyclic index or infinity label
  int label() const { return value_; }

  friend auto operator<=>(const Vertex&, const Vertex&) = default;

  std::string str() const;

 private:
  enum class Kind : int { cyclic = 0, infinity = 1 };
  Vertex(Kind k, int v) : kind_(k), value_(v) {}
  Kind kind_;
  int value_;
};

// Unordered pair of distinct vertices, stored canonically (smaller first).
class Edge {
 public:
  Edge(Vertex a, Vertex b) : a_(a), b_(b) {
    if (a_ == b_) fail(Errc::InvalidEdge, "loop edge " + a.str());
    if (b_ < a_) std::swap(a_, b_);
  }
  Vertex a() const { return a_; }
  Vertex b() const { return b_; }

  friend auto operator<=>(const Edge&, const Edge&) = default;

  std::string str() const { return a_.str() + "-" + b_.str(); }

 private:
  Vertex a_, b_;
};

// |i-j|_u = min(|i-j|, u-|i-j|)
int canonical_difference(int i, int j, int u);

// Reduce a (possibly >u/2) printed difference value into [1, u/2].
int reduce_difference(long long value, int u);

// Triangle (a,b,c) with pendant edges {a,d},{b,e},{c,f}.
class Sun {
 public:
  Sun(Vertex a, Vertex b, Vertex c, Vertex d, Vertex e, Vertex f)
      : v_{a, b, c, d, e, f} {}

  Vertex a() const { return v_[0]; }
  Vertex b() const { return v_[1]; }
  Vertex c() const { return v_[2]; }
  Vertex d() const { return v_[3]; }
  Vertex e() const { return v_[4]; }
  Vertex f() const { return v_[5]; }
  const std::array<Vertex, 6>& vertices() const { return v_; }

  bool degenerate() const;

  // The six edges {ab, bc, ca, ad, be, cf}; throws DegenerateSun on a
  // repeated vertex.
  std::array<Edge, 6> edges() const;

  // Shift cyclic coordinates by i mod u; infinity points are fixed.
  Sun translated(int i, int u) const;

  friend auto operator<=>(const Sun&, const Sun&) = default;

  std::string str() const;

 private:
  std::array<Vertex, 6> v_;
};

// The u translates S+0, S+1, ..., S+(u-1).
std::vector<Sun> orbit(const Sun& base, int u);

// The gcd(u,d) disjoint cycles of the difference-d 2-factor, cycle j
// starting at vertex j and stepping by +d. Rejects d = u/2.
std::vector<std::vector<int>> cycles_of_difference(int u, int d);

// The graph <Z_u u H, D>: cyclic part of order u, t infinity points,
// difference set D subset of [1, u/2].
class HoleGraph {
 public:
  HoleGraph(int u, int t, std::vector<int> diffs);

  int u() const { return u_; }
  int t() const { return t_; }
  const std::vector<int>& diffs() const { return diffs_; }  // sorted, unique
  bool has_diff(int d) const;

  long long edge_count() const;
  std::vector<Edge> edges() const;

  // <Z_u u H, D_u>, i.e. K_{u+t} \ K_t.
  static HoleGraph complete_with_hole(int u, int t);

 private:
  int u_, t_;
  std::vector<int> diffs_;
};

}  // namespace sunsys
