#pragma once

#include <array>
#include <vector>

#include "sunsys/core.hpp"

namespace sunsys {

// A block over integer vertex ids 0..m-1.
using IntSun = std::array<int, 6>;

// A decomposition of K_m (hole_size = 0) or of K_m \ K_n. Cyclic points
// occupy ids 0..u-1 and hole points the top ids u..m-1 (inf_k -> u+k-1).
struct Decomposition {
  int m = 0;
  int hole_size = 0;
  std::vector<IntSun> blocks;

  int u() const { return m - hole_size; }
};

struct VerificationReport {
  bool ok = false;
  std::vector<std::pair<int, int>> missing_edges;
  std::vector<std::pair<int, int>> duplicated_edges;
  std::vector<std::pair<int, int>> foreign_edges;
  long long block_count = 0;
  long long expected_edge_count = 0;
};

// Map a Vertex-level sun onto integer ids for a graph with cyclic part u.
IntSun to_int_sun(const Sun& s, int u);
Sun from_int_sun(const IntSun& s, int u);

// Smallest representative of a block under the 3-sun symmetries
// (triangle permutation with matched pendant permutation).
IntSun canonical_sun(const IntSun& s);

// Exact multiset comparison of the blocks' edges against the target graph.
VerificationReport verify_partition(const std::vector<IntSun>& blocks, const HoleGraph& target);
VerificationReport verify_partition(const std::vector<Sun>& blocks, const HoleGraph& target);
VerificationReport verify_partition(const Decomposition& d);

}  // namespace sunsys
