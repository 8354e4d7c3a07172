#pragma once

#include <array>
#include <string>

#include "sunsys/lemmas.hpp"
#include "sunsys/verify.hpp"

namespace sunsys {

// Congruence and existence classification of a 3-sun system order.
struct Admissibility {
  bool admissible = false;   // n = 0, 1, 4 or 9 (mod 12)
  bool trivial = false;      // n in {0, 1}: the empty system
  bool nonexistent = false;  // n = 4: congruent, but a sun needs 6 vertices
};

Admissibility is_admissible_order(long long n);

// Residues mod 12 the cyclic part u may take so that n + u is admissible.
std::array<int, 4> hole_residues(long long n);

// Smallest admissible order m > n a system of order n >= 9 embeds into;
// equals the smallest integer >= 7n/5 + 1.
long long min_embedding_order(long long n);

// Necessary counting bound for a decomposition of K_{n+u} \ K_n.
struct CountingCertificate {
  long long n = 0, u = 0;
  long long lhs = 0;  // u(5u - 2n - 5)/2, twice the slack of the bound
  bool feasible = false;
};

CountingCertificate counting_feasible(long long n, long long u);

enum class LemmaId {
  TwoInfDiff2,
  FourInfDiff2Mod12,
  FourInfDiff24,
  EightInfDiff1U3,
  ThreeInf1Half,
  FourInf1Half,
  SixInf1Half,
  SevenInf1Half,
  ThreeInf12Half,
  OneInfSingleDiff,
  OneInfFiveDiffs,
  TwoInfFourDiffs,
  ThreeInfThreeDiffs,
  FiveInfSingleDiff,
  Leave,
  LeaveAlpha8S1,
};

const char* lemma_name(LemmaId id);

struct PlanTask {
  LemmaId lemma;
  std::vector<int> diffs;  // as planned, pre-reduction mod u
  int inf_first = 0;       // first infinity label consumed (1-based; 0 if none)
  int inf_count = 0;
  int s = 0;               // leave parameters
  int alpha = 0;
  bool skip_first = false;
};

struct EmbeddingParams {
  int n = 0, u = 0;
  int k = 0, r = 0, c = 0;  // n = 60k + 5r + c
  int u_min = 0;
  int h = 0, s = 0, l = 0;  // u = u_min + 12s + l
};

struct Plan {
  EmbeddingParams params;
  std::string case_label;  // dispatch case, e.g. "c2/7" or "star/n9"
  std::vector<PlanTask> tasks;
};

// Case dispatch for the decomposition of K_{n+u} \ K_n. Requires n >= 9
// admissible, u = hole_residues(n) mod 12, u >= u_min.
Plan build_plan(int n, int u);

// Execute a plan task against Z_u, with its infinity labels globalized.
LemmaOutput run_task(const PlanTask& task, int u);

// Decomposition of K_{n+u} \ K_n (hole on the top n vertex ids).
Decomposition decompose_hole(int n, int u);

// Embed a verified decomposition of K_n into one of K_m; the base blocks
// reappear verbatim on the top n ids. BoundViolated for n < m < 7n/5 + 1.
Decomposition embed(const Decomposition& base, int m);

// Recursive construction of a 3-sun system of any admissible order.
Decomposition construct_3ss(int m);

}  // namespace sunsys
