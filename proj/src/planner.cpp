#include "sunsys/planner.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "sunsys/lemmas.hpp"
#include "sunsys/oracle.hpp"

namespace sunsys {

Admissibility is_admissible_order(long long n) {
  Admissibility a;
  if (n < 0) return a;
  long long m = n % 12;
  a.admissible = (m == 0 || m == 1 || m == 4 || m == 9);
  a.trivial = n == 0 || n == 1;
  a.nonexistent = n == 4;
  return a;
}

std::array<int, 4> hole_residues(long long n) {
  switch (is_admissible_order(n).admissible ? n % 12 : -1) {
    case 0: return {0, 1, 4, 9};
    case 1: return {0, 3, 8, 11};
    case 4: return {0, 5, 8, 9};
    case 9: return {0, 3, 4, 7};
    default: fail(Errc::NotAdmissible, std::to_string(n) + " is not an admissible order");
  }
}

long long min_embedding_order(long long n) {
  if (!is_admissible_order(n).admissible || n < 9)
    fail(Errc::NotAdmissible, "no embedding bound for order " + std::to_string(n));
  const long long c = n % 5, t = (n - c) / 5, r = t % 12, k = t / 12;
  static constexpr int kOffset[5] = {1, 3, 4, 6, 7};
  return 84 * k + 7 * r + kOffset[c];
}

CountingCertificate counting_feasible(long long n, long long u) {
  CountingCertificate cert;
  cert.n = n;
  cert.u = u;
  cert.lhs = u * (5 * u - 2 * n - 5) / 2;
  cert.feasible = u == 0 || cert.lhs >= 0;
  return cert;
}

const char* lemma_name(LemmaId id) {
  switch (id) {
    case LemmaId::TwoInfDiff2: return "two_inf_diff2";
    case LemmaId::FourInfDiff2Mod12: return "four_inf_diff2_mod12";
    case LemmaId::FourInfDiff24: return "four_inf_diff24";
    case LemmaId::EightInfDiff1U3: return "eight_inf_diff_1_u3";
    case LemmaId::ThreeInf1Half: return "three_inf_1_half";
    case LemmaId::FourInf1Half: return "four_inf_1_half";
    case LemmaId::SixInf1Half: return "six_inf_1_half";
    case LemmaId::SevenInf1Half: return "seven_inf_1_half";
    case LemmaId::ThreeInf12Half: return "three_inf_12_half";
    case LemmaId::OneInfSingleDiff: return "one_inf_single_diff";
    case LemmaId::OneInfFiveDiffs: return "one_inf_five_diffs";
    case LemmaId::TwoInfFourDiffs: return "two_inf_four_diffs";
    case LemmaId::ThreeInfThreeDiffs: return "three_inf_three_diffs";
    case LemmaId::FiveInfSingleDiff: return "five_inf_single_diff";
    case LemmaId::Leave: return "leave_decomposition";
    case LemmaId::LeaveAlpha8S1: return "leave_alpha8_s1";
  }
  return "?";
}

namespace {

constexpr int inf_points(LemmaId id) {
  switch (id) {
    case LemmaId::TwoInfDiff2: return 2;
    case LemmaId::FourInfDiff2Mod12: return 4;
    case LemmaId::FourInfDiff24: return 4;
    case LemmaId::EightInfDiff1U3: return 8;
    case LemmaId::ThreeInf1Half: return 3;
    case LemmaId::FourInf1Half: return 4;
    case LemmaId::SixInf1Half: return 6;
    case LemmaId::SevenInf1Half: return 7;
    case LemmaId::ThreeInf12Half: return 3;
    case LemmaId::OneInfSingleDiff: return 1;
    case LemmaId::OneInfFiveDiffs: return 1;
    case LemmaId::TwoInfFourDiffs: return 2;
    case LemmaId::ThreeInfThreeDiffs: return 3;
    case LemmaId::FiveInfSingleDiff: return 5;
    case LemmaId::Leave: return 0;
    case LemmaId::LeaveAlpha8S1: return 0;
  }
  return 0;
}

// Accumulates the task list of one dispatch case, handing out infinity
// labels in task order.
struct TaskList {
  int u, s;
  int next_inf = 1;
  std::vector<PlanTask> tasks;

  void add(LemmaId id, std::vector<int> diffs) {
    PlanTask t;
    t.lemma = id;
    t.diffs = std::move(diffs);
    t.inf_count = inf_points(id);
    t.inf_first = t.inf_count ? next_inf : 0;
    next_inf += t.inf_count;
    tasks.push_back(std::move(t));
  }

  // One five_inf_single_diff task per difference, ascending.
  void five(const std::vector<int>& diffs) {
    for (int d : diffs) add(LemmaId::FiveInfSingleDiff, {d});
  }
  void five_range(int lo, int hi, const std::vector<int>& skip = {}) {
    std::vector<int> ds;
    for (int d = lo; d <= hi; ++d)
      if (std::find(skip.begin(), skip.end(), d) == skip.end()) ds.push_back(d);
    five(ds);
  }
  // {extra} u [lo, hi]
  void five_with(int extra, int lo, int hi) {
    std::vector<int> ds = {extra};
    for (int d = lo; d <= hi; ++d) ds.push_back(d);
    five(ds);
  }

  void leave(int alpha, bool skip_first = false) {
    if (s == 0) return;
    PlanTask t;
    t.lemma = (alpha == 8 && s == 1) ? LemmaId::LeaveAlpha8S1 : LemmaId::Leave;
    t.diffs = leave_diff_set(u, s, alpha, skip_first);
    t.s = s;
    t.alpha = alpha;
    t.skip_first = skip_first;
    tasks.push_back(std::move(t));
  }
};

bool in(int x, std::initializer_list<int> xs) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

}  // namespace

Plan build_plan(int n, int u) {
  if (!is_admissible_order(n).admissible || n < 9)
    fail(Errc::NotAdmissible, "hole order " + std::to_string(n));
  {
    auto res = hole_residues(n);
    if (std::find(res.begin(), res.end(), u % 12) == res.end())
      fail(Errc::NotAdmissible, "total order " + std::to_string(n + u));
  }

  EmbeddingParams p;
  p.n = n;
  p.u = u;
  p.c = n % 5;
  const int t = (n - p.c) / 5;
  p.r = t % 12;
  p.k = t / 12;
  static constexpr int kUminOffset[5] = {1, 2, 2, 3, 3};
  p.u_min = 24 * p.k + 2 * p.r + kUminOffset[p.c];
  if (u < p.u_min)
    fail(Errc::BoundViolated,
         "u = " + std::to_string(u) + " < u_min = " + std::to_string(p.u_min));
  p.h = u - p.u_min;
  p.s = p.h / 12;
  p.l = p.h % 12;

  const int k = p.k, r = p.r, c = p.c, s = p.s, l = p.l, half = u / 2;
  TaskList T{u, s};
  std::string label;

  // The three small starred configurations take bespoke task lists.
  if (c == 4 && l == 2 && k == 0 && r == 1) {  // n = 9, u = 12s+7
    label = "star/n9";
    T.add(LemmaId::FourInfDiff24, {2, 4});
    T.five({1});
    T.leave(8);
  } else if (c == 3 && l == 5 && k == 0 && r == 2) {  // n = 13, u = 12s+12
    label = "star/n13";
    T.add(LemmaId::SixInf1Half, {1, half});
    T.add(LemmaId::FourInfDiff2Mod12, {2});
    T.add(LemmaId::ThreeInfThreeDiffs, {4, 6 * s + 3, 6 * s + 5});
    T.leave(8);
  } else if (c == 1 && l == 5 && k == 0 && r == 4) {  // n = 21, u = 12s+15
    label = "star/n21";
    T.add(LemmaId::FourInfDiff24, {2, 4});
    T.add(LemmaId::OneInfSingleDiff, {1});
    T.add(LemmaId::OneInfSingleDiff, {6 * s + 7});
    T.five({6 * s + 3, 6 * s + 5, 6 * s + 6});
    T.leave(8);
  } else if (c == 0) {
    if (l == 0 && in(r, {0, 5, 8, 9})) {
      label = "c0/1";
      T.five_range(6 * s + 1, 12 * k + r + 6 * s);
      T.leave(0);
    } else if (l == 8 && in(r, {0, 9})) {
      label = "c0/2";
      T.add(LemmaId::ThreeInfThreeDiffs, {2, 6 * s + 3, 6 * s + 5});
      T.add(LemmaId::OneInfSingleDiff, {1});
      T.add(LemmaId::OneInfSingleDiff, {6 * s + 4});
      T.five_range(6 * s + 6, 12 * k + r + 6 * s + 4);
      T.leave(4);
    } else if (l == 4 && in(r, {5, 8})) {
      label = "c0/3";
      T.add(LemmaId::FourInfDiff24, {2, 4});
      T.add(LemmaId::OneInfSingleDiff, {1});
      T.five_range(6 * s + 3, 12 * k + r + 6 * s + 2, {6 * s + 4});
      T.leave(8);
    } else if (l == 3 && in(r, {0, 8})) {
      label = "c0/4";
      T.add(LemmaId::ThreeInf1Half, {1, half});
      T.add(LemmaId::TwoInfDiff2, {2});
      T.five_range(6 * s + 3, 12 * k + r + 6 * s + 1);
      T.leave(4);
    } else if (l == 11 && r == 0) {
      label = "c0/5";
      T.add(LemmaId::ThreeInf12Half, {1, 2, half});
      T.add(LemmaId::TwoInfFourDiffs, {4, 6 * s + 3, 6 * s + 5, 6 * s + 7});
      T.five_range(6 * s + 6, 12 * k + 6 * s + 5, {6 * s + 7});
      T.leave(8);
    } else if (l == 1 && r == 5) {
      label = "c0/6";
      T.add(LemmaId::SixInf1Half, {1, half});
      T.add(LemmaId::FourInfDiff2Mod12, {2});
      T.five_range(6 * s + 3, 12 * k + 6 * s + 5);
      T.leave(4);
    } else if (l == 9 && in(r, {5, 9})) {
      label = "c0/7";
      T.add(LemmaId::ThreeInf1Half, {1, half});
      T.add(LemmaId::TwoInfFourDiffs, {2, 6 * s + 3, 6 * s + 4, 6 * s + 5});
      T.five_range(6 * s + 6, 12 * k + r + 6 * s + 4);
      T.leave(4);
    } else if (l == 7 && r == 8) {
      label = "c0/8";
      T.add(LemmaId::ThreeInf12Half, {1, 2, half});
      T.add(LemmaId::OneInfSingleDiff, {4});
      T.add(LemmaId::OneInfSingleDiff, {6 * s + 5});
      T.five_range(6 * s + 3, 12 * k + 6 * s + 11, {6 * s + 4, 6 * s + 5});
      T.leave(8);
    } else if (l == 5 && r == 9) {
      label = "c0/9";
      T.add(LemmaId::ThreeInf1Half, {1, half});
      T.add(LemmaId::OneInfSingleDiff, {2});
      T.add(LemmaId::OneInfSingleDiff, {4});
      T.five_range(6 * s + 3, 12 * k + 6 * s + 11, {6 * s + 4});
      T.leave(8);
    }
  } else if (c == 1) {
    if (l == 1 && in(r, {0, 3})) {
      label = "c1/1";
      T.add(LemmaId::OneInfSingleDiff, {6 * s + 2});
      T.five_range(6 * s + 1, 12 * k + r + 6 * s + 1, {6 * s + 2});
      T.leave(0);
    } else if (l == 9 && in(r, {0, 3, 4, 7})) {
      label = "c1/2";
      T.add(LemmaId::ThreeInfThreeDiffs, {1, 6 * s + 3, 6 * s + 4});
      T.add(LemmaId::ThreeInfThreeDiffs, {2, 6 * s + 5, 6 * s + 7});
      T.five_range(6 * s + 6, 12 * k + r + 6 * s + 5, {6 * s + 7});
      T.leave(4);
    } else if (l == 5 && in(r, {4, 7})) {
      label = "c1/3";
      T.add(LemmaId::FourInfDiff24, {2, 4});
      T.add(LemmaId::OneInfSingleDiff, {1});
      T.add(LemmaId::OneInfSingleDiff, {6 * s + 8});
      T.five_range(6 * s + 3, 12 * k + r + 6 * s + 3, {6 * s + 4, 6 * s + 8});
      T.leave(8);
    } else if (l == 6 && in(r, {0, 4})) {
      label = "c1/4";
      T.add(LemmaId::ThreeInf1Half, {1, half});
      T.add(LemmaId::ThreeInfThreeDiffs, {2, 6 * s + 3, 6 * s + 5});
      T.five_range(6 * s + 4, 12 * k + r + 6 * s + 3, {6 * s + 5});
      T.leave(4);
    } else if (l == 10 && r == 0) {
      label = "c1/5";
      T.add(LemmaId::SixInf1Half, {1, half});
      T.add(LemmaId::FourInfDiff2Mod12, {2});
      T.add(LemmaId::OneInfFiveDiffs, {4, 6 * s + 3, 6 * s + 5, 6 * s + 6, 6 * s + 7});
      T.five_range(6 * s + 8, 12 * k + 6 * s + 5);
      T.leave(8);
    } else if (l == 0 && in(r, {3, 7})) {
      label = "c1/6";
      T.add(LemmaId::SixInf1Half, {1, half});
      T.five_with(2, 6 * s + 3, 12 * k + r + 6 * s);
      T.leave(4);
    } else if (l == 4 && r == 3) {
      label = "c1/7";
      T.add(LemmaId::FourInf1Half, {1, half});
      T.add(LemmaId::OneInfSingleDiff, {2});
      T.add(LemmaId::OneInfSingleDiff, {6 * s + 5});
      T.five_range(6 * s + 3, 12 * k + 6 * s + 5, {6 * s + 5});
      T.leave(4);
    } else if (l == 2 && r == 4) {
      label = "c1/8";
      T.add(LemmaId::FourInf1Half, {1, half});
      T.add(LemmaId::TwoInfDiff2, {2});
      T.five_range(6 * s + 3, 12 * k + 6 * s + 5);
      T.leave(4);
    } else if (l == 8 && r == 7) {
      label = "c1/9";
      T.add(LemmaId::ThreeInf12Half, {1, 2, half});
      T.add(LemmaId::ThreeInfThreeDiffs, {4, 6 * s + 3, 6 * s + 7});
      T.five_range(6 * s + 5, 12 * k + 6 * s + 11, {6 * s + 7});
      T.leave(8);
    }
  } else if (c == 2) {
    if (l == 3 && in(r, {2, 11})) {
      label = "c2/1";
      T.add(LemmaId::OneInfSingleDiff, {6 * s + 2});
      T.add(LemmaId::OneInfSingleDiff, {6 * s + 4});
      T.five_range(6 * s + 1, 12 * k + r + 6 * s + 2, {6 * s + 2, 6 * s + 4});
      T.leave(0);
    } else if (l == 7 && in(r, {2, 7, 10, 11})) {
      label = "c2/2";
      T.add(LemmaId::TwoInfFourDiffs, {1, 2, 6 * s + 3, 6 * s + 4});
      T.five_range(6 * s + 5, 12 * k + r + 6 * s + 4);
      T.leave(4);
    } else if (l == 11 && in(r, {7, 10})) {
      label = "c2/3";
      T.add(LemmaId::ThreeInfThreeDiffs, {1, 6 * s + 3, 6 * s + 4});
      T.add(LemmaId::ThreeInfThreeDiffs, {2, 6 * s + 5, 6 * s + 7});
      T.add(LemmaId::OneInfSingleDiff, {6 * s + 8});
      T.five_range(6 * s + 6, 12 * k + r + 6 * s + 6, {6 * s + 7, 6 * s + 8});
      T.leave(4);
    } else if (l == 6 && r == 2) {
      label = "c2/4";
      T.add(LemmaId::FourInf1Half, {1, half});
      T.add(LemmaId::ThreeInfThreeDiffs, {2, 6 * s + 3, 6 * s + 5});
      T.five_range(6 * s + 4, 12 * k + 6 * s + 5, {6 * s + 5});
      T.leave(4);
    } else if (l == 10 && in(r, {2, 10})) {
      label = "c2/5";
      T.add(LemmaId::SixInf1Half, {1, half});
      T.add(LemmaId::OneInfFiveDiffs, {2, 6 * s + 3, 6 * s + 4, 6 * s + 5, 6 * s + 6});
      T.five_range(6 * s + 7, 12 * k + r + 6 * s + 5);
      T.leave(4);
    } else if (l == 4 && in(r, {7, 11})) {
      label = "c2/6";
      T.add(LemmaId::ThreeInf1Half, {1, half});
      T.add(LemmaId::FourInfDiff24, {2, 4});
      T.five_range(6 * s + 3, 12 * k + r + 6 * s + 2, {6 * s + 4});
      T.leave(8);
    } else if (l == 8 && r == 7) {
      label = "c2/7";
      T.add(LemmaId::ThreeInf1Half, {1, half});
      T.add(LemmaId::ThreeInfThreeDiffs, {2, 6 * s + 3, 6 * s + 5});
      T.add(LemmaId::OneInfSingleDiff, {6 * s + 7});
      T.five_range(6 * s + 4, 12 * k + 6 * s + 11, {6 * s + 5, 6 * s + 7});
      T.leave(4);
    } else if (l == 2 && r == 10) {
      label = "c2/8";
      T.add(LemmaId::SixInf1Half, {1, half});
      T.add(LemmaId::OneInfSingleDiff, {2});
      T.five_range(6 * s + 3, 12 * k + 6 * s + 11);
      T.leave(4);
    } else if (l == 0 && r == 11) {
      label = "c2/9";
      T.add(LemmaId::SevenInf1Half, {1, half});
      T.five_with(2, 6 * s + 3, 12 * k + 6 * s + 11);
      T.leave(4);
    }
  } else if (c == 3) {
    if (l == 4 && in(r, {2, 5, 6, 9})) {
      label = "c3/1";
      T.add(LemmaId::ThreeInfThreeDiffs, {1, 6 * s + 3, 6 * s + 4});
      T.five_with(2, 6 * s + 5, 12 * k + r + 6 * s + 3);
      T.leave(4);
    } else if (l == 8 && in(r, {2, 5})) {
      label = "c3/2";
      T.add(LemmaId::TwoInfFourDiffs, {1, 6 * s + 3, 6 * s + 4, 6 * s + 5});
      T.add(LemmaId::OneInfSingleDiff, {2});
      T.five_range(6 * s + 6, 12 * k + r + 6 * s + 5);
      T.leave(4);
    } else if (l == 0 && in(r, {6, 9})) {
      label = "c3/3";
      if (s == 0) {
        T.add(LemmaId::EightInfDiff1U3, {1, u / 3});
        T.five_range(2, 12 * k + r + 1, {u / 3});
      } else {
        T.add(LemmaId::ThreeInfThreeDiffs, {1, 5 * s, 5 * s + 1});
        T.add(LemmaId::ThreeInfThreeDiffs, {2, 6 * s + 1, 6 * s + 3});
        T.add(LemmaId::OneInfSingleDiff, {6 * s + 2});
        T.add(LemmaId::OneInfSingleDiff, {6 * s + 4});
        std::vector<int> ds = {2 * s + 1, 4 * s};
        for (int d = 6 * s + 5; d <= 12 * k + r + 6 * s + 1; ++d) ds.push_back(d);
        std::sort(ds.begin(), ds.end());
        T.five(ds);
        T.leave(0, /*skip_first=*/true);
      }
    } else if (l == 1 && in(r, {2, 6})) {
      label = "c3/4";
      T.add(LemmaId::ThreeInf1Half, {1, half});
      T.five_with(2, 6 * s + 3, 12 * k + r + 6 * s + 1);
      T.leave(4);
    } else if (l == 5 && r == 2) {
      label = "c3/5";
      T.add(LemmaId::SixInf1Half, {1, half});
      T.add(LemmaId::FourInfDiff2Mod12, {2});
      T.add(LemmaId::ThreeInfThreeDiffs, {4, 6 * s + 3, 6 * s + 7});
      T.five_range(6 * s + 5, 12 * k + 6 * s + 5, {6 * s + 7});
      T.leave(8);
    } else if (l == 7 && in(r, {5, 9})) {
      label = "c3/6";
      T.add(LemmaId::SixInf1Half, {1, half});
      T.add(LemmaId::TwoInfFourDiffs, {2, 6 * s + 3, 6 * s + 4, 6 * s + 5});
      T.five_range(6 * s + 6, 12 * k + r + 6 * s + 4);
      T.leave(4);
    } else if (l == 11 && r == 5) {
      label = "c3/7";
      T.add(LemmaId::FourInf1Half, {1, half});
      T.add(LemmaId::TwoInfFourDiffs, {2, 6 * s + 3, 6 * s + 5, 6 * s + 6});
      T.add(LemmaId::OneInfSingleDiff, {4});
      T.add(LemmaId::OneInfSingleDiff, {6 * s + 7});
      T.five_range(6 * s + 8, 12 * k + 6 * s + 11);
      T.leave(8);
    } else if (l == 9 && r == 6) {
      label = "c3/8";
      T.add(LemmaId::ThreeInf1Half, {1, half});
      T.add(LemmaId::ThreeInfThreeDiffs, {2, 6 * s + 3, 6 * s + 5});
      T.add(LemmaId::OneInfSingleDiff, {4});
      T.add(LemmaId::OneInfSingleDiff, {6 * s + 7});
      T.five_range(6 * s + 6, 12 * k + 6 * s + 11, {6 * s + 7});
      T.leave(8);
    } else if (l == 3 && r == 9) {
      label = "c3/9";
      T.add(LemmaId::ThreeInf12Half, {1, 2, half});
      T.five_range(6 * s + 3, 12 * k + 6 * s + 11);
      T.leave(4);
    }
  } else {  // c == 4
    if (l == 2 && in(r, {0, 1, 4, 9})) {
      label = "c4/1";
      T.add(LemmaId::FourInfDiff24, {2, 4});
      std::vector<int> ds = {1, 6 * s + 3};
      for (int d = 6 * s + 5; d <= 12 * k + r + 6 * s + 2; ++d) ds.push_back(d);
      T.five(ds);
      T.leave(8);
    } else if (l == 6 && in(r, {0, 9})) {
      label = "c4/2";
      T.add(LemmaId::ThreeInfThreeDiffs, {1, 6 * s + 3, 6 * s + 4});
      T.add(LemmaId::OneInfSingleDiff, {2});
      T.five_range(6 * s + 5, 12 * k + r + 6 * s + 4);
      T.leave(4);
    } else if (l == 10 && in(r, {1, 4})) {
      label = "c4/3";
      T.add(LemmaId::TwoInfFourDiffs, {1, 6 * s + 3, 6 * s + 5, 6 * s + 6});
      T.add(LemmaId::OneInfSingleDiff, {2});
      T.add(LemmaId::OneInfSingleDiff, {6 * s + 4});
      T.five_range(6 * s + 7, 12 * k + r + 6 * s + 6);
      T.leave(4);
    } else if (l == 5 && in(r, {0, 4})) {
      label = "c4/4";
      T.add(LemmaId::SixInf1Half, {1, half});
      T.add(LemmaId::ThreeInfThreeDiffs, {2, 6 * s + 3, 6 * s + 5});
      T.five_range(6 * s + 4, 12 * k + r + 6 * s + 3, {6 * s + 5});
      T.leave(4);
    } else if (l == 9 && r == 0) {
      label = "c4/5";
      T.add(LemmaId::FourInf1Half, {1, half});
      T.add(LemmaId::ThreeInfThreeDiffs, {2, 6 * s + 3, 6 * s + 5});
      T.add(LemmaId::OneInfSingleDiff, {4});
      T.add(LemmaId::OneInfSingleDiff, {6 * s + 7});
      T.five_range(6 * s + 6, 12 * k + 6 * s + 5, {6 * s + 7});
      T.leave(8);
    } else if (l == 7 && r == 1) {
      label = "c4/6";
      T.add(LemmaId::SevenInf1Half, {1, half});
      T.add(LemmaId::TwoInfFourDiffs, {2, 4, 6 * s + 3, 6 * s + 5});
      T.five_range(6 * s + 6, 12 * k + 6 * s + 5);
      T.leave(8);
    } else if (l == 11 && in(r, {1, 9})) {
      label = "c4/7";
      T.add(LemmaId::ThreeInf1Half, {1, half});
      T.add(LemmaId::OneInfFiveDiffs, {2, 4, 6 * s + 3, 6 * s + 5, 6 * s + 6});
      T.five_range(6 * s + 7, 12 * k + r + 6 * s + 6);
      T.leave(8);
    } else if (l == 1 && r == 4) {
      label = "c4/8";
      T.add(LemmaId::FourInf1Half, {1, half});
      T.five_with(2, 6 * s + 3, 12 * k + 6 * s + 5);
      T.leave(4);
    } else if (l == 3 && r == 9) {
      label = "c4/9";
      T.add(LemmaId::ThreeInf1Half, {1, half});
      T.add(LemmaId::OneInfSingleDiff, {2});
      T.five_range(6 * s + 3, 12 * k + 6 * s + 11);
      T.leave(4);
    }
  }

  if (label.empty())
    fail(Errc::NoCaseMatch, "no dispatch case for n = " + std::to_string(n) +
                                ", u = " + std::to_string(u) + " (c = " + std::to_string(c) +
                                ", r = " + std::to_string(r) + ", l = " + std::to_string(l) + ")");

  Plan plan;
  plan.params = p;
  plan.case_label = std::move(label);
  plan.tasks = std::move(T.tasks);
  return plan;
}

namespace {

// Deterministic ordering search for the orbit lemmas: try the reduced
// differences in lexicographic permutation order until the constructor
// accepts (triple condition satisfied and base block non-degenerate).
template <size_t N, typename F>
LemmaOutput ordered_orbit(int u, const std::vector<int>& raw, F&& ctor) {
  std::vector<int> d;
  for (int x : raw) d.push_back(reduce_difference(x, u));
  std::sort(d.begin(), d.end());
  if (d.size() != N) fail(Errc::Internal, "bad difference count");
  do {
    std::array<int, N> a;
    std::copy(d.begin(), d.end(), a.begin());
    try {
      return ctor(u, a);
    } catch (const Error& e) {
      if (e.code() != Errc::PreconditionViolated && e.code() != Errc::DegenerateSun) throw;
    }
  } while (std::next_permutation(d.begin(), d.end()));
  fail(Errc::NoCaseMatch, "no valid ordering of the difference tuple");
}

}  // namespace

LemmaOutput run_task(const PlanTask& t, int u) {
  switch (t.lemma) {
    case LemmaId::TwoInfDiff2: return two_inf_diff2(u);
    case LemmaId::FourInfDiff2Mod12: return four_inf_diff2_mod12(u);
    case LemmaId::FourInfDiff24: return four_inf_diff24(u);
    case LemmaId::EightInfDiff1U3: return eight_inf_diff_1_u3(u);
    case LemmaId::ThreeInf1Half: return three_inf_1_half(u);
    case LemmaId::FourInf1Half: return four_inf_1_half(u);
    case LemmaId::SixInf1Half: return six_inf_1_half(u);
    case LemmaId::SevenInf1Half: return seven_inf_1_half(u);
    case LemmaId::ThreeInf12Half: return three_inf_12_half(u);
    case LemmaId::OneInfSingleDiff:
      return one_inf_single_diff(u, reduce_difference(t.diffs.at(0), u));
    case LemmaId::FiveInfSingleDiff:
      return five_inf_single_diff(u, reduce_difference(t.diffs.at(0), u));
    case LemmaId::OneInfFiveDiffs:
      return ordered_orbit<5>(u, t.diffs, [](int uu, const std::array<int, 5>& d) {
        return one_inf_five_diffs(uu, d);
      });
    case LemmaId::TwoInfFourDiffs:
      return ordered_orbit<4>(u, t.diffs, [](int uu, const std::array<int, 4>& d) {
        return two_inf_four_diffs(uu, d);
      });
    case LemmaId::ThreeInfThreeDiffs:
      return ordered_orbit<3>(u, t.diffs, [](int uu, const std::array<int, 3>& d) {
        return three_inf_three_diffs(uu, d);
      });
    case LemmaId::Leave: return leave_decomposition(u, t.s, t.alpha, t.skip_first);
    case LemmaId::LeaveAlpha8S1: return leave_alpha8_s1(u);
  }
  fail(Errc::Internal, "unknown lemma id");
}

Decomposition decompose_hole(int n, int u) {
  if (n == 0 || n == 1) {
    // Degenerate hole: K_{n+u} \ K_n has the same edges as K_{n+u}.
    Decomposition full = construct_3ss(n + u);
    return Decomposition{n + u, n, std::move(full.blocks)};
  }
  Plan plan = build_plan(n, u);
  Decomposition out{n + u, n, {}};
  for (const PlanTask& task : plan.tasks) {
    LemmaOutput lo = run_task(task, u);
    for (const Sun& s : lo.blocks) {
      IntSun b;
      for (int i = 0; i < 6; ++i) {
        const Vertex& v = s.vertices()[i];
        b[i] = v.is_cyclic() ? v.index() : u + task.inf_first + v.label() - 2;
      }
      out.blocks.push_back(b);
    }
  }
  return out;
}

Decomposition embed(const Decomposition& base, int m) {
  const int n = base.m;
  if (base.hole_size != 0) fail(Errc::PreconditionViolated, "base must decompose a complete graph");
  if (!verify_partition(base).ok)
    fail(Errc::VerifyFailed, "base system of order " + std::to_string(n) + " does not verify");
  if (m == n) return base;
  auto adm = is_admissible_order(m);
  if (!adm.admissible) fail(Errc::NotAdmissible, "target order " + std::to_string(m));
  if (m < n) fail(Errc::BoundViolated, "target order below base order");
  if (n >= 9 && m < min_embedding_order(n))
    fail(Errc::BoundViolated, "order " + std::to_string(n) + " embeds only into m >= " +
                                  std::to_string(min_embedding_order(n)) + ", got " +
                                  std::to_string(m));
  const int u = m - n;
  Decomposition out = decompose_hole(n, u);
  out.hole_size = 0;
  for (const IntSun& b : base.blocks) {
    IntSun shifted;
    for (int i = 0; i < 6; ++i) shifted[i] = b[i] + u;
    out.blocks.push_back(shifted);
  }
  return out;
}

Decomposition construct_3ss(int m) {
  auto adm = is_admissible_order(m);
  if (!adm.admissible) fail(Errc::NotAdmissible, "order " + std::to_string(m));
  if (adm.nonexistent)
    fail(Errc::NonExistent, "no 3-sun system of order 4 (a sun needs 6 vertices)");
  if (adm.trivial) return Decomposition{m, 0, {}};
  if (m == 9 || m == 12 || m == 13) return base_system(m);

  static std::mutex mu;
  static std::map<int, Decomposition> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
  }

  // Greedy: largest admissible base order n the bound admits.
  int n = -1;
  for (int cand = m - 1; cand >= 9; --cand) {
    if (!is_admissible_order(cand).admissible || cand == 4) continue;
    if (m < min_embedding_order(cand)) continue;
    auto res = hole_residues(cand);
    if (std::find(res.begin(), res.end(), (m - cand) % 12) == res.end()) continue;
    n = cand;
    break;
  }
  if (n < 0) fail(Errc::Internal, "no base order found for m = " + std::to_string(m));

  Decomposition result = embed(construct_3ss(n), m);
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(m, std::move(result)).first->second;
}

}  // namespace sunsys
