#include "sunsys/oracle.hpp"

#include <algorithm>
#include <map>

namespace sunsys {

namespace {

// Knuth's dancing-links exact cover. Column 0 is the root header.
class Dlx {
 public:
  // hole_col[c] marks columns for edges incident to the (independent) hole.
  // Two sound bounds prune the search: a sun's triangle contains at most one
  // hole vertex, so every block covers at least one non-hole column and at
  // most five hole columns.
  Dlx(int ncols, std::vector<char> hole_col) : ncols_(ncols), hole_col_(std::move(hole_col)) {
    nodes_.resize(ncols + 1);
    sizes_.assign(ncols + 1, 0);
    for (int i = 0; i <= ncols; ++i) {
      nodes_[i] = {i == 0 ? ncols : i - 1, i == ncols ? 0 : i + 1, i, i, i, -1};
    }
    alive_total_ = ncols;
    for (char h : hole_col_) alive_hole_ += h;
  }

  void add_row(int row_id, const std::vector<int>& cols) {
    int first = -1;
    for (int c : cols) {
      int col = c + 1;
      int id = static_cast<int>(nodes_.size());
      nodes_.push_back({id, id, nodes_[col].up, col, col, row_id});
      nodes_[nodes_[col].up].down = id;
      nodes_[col].up = id;
      ++sizes_[col];
      if (first < 0) {
        first = id;
      } else {
        nodes_[id].left = nodes_[first].left;
        nodes_[id].right = first;
        nodes_[nodes_[first].left].right = id;
        nodes_[first].left = id;
      }
    }
  }

  // Returns true if a cover was found (rows in solution()), false if the
  // space was exhausted or the deadline hit (check timed_out()).
  bool solve(std::chrono::steady_clock::time_point deadline) {
    deadline_ = deadline;
    return search();
  }

  const std::vector<int>& solution() const { return solution_; }
  bool timed_out() const { return timed_out_; }
  long long nodes_visited() const { return node_count_; }

 private:
  struct Node {
    int left, right, up, down;
    int col;
    int row;
  };

  void cover(int col) {
    nodes_[nodes_[col].left].right = nodes_[col].right;
    nodes_[nodes_[col].right].left = nodes_[col].left;
    --alive_total_;
    alive_hole_ -= hole_col_[col - 1];
    for (int i = nodes_[col].down; i != col; i = nodes_[i].down)
      for (int j = nodes_[i].right; j != i; j = nodes_[j].right) {
        nodes_[nodes_[j].up].down = nodes_[j].down;
        nodes_[nodes_[j].down].up = nodes_[j].up;
        --sizes_[nodes_[j].col];
      }
  }

  void uncover(int col) {
    for (int i = nodes_[col].up; i != col; i = nodes_[i].up)
      for (int j = nodes_[i].left; j != i; j = nodes_[j].left) {
        ++sizes_[nodes_[j].col];
        nodes_[nodes_[j].up].down = j;
        nodes_[nodes_[j].down].up = j;
      }
    nodes_[nodes_[col].left].right = col;
    nodes_[nodes_[col].right].left = col;
    ++alive_total_;
    alive_hole_ += hole_col_[col - 1];
  }

  bool search() {
    if (nodes_[0].right == 0) return true;
    if (alive_total_ % 6 != 0) return false;
    const int blocks_left = alive_total_ / 6;
    if (blocks_left > alive_total_ - alive_hole_) return false;
    if (5 * blocks_left < alive_hole_) return false;
    int col = -1;
    for (int c = nodes_[0].right; c != 0; c = nodes_[c].right)
      if (col < 0 || sizes_[c] < sizes_[col]) col = c;
    if (sizes_[col] == 0) return false;
    cover(col);
    for (int r = nodes_[col].down; r != col && !timed_out_; r = nodes_[r].down) {
      if ((++node_count_ & 0xfff) == 0 && std::chrono::steady_clock::now() >= deadline_)
        timed_out_ = true;
      solution_.push_back(nodes_[r].row);
      for (int j = nodes_[r].right; j != r; j = nodes_[j].right) cover(nodes_[j].col);
      if (!timed_out_ && search()) return true;
      for (int j = nodes_[r].left; j != r; j = nodes_[j].left) uncover(nodes_[j].col);
      solution_.pop_back();
    }
    uncover(col);
    return false;
  }

  int ncols_;
  std::vector<char> hole_col_;
  int alive_total_ = 0;
  int alive_hole_ = 0;
  std::vector<Node> nodes_;
  std::vector<int> sizes_;
  std::vector<int> solution_;
  long long node_count_ = 0;
  bool timed_out_ = false;
  std::chrono::steady_clock::time_point deadline_;
};

int vertex_id(const Vertex& v, int u) { return v.is_cyclic() ? v.index() : u + v.label() - 1; }

}  // namespace

SearchResult brute_force_decompose(const HoleGraph& target, std::chrono::milliseconds time_limit) {
  const int u = target.u(), m = target.u() + target.t();
  std::map<std::pair<int, int>, int> edge_col;
  std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
  for (const Edge& e : target.edges()) {
    int a = vertex_id(e.a(), u), b = vertex_id(e.b(), u);
    if (a > b) std::swap(a, b);
    edge_col.emplace(std::make_pair(a, b), static_cast<int>(edge_col.size()));
    adj[a][b] = adj[b][a] = 1;
  }

  // Rows: every sun with a < b < c (the canonical representative under the
  // triangle symmetry) whose six edges all lie in the target.
  std::vector<IntSun> rows;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      if (!adj[a][b]) continue;
      for (int c = b + 1; c < m; ++c) {
        if (!adj[a][c] || !adj[b][c]) continue;
        for (int d = 0; d < m; ++d) {
          if (!adj[a][d] || d == b || d == c) continue;
          for (int e = 0; e < m; ++e) {
            if (!adj[b][e] || e == a || e == c || e == d) continue;
            for (int f = 0; f < m; ++f) {
              if (!adj[c][f] || f == a || f == b || f == d || f == e) continue;
              rows.push_back({a, b, c, d, e, f});
            }
          }
        }
      }
    }

  std::vector<char> hole_col(edge_col.size(), 0);
  for (const auto& [e, c] : edge_col) hole_col[c] = (e.second >= u);
  // Cyclic edges are the scarce resource (each block needs one, and an
  // independent hole forces most blocks to take five hole edges), so try
  // hole-heavy suns first. Ties stay lexicographic for determinism.
  auto hole_vertices = [&](const IntSun& s) {
    int h = 0;
    for (int v : s) h += (v >= u);
    return h;
  };
  std::sort(rows.begin(), rows.end(), [&](const IntSun& x, const IntSun& y) {
    int hx = hole_vertices(x), hy = hole_vertices(y);
    return hx != hy ? hx > hy : x < y;
  });

  Dlx dlx(static_cast<int>(edge_col.size()), std::move(hole_col));
  static constexpr int kPairs[6][2] = {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}, {2, 5}};
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
    std::vector<int> cols;
    cols.reserve(6);
    for (auto [i, j] : kPairs) {
      int x = rows[r][i], y = rows[r][j];
      if (x > y) std::swap(x, y);
      cols.push_back(edge_col.at({x, y}));
    }
    dlx.add_row(r, cols);
  }

  SearchResult res;
  bool found = dlx.solve(std::chrono::steady_clock::now() + time_limit);
  res.nodes = dlx.nodes_visited();
  if (found) {
    res.status = SearchStatus::Found;
    for (int r : dlx.solution()) res.blocks.push_back(canonical_sun(rows[r]));
    std::sort(res.blocks.begin(), res.blocks.end());
  } else {
    res.status = dlx.timed_out() ? SearchStatus::Timeout : SearchStatus::Infeasible;
  }
  return res;
}

SearchResult brute_force_decompose(int complete_order, std::chrono::milliseconds time_limit) {
  return brute_force_decompose(HoleGraph::complete_with_hole(complete_order, 0), time_limit);
}

namespace {

// Produced once by brute_force_decompose on K_9, K_12 and K_13 and frozen
// here; test_oracle re-derives them to guard against drift.
const std::vector<IntSun> kBase9 = {
    {0, 1, 2, 3, 4, 5}, {0, 4, 5, 6, 2, 1}, {1, 3, 7, 6, 8, 0},
    {2, 6, 8, 7, 4, 0}, {3, 5, 6, 2, 8, 7}, {4, 7, 8, 3, 5, 1},
};
const std::vector<IntSun> kBase12 = {
    {0, 1, 2, 3, 4, 5},   {0, 4, 5, 6, 2, 1},  {0, 7, 8, 9, 1, 2},
    {1, 3, 10, 6, 2, 0},  {1, 8, 9, 11, 3, 2}, {2, 6, 11, 7, 3, 0},
    {3, 5, 7, 9, 8, 10},  {4, 6, 10, 3, 5, 2}, {4, 8, 11, 7, 6, 3},
    {5, 9, 10, 11, 6, 8}, {7, 9, 11, 6, 4, 10},
};
const std::vector<IntSun> kBase13 = {
    {0, 1, 2, 3, 4, 5},   {0, 4, 5, 6, 2, 1},   {0, 7, 8, 9, 1, 2},
    {0, 10, 11, 12, 1, 2}, {1, 3, 6, 8, 2, 4},   {1, 9, 11, 12, 2, 3},
    {2, 6, 7, 10, 5, 3},  {3, 5, 12, 8, 9, 2},  {4, 7, 11, 3, 5, 6},
    {4, 9, 12, 10, 3, 8}, {5, 8, 10, 11, 4, 3}, {6, 8, 9, 12, 11, 10},
    {7, 10, 12, 9, 6, 11},
};

}  // namespace

Decomposition base_system(int n) {
  const std::vector<IntSun>* blocks = nullptr;
  if (n == 9) blocks = &kBase9;
  else if (n == 12) blocks = &kBase12;
  else if (n == 13) blocks = &kBase13;
  else fail(Errc::UnsupportedBase, "no frozen base system of order " + std::to_string(n));
  return Decomposition{n, 0, *blocks};
}

}  // namespace sunsys
