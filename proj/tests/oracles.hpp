// Copyright 2026 The gymv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

// Brute-force reference solvers used only by tests. They deliberately avoid
// the library's solvers and use slower, more obvious algorithms.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gymv/envs/singleturn.hpp"
#include "gymv/registry.hpp"

namespace gymv::test {

/// Instance of single-turn task `Task` as the env would generate it.
template <typename Task>
typename Task::Instance make_instance_of(const std::string& env_id, int level, std::uint64_t seed) {
  const auto entry = Registry::builtin().at(env_id);
  Json params = entry.descriptor.difficulty.at(level);
  for (const auto& [k, v] : entry.descriptor.rewards.items()) params[k] = v;
  Rng rng(Seed{seed}, kDynamicsStream);
  return Task::generate(params, rng);
}

/// Same, with some difficulty parameters replaced.
template <typename Task>
typename Task::Instance make_instance_with(const std::string& env_id, int level, std::uint64_t seed,
                                           const Json& overrides) {
  const auto entry = Registry::builtin().at(env_id);
  Json params = entry.descriptor.difficulty.at(level);
  for (const auto& [k, v] : entry.descriptor.rewards.items()) params[k] = v;
  for (const auto& [k, v] : overrides.items()) params[k] = v;
  Rng rng(Seed{seed}, kDynamicsStream);
  return Task::generate(params, rng);
}

namespace oracle {

// Disjoint-set union.
struct Dsu {
  std::vector<int> parent, size;
  explicit Dsu(int n) : parent(static_cast<std::size_t>(n)), size(static_cast<std::size_t>(n), 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent[static_cast<std::size_t>(b)] = a;
    size[static_cast<std::size_t>(a)] += size[static_cast<std::size_t>(b)];
  }
};

// Component sizes of cells equal to `value`, via union-find.
inline std::vector<int> components(const Grid<int>& g, int value) {
  const int rows = g.rows(), cols = g.cols();
  Dsu dsu(rows * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (g(r, c) != value) continue;
      if (r + 1 < rows && g(r + 1, c) == value) dsu.unite(r * cols + c, (r + 1) * cols + c);
      if (c + 1 < cols && g(r, c + 1) == value) dsu.unite(r * cols + c, r * cols + c + 1);
    }
  }
  std::vector<int> out;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int i = r * cols + c;
      if (g(r, c) == value && dsu.find(i) == i) out.push_back(dsu.size[static_cast<std::size_t>(i)]);
    }
  }
  return out;
}

inline int island_count(const Grid<int>& g) { return static_cast<int>(components(g, 1).size()); }

inline int largest_island(const Grid<int>& g) {
  const auto s = components(g, 1);
  return s.empty() ? 0 : *std::max_element(s.begin(), s.end());
}

// Minute-by-minute simulation.
inline int rotting_minutes(Grid<int> g) {
  for (int minute = 0;; ++minute) {
    bool fresh = false;
    Grid<int> next = g;
    bool changed = false;
    for (int r = 0; r < g.rows(); ++r) {
      for (int c = 0; c < g.cols(); ++c) {
        if (g(r, c) != 1) continue;
        fresh = true;
        const bool touched = (r > 0 && g(r - 1, c) == 2) || (r + 1 < g.rows() && g(r + 1, c) == 2) ||
                             (c > 0 && g(r, c - 1) == 2) || (c + 1 < g.cols() && g(r, c + 1) == 2);
        if (touched) {
          next(r, c) = 2;
          changed = true;
        }
      }
    }
    if (!fresh) return minute;
    if (!changed) return -1;
    g = next;
  }
}

// Relaxation to a fixpoint instead of a queue.
inline int grid_distance(const Grid<int>& walls, std::pair<int, int> s, std::pair<int, int> t) {
  const int inf = 1 << 28;
  Grid<int> d(walls.rows(), walls.cols(), inf);
  d(s.first, s.second) = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (int r = 0; r < walls.rows(); ++r) {
      for (int c = 0; c < walls.cols(); ++c) {
        if (walls(r, c) == 1) continue;
        int best = d(r, c);
        if (r > 0) best = std::min(best, d(r - 1, c) + 1);
        if (r + 1 < walls.rows()) best = std::min(best, d(r + 1, c) + 1);
        if (c > 0) best = std::min(best, d(r, c - 1) + 1);
        if (c + 1 < walls.cols()) best = std::min(best, d(r, c + 1) + 1);
        if (best < d(r, c)) {
          d(r, c) = best;
          changed = true;
        }
      }
    }
  }
  const int v = d(t.first, t.second);
  return v >= inf ? -1 : v;
}

// Lines visible from above: sample every gap between pairwise crossings with
// exact integer arithmetic (x scaled by 2*L, L = lcm of possible denominators).
inline std::vector<int> visible_lines(const std::vector<envs::VisibleLine::Line>& lines) {
  long long lcm = 1;
  for (long long d = 1; d <= 40; ++d) lcm = std::lcm(lcm, d);
  // lcm(1..40) overflows nothing: ~5.3e15, kept below the products used.
  std::set<long long> xs;  // crossing abscissae scaled by 2*lcm
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const long long da = lines[i].slope - lines[j].slope;
      if (da == 0) continue;
      const long long db = lines[j].intercept - lines[i].intercept;
      xs.insert(2 * lcm / da * db);
    }
  }
  std::vector<long long> probes;
  if (xs.empty()) {
    probes.push_back(0);
  } else {
    probes.push_back(*xs.begin() - 2);
    for (auto it = xs.begin(); std::next(it) != xs.end(); ++it) probes.push_back((*it + *std::next(it)) / 2);
    probes.push_back(*xs.rbegin() + 2);
  }
  std::set<int> seen;
  for (long long x : probes) {
    // y * 2*lcm, exact in __int128
    std::vector<__int128> y;
    for (const auto& l : lines) y.push_back(static_cast<__int128>(l.slope) * x + static_cast<__int128>(l.intercept) * 2 * lcm);
    const __int128 best = *std::max_element(y.begin(), y.end());
    if (std::count(y.begin(), y.end(), best) == 1) {
      seen.insert(static_cast<int>(std::find(y.begin(), y.end(), best) - y.begin()) + 1);
    }
  }
  return {seen.begin(), seen.end()};
}

inline long long cross3(std::pair<int, int> o, std::pair<int, int> a, std::pair<int, int> b) {
  return static_cast<long long>(a.first - o.first) * (b.second - o.second) -
         static_cast<long long>(a.second - o.second) * (b.first - o.first);
}

inline bool on_segment(std::pair<int, int> p, std::pair<int, int> a, std::pair<int, int> b) {
  return cross3(a, b, p) == 0 && std::min(a.first, b.first) <= p.first && p.first <= std::max(a.first, b.first) &&
         std::min(a.second, b.second) <= p.second && p.second <= std::max(a.second, b.second);
}

inline bool in_closed_triangle(std::pair<int, int> p, std::pair<int, int> a, std::pair<int, int> b,
                               std::pair<int, int> c) {
  if (cross3(a, b, c) == 0) return on_segment(p, a, b) || on_segment(p, b, c) || on_segment(p, a, c);
  const long long d1 = cross3(a, b, p), d2 = cross3(b, c, p), d3 = cross3(c, a, p);
  const bool neg = d1 < 0 || d2 < 0 || d3 < 0;
  const bool pos = d1 > 0 || d2 > 0 || d3 > 0;
  return !(neg && pos);
}

// A point is a hull vertex unless some triangle (or segment) of other points covers it.
inline int hull_vertex_count(const std::vector<std::pair<int, int>>& pts) {
  const std::size_t n = pts.size();
  int count = 0;
  for (std::size_t p = 0; p < n; ++p) {
    bool covered = false;
    for (std::size_t a = 0; a < n && !covered; ++a) {
      if (a == p) continue;
      if (pts[a] == pts[p]) covered = true;
      for (std::size_t b = a + 1; b < n && !covered; ++b) {
        if (b == p) continue;
        if (on_segment(pts[p], pts[a], pts[b])) covered = true;
        for (std::size_t c = b + 1; c < n && !covered; ++c) {
          if (c == p) continue;
          covered = in_closed_triangle(pts[p], pts[a], pts[b], pts[c]);
        }
      }
    }
    count += !covered;
  }
  return n < 3 ? static_cast<int>(n) : count;
}

// Floyd-Warshall all-pairs distances.
inline std::vector<std::vector<long long>> all_pairs(const envs::ShortestPath::Instance& g) {
  const long long inf = 1LL << 40;
  const auto n = static_cast<std::size_t>(g.nodes);
  std::vector<std::vector<long long>> d(n, std::vector<long long>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& e : g.edges) {
    const auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
    d[u][v] = std::min<long long>(d[u][v], e.weight);
    d[v][u] = std::min<long long>(d[v][u], e.weight);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// A node sequence is correct iff it walks edges from source to target with optimal weight.
inline bool shortest_path_ok(const envs::ShortestPath::Instance& g, const std::vector<int>& seq) {
  if (seq.empty() || seq.front() != g.source || seq.back() != g.target) return false;
  long long total = 0;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    std::optional<int> w;
    for (const auto& e : g.edges) {
      if ((e.u == seq[i] && e.v == seq[i + 1]) || (e.v == seq[i] && e.u == seq[i + 1])) {
        w = w ? std::min(*w, e.weight) : e.weight;
      }
    }
    if (!w) return false;
    total += *w;
  }
  return total == all_pairs(g)[static_cast<std::size_t>(g.source)][static_cast<std::size_t>(g.target)];
}

// Exhaustive DFS over simple paths.
inline int longest_simple_path(const envs::LongestPathLen::Instance& g) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.nodes));
  for (auto [u, v] : g.edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  int best = 0;
  std::vector<bool> used(static_cast<std::size_t>(g.nodes), false);
  auto dfs = [&](auto&& self, int node, int len) -> void {
    best = std::max(best, len);
    used[static_cast<std::size_t>(node)] = true;
    for (int nb : adj[static_cast<std::size_t>(node)]) {
      if (!used[static_cast<std::size_t>(nb)]) self(self, nb, len + 1);
    }
    used[static_cast<std::size_t>(node)] = false;
  };
  for (int s = 0; s < g.nodes; ++s) dfs(dfs, s, 0);
  return best;
}

// All 288 valid 4x4 grids, enumerated by permutations of rows.
inline const std::vector<std::array<int, 16>>& all_sudoku_grids() {
  static const std::vector<std::array<int, 16>> grids = [] {
    std::vector<std::array<int, 4>> perms;
    std::array<int, 4> p{1, 2, 3, 4};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::array<int, 16>> out;
    for (const auto& a : perms)
      for (const auto& b : perms)
        for (const auto& c : perms)
          for (const auto& d : perms) {
            std::array<int, 16> g{};
            for (int i = 0; i < 4; ++i) {
              g[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)];
              g[static_cast<std::size_t>(4 + i)] = b[static_cast<std::size_t>(i)];
              g[static_cast<std::size_t>(8 + i)] = c[static_cast<std::size_t>(i)];
              g[static_cast<std::size_t>(12 + i)] = d[static_cast<std::size_t>(i)];
            }
            bool ok = true;
            for (int col = 0; col < 4 && ok; ++col) {
              std::set<int> s;
              for (int r = 0; r < 4; ++r) s.insert(g[static_cast<std::size_t>(r * 4 + col)]);
              ok = s.size() == 4;
            }
            for (int box = 0; box < 4 && ok; ++box) {
              std::set<int> s;
              const int r0 = (box / 2) * 2, c0 = (box % 2) * 2;
              for (int r = r0; r < r0 + 2; ++r)
                for (int cc = c0; cc < c0 + 2; ++cc) s.insert(g[static_cast<std::size_t>(r * 4 + cc)]);
              ok = s.size() == 4;
            }
            if (ok) out.push_back(g);
          }
    return out;
  }();
  return grids;
}

inline std::vector<std::array<int, 16>> sudoku_completions(const Grid<int>& puzzle) {
  std::vector<std::array<int, 16>> out;
  for (const auto& g : all_sudoku_grids()) {
    bool ok = true;
    for (int i = 0; i < 16 && ok; ++i) {
      const int clue = puzzle(i / 4, i % 4);
      ok = clue == 0 || clue == g[static_cast<std::size_t>(i)];
    }
    if (ok) out.push_back(g);
  }
  return out;
}

// Recursive evaluation from the output gate down.
inline int circuit_value(const envs::CircuitLogic::Instance& inst, int node) {
  const int inputs = static_cast<int>(inst.inputs.size());
  if (node < inputs) return inst.inputs[static_cast<std::size_t>(node)];
  const auto& gate = inst.gates[static_cast<std::size_t>(node - inputs)];
  std::vector<int> v;
  for (int o : gate.operands) v.push_back(circuit_value(inst, o));
  using Op = envs::CircuitLogic::Op;
  switch (gate.op) {
    case Op::kNot: return 1 - v.at(0);
    case Op::kAnd: return v.at(0) & v.at(1);
    case Op::kOr: return v.at(0) | v.at(1);
    case Op::kXor: return v.at(0) ^ v.at(1);
  }
  return -1;
}

inline int circuit_output(const envs::CircuitLogic::Instance& inst) {
  return circuit_value(inst, static_cast<int>(inst.inputs.size() + inst.gates.size()) - 1);
}

inline bool queens_ok(const envs::NQueens::Instance& inst, const std::vector<std::pair<int, int>>& queens) {
  std::set<std::pair<int, int>> unique(queens.begin(), queens.end());
  if (static_cast<int>(unique.size()) != inst.n) return false;
  std::vector<int> rows(static_cast<std::size_t>(inst.n)), cols(static_cast<std::size_t>(inst.n)),
      d1(static_cast<std::size_t>(2 * inst.n)), d2(static_cast<std::size_t>(2 * inst.n));
  for (auto [r, c] : unique) {
    if (r < 0 || c < 0 || r >= inst.n || c >= inst.n) return false;
    if (++rows[static_cast<std::size_t>(r)] > 1 || ++cols[static_cast<std::size_t>(c)] > 1 ||
        ++d1[static_cast<std::size_t>(r + c)] > 1 || ++d2[static_cast<std::size_t>(r - c + inst.n)] > 1) {
      return false;
    }
  }
  for (const auto& p : inst.preplaced) {
    if (!unique.count(p)) return false;
  }
  return true;
}

// Row-by-row search honouring pre-placed queens.
inline std::optional<std::vector<std::pair<int, int>>> queens_solution(const envs::NQueens::Instance& inst) {
  std::vector<int> col_of_row(static_cast<std::size_t>(inst.n), -1);
  for (auto [r, c] : inst.preplaced) col_of_row[static_cast<std::size_t>(r)] = c;
  std::vector<std::pair<int, int>> placed;
  auto safe = [&](int r, int c) {
    for (auto [pr, pc] : placed) {
      if (pr == r || pc == c || std::abs(pr - r) == std::abs(pc - c)) return false;
    }
    return true;
  };
  auto go = [&](auto&& self, int r) -> bool {
    if (r == inst.n) return true;
    const int fixed = col_of_row[static_cast<std::size_t>(r)];
    for (int c = 0; c < inst.n; ++c) {
      if (fixed >= 0 && c != fixed) continue;
      if (!safe(r, c)) continue;
      placed.emplace_back(r, c);
      if (self(self, r + 1)) return true;
      placed.pop_back();
    }
    return false;
  };
  if (!go(go, 0)) return std::nullopt;
  return placed;
}

// State as peg-of-disc; disc 0 is the smallest.
inline bool hanoi_ok(int discs, const std::vector<std::pair<int, int>>& moves) {
  std::vector<int> peg(static_cast<std::size_t>(discs), 0);
  for (auto [from, to] : moves) {
    if (from < 0 || from > 2 || to < 0 || to > 2 || from == to) return false;
    int top_from = -1, top_to = -1;
    for (int d = discs - 1; d >= 0; --d) {
      if (peg[static_cast<std::size_t>(d)] == from) top_from = d;
      if (peg[static_cast<std::size_t>(d)] == to) top_to = d;
    }
    if (top_from < 0) return false;
    if (top_to >= 0 && top_to < top_from) return false;
    peg[static_cast<std::size_t>(top_from)] = to;
  }
  return std::all_of(peg.begin(), peg.end(), [](int p) { return p == 2; });
}

// --- multi-turn helpers ----------------------------------------------------

/// Independent sokoban simulator over caption rows (# _ . $ * @ +).
struct SokobanBoard {
  std::vector<std::string> rows;  // static layer: '#', '.', '_'
  std::set<std::pair<int, int>> boxes;
  std::pair<int, int> player{0, 0};

  static SokobanBoard parse(const std::vector<std::string>& text) {
    SokobanBoard b;
    for (std::size_t r = 0; r < text.size(); ++r) {
      std::string row = text[r];
      for (std::size_t c = 0; c < row.size(); ++c) {
        const char ch = row[c];
        const std::pair<int, int> at{static_cast<int>(r), static_cast<int>(c)};
        if (ch == '$' || ch == '*') b.boxes.insert(at);
        if (ch == '@' || ch == '+') b.player = at;
        row[c] = ch == '#' ? '#' : (ch == '.' || ch == '*' || ch == '+') ? '.' : '_';
      }
      b.rows.push_back(row);
    }
    return b;
  }

  bool wall(std::pair<int, int> p) const {
    return p.first < 0 || p.first >= static_cast<int>(rows.size()) || p.second < 0 ||
           p.second >= static_cast<int>(rows[static_cast<std::size_t>(p.first)].size()) ||
           rows[static_cast<std::size_t>(p.first)][static_cast<std::size_t>(p.second)] == '#';
  }

  void move(const std::string& dir) {
    const int dr = dir == "up" ? -1 : dir == "down" ? 1 : 0;
    const int dc = dir == "left" ? -1 : dir == "right" ? 1 : 0;
    const std::pair<int, int> next{player.first + dr, player.second + dc};
    if (wall(next)) return;
    if (boxes.count(next)) {
      const std::pair<int, int> beyond{next.first + dr, next.second + dc};
      if (wall(beyond) || boxes.count(beyond)) return;
      boxes.erase(next);
      boxes.insert(beyond);
    }
    player = next;
  }

  bool solved() const {
    for (auto [r, c] : boxes) {
      if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != '.') return false;
    }
    return true;
  }
};

/// BFS reachability over caption rows (S start / P player, G goal, H hole).
inline bool lake_reachable(const std::vector<std::string>& rows) {
  std::pair<int, int> start{-1, -1};
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] == 'P') start = {static_cast<int>(r), static_cast<int>(c)};
    }
  }
  if (start.first < 0) return false;
  std::set<std::pair<int, int>> seen{start};
  std::vector<std::pair<int, int>> stack{start};
  while (!stack.empty()) {
    auto [r, c] = stack.back();
    stack.pop_back();
    if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == 'G') return true;
    const std::array<std::pair<int, int>, 4> nbrs{{{r - 1, c}, {r + 1, c}, {r, c - 1}, {r, c + 1}}};
    for (auto nb : nbrs) {
      if (nb.first < 0 || nb.second < 0 || nb.first >= static_cast<int>(rows.size()) ||
          nb.second >= static_cast<int>(rows[static_cast<std::size_t>(nb.first)].size())) {
        continue;
      }
      if (rows[static_cast<std::size_t>(nb.first)][static_cast<std::size_t>(nb.second)] == 'H') continue;
      if (seen.insert(nb).second) stack.push_back(nb);
    }
  }
  return false;
}

/// Rows of a caption after its first line.
inline std::vector<std::string> caption_rows(const std::string& caption) {
  std::vector<std::string> rows;
  std::size_t pos = caption.find('\n');
  while (pos != std::string::npos) {
    const std::size_t next = caption.find('\n', pos + 1);
    rows.push_back(caption.substr(pos + 1, next == std::string::npos ? std::string::npos : next - pos - 1));
    pos = next;
  }
  return rows;
}

}  // namespace oracle
}  // namespace gymv::test
