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
#include <algorithm>
#include <array>
#include <set>

#include "common.hpp"
#include "gymv/envs/singleturn.hpp"

namespace gymv::envs {

// --- MiniSudoku -------------------------------------------------------------

namespace {

constexpr int kSudokuSide = 4;

bool sudoku_allows(const Grid<int>& g, int r, int c, int v) {
  for (int i = 0; i < kSudokuSide; ++i) {
    if (g(r, i) == v || g(i, c) == v) return false;
  }
  const int br = r / 2 * 2;
  const int bc = c / 2 * 2;
  for (int dr = 0; dr < 2; ++dr) {
    for (int dc = 0; dc < 2; ++dc) {
      if (g(br + dr, bc + dc) == v) return false;
    }
  }
  return true;
}

int count_from(Grid<int>& g, int cell, int limit) {
  if (cell == kSudokuSide * kSudokuSide) return 1;
  const int r = cell / kSudokuSide;
  const int c = cell % kSudokuSide;
  if (g(r, c) != 0) return count_from(g, cell + 1, limit);
  int total = 0;
  for (int v = 1; v <= kSudokuSide && total < limit; ++v) {
    if (!sudoku_allows(g, r, c, v)) continue;
    g(r, c) = v;
    total += count_from(g, cell + 1, limit - total);
    g(r, c) = 0;
  }
  return total;
}

bool fill_random(Grid<int>& g, int cell, Rng& rng) {
  if (cell == kSudokuSide * kSudokuSide) return true;
  const int r = cell / kSudokuSide;
  const int c = cell % kSudokuSide;
  std::array<int, kSudokuSide> digits{1, 2, 3, 4};
  rng.shuffle(std::span<int>(digits));
  for (int v : digits) {
    if (!sudoku_allows(g, r, c, v)) continue;
    g(r, c) = v;
    if (fill_random(g, cell + 1, rng)) return true;
    g(r, c) = 0;
  }
  return false;
}

}  // namespace

int MiniSudoku::count_solutions(const Grid<int>& puzzle, int limit) {
  Grid<int> g = puzzle;
  return count_from(g, 0, limit);
}

MiniSudoku::Instance MiniSudoku::generate(const Json& params, Rng& rng) {
  const int clues = param_int(params, "clue_count");
  return generate_until_valid("mini_sudoku", [&]() -> std::optional<Instance> {
    Grid<int> solution(kSudokuSide, kSudokuSide, 0);
    fill_random(solution, 0, rng);
    Grid<int> puzzle = solution;
    std::vector<int> cells(kSudokuSide * kSudokuSide);
    for (int i = 0; i < kSudokuSide * kSudokuSide; ++i) cells[static_cast<std::size_t>(i)] = i;
    rng.shuffle(cells);
    int remaining = kSudokuSide * kSudokuSide;
    for (int cell : cells) {
      if (remaining == clues) break;
      const int r = cell / kSudokuSide;
      const int c = cell % kSudokuSide;
      const int keep = puzzle(r, c);
      puzzle(r, c) = 0;
      if (count_solutions(puzzle, 2) == 1) {
        --remaining;
      } else {
        puzzle(r, c) = keep;
      }
    }
    if (remaining != clues) return std::nullopt;
    return Instance{std::move(puzzle), std::move(solution)};
  });
}

Verdict MiniSudoku::verify(const Instance& inst, std::string_view answer) {
  const ActionParse parsed = parse_action(answer, Grammar::kDigitGrid);
  const auto* a = as_action(parsed);
  if (a == nullptr || a->values.size() != kSudokuSide * kSudokuSide) return Verdict::fail("parse");
  Grid<int> g(kSudokuSide, kSudokuSide, 0);
  for (int i = 0; i < kSudokuSide * kSudokuSide; ++i) {
    const long long v = a->values[static_cast<std::size_t>(i)];
    if (v < 1 || v > kSudokuSide) return Verdict::fail("digit out of range");
    g(i / kSudokuSide, i % kSudokuSide) = static_cast<int>(v);
  }
  for (int r = 0; r < kSudokuSide; ++r) {
    for (int c = 0; c < kSudokuSide; ++c) {
      if (inst.puzzle(r, c) != 0 && inst.puzzle(r, c) != g(r, c)) return Verdict::fail("clue changed");
    }
  }
  for (int r = 0; r < kSudokuSide; ++r) {
    for (int c = 0; c < kSudokuSide; ++c) {
      const int v = g(r, c);
      g(r, c) = 0;
      const bool ok = sudoku_allows(g, r, c, v);
      g(r, c) = v;
      if (!ok) return Verdict::fail("constraint violated");
    }
  }
  return Verdict::pass();
}

std::string MiniSudoku::answer(const Instance& inst) {
  return detail::grid_text<int>(inst.solution, [](const int& v) { return static_cast<char>('0' + v); });
}

std::string MiniSudoku::question(const Instance&) {
  return "Fill the 4x4 grid so that every row, every column and every 2x2 box contains the digits "
         "1-4 exactly once. Answer with the completed grid as 4 lines of 4 digits.";
}

std::string MiniSudoku::caption(const Instance& inst) {
  return "Puzzle 4x4 (. = blank):\n" +
         detail::grid_text<int>(inst.puzzle,
                                [](const int& v) { return v ? static_cast<char>('0' + v) : '.'; });
}

RasterImage MiniSudoku::render(const Instance& inst, const StyleConfig& style) {
  return render_grid(detail::grid_cells<int>(inst.puzzle,
                                             [&](int r, int c) {
                                               const int v = inst.puzzle(r, c);
                                               return GridCell{"empty", v ? std::to_string(v) : ""};
                                             }),
                     style, GridOptions{.coordinates = false, .block = 2});
}

std::string MiniSudoku::random_answer(const Instance& inst, Rng& rng) {
  Grid<int> g = inst.puzzle;
  for (int r = 0; r < kSudokuSide; ++r) {
    for (int c = 0; c < kSudokuSide; ++c) {
      if (g(r, c) == 0) g(r, c) = static_cast<int>(rng.uniform_int(1, kSudokuSide));
    }
  }
  return detail::grid_text<int>(g, [](const int& v) { return static_cast<char>('0' + v); });
}

// --- CircuitLogic -----------------------------------------------------------

std::string_view CircuitLogic::op_name(Op op) {
  switch (op) {
    case Op::kAnd:
      return "AND";
    case Op::kOr:
      return "OR";
    case Op::kXor:
      return "XOR";
    case Op::kNot:
      return "NOT";
  }
  return "?";
}

int CircuitLogic::evaluate(const Instance& inst) {
  std::vector<int> value(inst.inputs);
  for (const auto& g : inst.gates) {
    auto at = [&](std::size_t i) { return value[static_cast<std::size_t>(g.operands[i])]; };
    int v = 0;
    switch (g.op) {
      case Op::kAnd:
        v = at(0) & at(1);
        break;
      case Op::kOr:
        v = at(0) | at(1);
        break;
      case Op::kXor:
        v = at(0) ^ at(1);
        break;
      case Op::kNot:
        v = 1 - at(0);
        break;
    }
    value.push_back(v);
  }
  return value.back();
}

CircuitLogic::Instance CircuitLogic::generate(const Json& params, Rng& rng) {
  const int input_count = param_int(params, "input_count");
  const int gate_count = param_int(params, "gate_count");
  return generate_until_valid("circuit_logic", [&]() -> std::optional<Instance> {
    Instance inst;
    for (int i = 0; i < input_count; ++i) inst.inputs.push_back(rng.bernoulli(0.5) ? 1 : 0);
    std::set<int> unused;
    for (int i = 0; i < input_count; ++i) unused.insert(i);
    for (int g = 0; g < gate_count; ++g) {
      const int available = input_count + g;
      Gate gate;
      const double pick = rng.uniform01();
      gate.op = pick < 0.15 ? Op::kNot : pick < 0.45 ? Op::kAnd : pick < 0.75 ? Op::kOr : Op::kXor;
      const int arity = gate.op == Op::kNot ? 1 : 2;
      for (int k = 0; k < arity; ++k) {
        std::vector<int> pool;
        for (int u : unused) {
          if (std::find(gate.operands.begin(), gate.operands.end(), u) == gate.operands.end()) pool.push_back(u);
        }
        if (pool.empty()) {
          for (int u = 0; u < available; ++u) {
            if (std::find(gate.operands.begin(), gate.operands.end(), u) == gate.operands.end()) pool.push_back(u);
          }
        }
        const int chosen = pool[rng.index(pool.size())];
        gate.operands.push_back(chosen);
        unused.erase(chosen);
      }
      inst.gates.push_back(std::move(gate));
      unused.insert(input_count + g);
    }
    if (unused.size() != 1) return std::nullopt;
    return inst;
  });
}

Verdict CircuitLogic::verify(const Instance& inst, std::string_view answer) {
  const ActionParse parsed = parse_action(answer, Grammar::kBit);
  const auto* a = as_action(parsed);
  if (a == nullptr) return Verdict::fail("parse");
  if (a->values.front() != evaluate(inst)) return Verdict::fail("wrong value");
  return Verdict::pass();
}

std::string CircuitLogic::answer(const Instance& inst) { return std::to_string(evaluate(inst)); }

namespace {

std::string node_name(const CircuitLogic::Instance& inst, int index) {
  const int inputs = static_cast<int>(inst.inputs.size());
  if (index < inputs) return std::string(1, static_cast<char>('A' + index));
  return "G" + std::to_string(index - inputs + 1);
}

}  // namespace

std::string CircuitLogic::question(const Instance&) {
  return "The diagram shows a Boolean circuit. Inputs (cyan) carry the shown bits; wires feed each "
         "gate from the left. What bit does the output gate (red) produce? Answer 0 or 1.";
}

std::string CircuitLogic::caption(const Instance& inst) {
  std::string out = "Inputs:";
  for (std::size_t i = 0; i < inst.inputs.size(); ++i) {
    out += " " + node_name(inst, static_cast<int>(i)) + "=" + std::to_string(inst.inputs[i]);
  }
  const int inputs = static_cast<int>(inst.inputs.size());
  for (std::size_t g = 0; g < inst.gates.size(); ++g) {
    out += "\n" + node_name(inst, inputs + static_cast<int>(g)) + " = " +
           std::string(op_name(inst.gates[g].op)) + "(";
    for (std::size_t k = 0; k < inst.gates[g].operands.size(); ++k) {
      if (k) out += ", ";
      out += node_name(inst, inst.gates[g].operands[k]);
    }
    out += ")";
  }
  out += "\nOutput: " + node_name(inst, inputs + static_cast<int>(inst.gates.size()) - 1);
  return out;
}

RasterImage CircuitLogic::render(const Instance& inst, const StyleConfig& style) {
  const int inputs = static_cast<int>(inst.inputs.size());
  const int total = inputs + static_cast<int>(inst.gates.size());
  std::vector<int> depth(static_cast<std::size_t>(total), 0);
  for (std::size_t g = 0; g < inst.gates.size(); ++g) {
    int d = 0;
    for (int op : inst.gates[g].operands) d = std::max(d, depth[static_cast<std::size_t>(op)]);
    depth[static_cast<std::size_t>(inputs) + g] = d + 1;
  }
  const int columns = *std::max_element(depth.begin(), depth.end()) + 1;
  std::vector<int> per_column(static_cast<std::size_t>(columns), 0);
  std::vector<int> slot(static_cast<std::size_t>(total), 0);
  for (int i = 0; i < total; ++i) slot[static_cast<std::size_t>(i)] = per_column[static_cast<std::size_t>(depth[static_cast<std::size_t>(i)])]++;
  const int max_rows = *std::max_element(per_column.begin(), per_column.end());

  const int col_w = std::min(110, (style.max_px - 16) / columns);
  const int box_w = col_w - 16;
  const int box_h = 38;
  const int row_h = 58;
  const int width = 16 + columns * col_w;
  const int height = std::max(160, 24 + max_rows * row_h);
  if (width > style.max_px || height > style.max_px) throw RenderError("circuit too large to render");
  Canvas canvas(width, height, style.background);

  auto box_x = [&](int i) { return 8 + depth[static_cast<std::size_t>(i)] * col_w + 8; };
  auto box_y = [&](int i) {
    const int d = depth[static_cast<std::size_t>(i)];
    const int rows = per_column[static_cast<std::size_t>(d)];
    const int top = (height - rows * row_h) / 2;
    return top + slot[static_cast<std::size_t>(i)] * row_h + (row_h - box_h) / 2;
  };
  const Rgb wire{60, 60, 60};
  for (std::size_t g = 0; g < inst.gates.size(); ++g) {
    const int self = inputs + static_cast<int>(g);
    const auto& ops = inst.gates[g].operands;
    for (std::size_t k = 0; k < ops.size(); ++k) {
      const int src = ops[k];
      const int sy = box_y(src) + box_h / 2;
      const int ty = box_y(self) + (ops.size() == 1 ? box_h / 2 : (k == 0 ? box_h / 4 : 3 * box_h / 4));
      canvas.line(box_x(src) + box_w, sy, box_x(self), ty, wire, 2);
    }
  }
  for (int i = 0; i < total; ++i) {
    const int x = box_x(i);
    const int y = box_y(i);
    std::string role = "ice";
    std::string top = node_name(inst, i);
    std::string bottom;
    if (i < inputs) {
      role = "start";
      top += "=" + std::to_string(inst.inputs[static_cast<std::size_t>(i)]);
    } else {
      bottom = std::string(op_name(inst.gates[static_cast<std::size_t>(i - inputs)].op));
      if (i == total - 1) role = "target";
    }
    canvas.fill_rect(x, y, box_w, box_h, style.color(role));
    canvas.stroke_rect(x, y, box_w, box_h, style.ink, 2);
    if (bottom.empty()) {
      canvas.text_centered(x + box_w / 2, y + box_h / 2, top, style.ink, style.font_scale);
    } else {
      canvas.text_centered(x + box_w / 2, y + box_h / 4 + 1, top, style.ink, style.font_scale);
      canvas.text_centered(x + box_w / 2, y + 3 * box_h / 4, bottom, style.ink, style.font_scale);
    }
  }
  return std::move(canvas).image();
}

std::string CircuitLogic::random_answer(const Instance&, Rng& rng) {
  return rng.bernoulli(0.5) ? "1" : "0";
}

// --- NQueens ----------------------------------------------------------------

namespace {

bool queens_attack(std::pair<int, int> a, std::pair<int, int> b) {
  return a.first == b.first || a.second == b.second ||
         std::abs(a.first - b.first) == std::abs(a.second - b.second);
}

bool place_rows(int row, int n, std::vector<std::pair<int, int>>& placed,
                const std::vector<int>& fixed_col, Rng* rng) {
  if (row == n) return true;
  std::vector<int> cols;
  if (fixed_col[static_cast<std::size_t>(row)] >= 0) {
    cols.push_back(fixed_col[static_cast<std::size_t>(row)]);
  } else {
    for (int c = 0; c < n; ++c) cols.push_back(c);
    if (rng) rng->shuffle(cols);
  }
  for (int c : cols) {
    const std::pair<int, int> q{row, c};
    if (std::any_of(placed.begin(), placed.end(), [&](auto p) { return queens_attack(p, q); })) continue;
    placed.push_back(q);
    if (place_rows(row + 1, n, placed, fixed_col, rng)) return true;
    placed.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::pair<int, int>>> NQueens::complete(const Instance& inst) {
  std::vector<int> fixed(static_cast<std::size_t>(inst.n), -1);
  for (auto [r, c] : inst.preplaced) fixed[static_cast<std::size_t>(r)] = c;
  std::vector<std::pair<int, int>> placed;
  if (!place_rows(0, inst.n, placed, fixed, nullptr)) return std::nullopt;
  return placed;
}

NQueens::Instance NQueens::generate(const Json& params, Rng& rng) {
  const int n = param_int(params, "board_size");
  const int k = param_int(params, "preplaced");
  std::vector<std::pair<int, int>> solution;
  place_rows(0, n, solution, std::vector<int>(static_cast<std::size_t>(n), -1), &rng);
  rng.shuffle(solution);
  Instance inst{n, {solution.begin(), solution.begin() + k}};
  std::sort(inst.preplaced.begin(), inst.preplaced.end());
  return inst;
}

Verdict NQueens::verify(const Instance& inst, std::string_view answer) {
  const ActionParse parsed = parse_action(answer, Grammar::kPairSequence);
  const auto* a = as_action(parsed);
  if (a == nullptr) return Verdict::fail("parse");
  std::set<std::pair<int, int>> queens;
  for (auto [r, c] : a->pairs()) {
    if (r < 0 || c < 0 || r >= inst.n || c >= inst.n) return Verdict::fail("out of bounds");
    queens.emplace(static_cast<int>(r), static_cast<int>(c));
  }
  if (static_cast<int>(queens.size()) != inst.n) return Verdict::fail("wrong queen count");
  for (const auto& p : inst.preplaced) {
    if (!queens.count(p)) return Verdict::fail("missing pre-placed queen");
  }
  for (auto i = queens.begin(); i != queens.end(); ++i) {
    for (auto j = std::next(i); j != queens.end(); ++j) {
      if (queens_attack(*i, *j)) return Verdict::fail("queens attack");
    }
  }
  return Verdict::pass();
}

std::string NQueens::answer(const Instance& inst) { return detail::pairs_text(*complete(inst)); }

std::string NQueens::question(const Instance& inst) {
  return "Place " + std::to_string(inst.n) + " queens on the " + detail::size_text(inst.n, inst.n) +
         " board so that no two attack each other, keeping the pre-placed queens (Q). Answer with "
         "all queen positions as (row,col) pairs, 0-indexed, e.g. (0,1) (1,3) ...";
}

std::string NQueens::caption(const Instance& inst) {
  Grid<int> g(inst.n, inst.n, 0);
  for (auto [r, c] : inst.preplaced) g(r, c) = 1;
  return "Board " + detail::size_text(inst.n, inst.n) + " (Q = pre-placed queen, . = empty):\n" +
         detail::grid_text<int>(g, [](const int& v) { return v ? 'Q' : '.'; });
}

RasterImage NQueens::render(const Instance& inst, const StyleConfig& style) {
  Grid<int> g(inst.n, inst.n, 0);
  for (auto [r, c] : inst.preplaced) g(r, c) = 1;
  return render_grid(detail::grid_cells<int>(g,
                                             [&](int r, int c) {
                                               if (g(r, c)) return GridCell{"goal", "Q"};
                                               return GridCell{(r + c) % 2 ? "floor" : "empty", ""};
                                             }),
                     style, GridOptions{.coordinates = true});
}

std::string NQueens::random_answer(const Instance& inst, Rng& rng) {
  std::vector<std::pair<int, int>> queens = inst.preplaced;
  for (int r = 0; r < inst.n; ++r) {
    if (std::any_of(inst.preplaced.begin(), inst.preplaced.end(), [&](auto p) { return p.first == r; })) continue;
    queens.emplace_back(r, static_cast<int>(rng.uniform_int(0, inst.n - 1)));
  }
  std::sort(queens.begin(), queens.end());
  return detail::pairs_text(queens);
}

}  // namespace gymv::envs
