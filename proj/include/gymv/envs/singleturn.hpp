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

// Single-turn task catalog. Each task is a traits struct consumed by
// SingleTurnGame<Task>: generate -> render/caption/question -> verify.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gymv/game.hpp"
#include "gymv/grid.hpp"

namespace gymv::envs {

// ---------------------------------------------------------------------------
// Algorithmic

struct RottenOranges {
  enum Cell : int { kEmpty = 0, kFresh = 1, kRotten = 2 };
  struct Instance {
    Grid<int> grid;
  };
  /// Minutes until no fresh orange remains, or -1 if some orange never rots.
  static int solve(const Grid<int>& grid);

  static Instance generate(const Json& params, Rng& rng);
  static Verdict verify(const Instance& inst, std::string_view answer);
  static std::string answer(const Instance& inst);
  static std::string question(const Instance& inst);
  static std::string caption(const Instance& inst);
  static RasterImage render(const Instance& inst, const StyleConfig& style);
  static std::string random_answer(const Instance& inst, Rng& rng);
};

struct GridBfs {
  enum Cell : int { kFloor = 0, kWall = 1 };
  struct Instance {
    Grid<int> grid;
    std::pair<int, int> start;
    std::pair<int, int> target;
  };
  /// Fewest 4-directional moves from start to target; -1 if unreachable.
  static int solve(const Instance& inst);

  static Instance generate(const Json& params, Rng& rng);
  static Verdict verify(const Instance& inst, std::string_view answer);
  static std::string answer(const Instance& inst);
  static std::string question(const Instance& inst);
  static std::string caption(const Instance& inst);
  static RasterImage render(const Instance& inst, const StyleConfig& style);
  static std::string random_answer(const Instance& inst, Rng& rng);
};

struct BinaryMatrix {
  struct Instance {
    Grid<int> grid;  // 0/1
  };
  /// Number of 4-connected components of 1-cells.
  static int solve(const Grid<int>& grid);

  static Instance generate(const Json& params, Rng& rng);
  static Verdict verify(const Instance& inst, std::string_view answer);
  static std::string answer(const Instance& inst);
  static std::string question(const Instance& inst);
  static std::string caption(const Instance& inst);
  static RasterImage render(const Instance& inst, const StyleConfig& style);
  static std::string random_answer(const Instance& inst, Rng& rng);
};

// ---------------------------------------------------------------------------
// Geometry

struct LargestIsland {
  struct Instance {
    Grid<int> grid;  // 1 = land, 0 = water
  };
  /// Largest 4-connected land area.
  static int solve(const Grid<int>& grid);

  static Instance generate(const Json& params, Rng& rng);
  static Verdict verify(const Instance& inst, std::string_view answer);
  static std::string answer(const Instance& inst);
  static std::string question(const Instance& inst);
  static std::string caption(const Instance& inst);
  static RasterImage render(const Instance& inst, const StyleConfig& style);
  static std::string random_answer(const Instance& inst, Rng& rng);
};

struct VisibleLine {
  struct Line {
    int slope;
    int intercept;
  };
  struct Instance {
    std::vector<Line> lines;
  };
  /// 1-based indices of lines on the upper envelope, ascending.
  static std::vector<int> solve(const std::vector<Line>& lines);
  /// True when some line touches the envelope at a single point only, or
  /// duplicates another line.
  static bool degenerate(const std::vector<Line>& lines);
  static Viewport viewport(const std::vector<Line>& lines);

  static Instance generate(const Json& params, Rng& rng);
  static Verdict verify(const Instance& inst, std::string_view answer);
  static std::string answer(const Instance& inst);
  static std::string question(const Instance& inst);
  static std::string caption(const Instance& inst);
  static RasterImage render(const Instance& inst, const StyleConfig& style);
  static std::string random_answer(const Instance& inst, Rng& rng);
};

struct ConvexHullCount {
  struct Instance {
    std::vector<std::pair<int, int>> points;
  };
  /// Hull vertices in counter-clockwise order (collinear points excluded).
  static std::vector<std::pair<int, int>> hull(std::vector<std::pair<int, int>> points);

  static Instance generate(const Json& params, Rng& rng);
  static Verdict verify(const Instance& inst, std::string_view answer);
  static std::string answer(const Instance& inst);
  static std::string question(const Instance& inst);
  static std::string caption(const Instance& inst);
  static RasterImage render(const Instance& inst, const StyleConfig& style);
  static std::string random_answer(const Instance& inst, Rng& rng);
};

// ---------------------------------------------------------------------------
// Graphs

struct WeightedEdge {
  int u;
  int v;
  int weight;
};

struct ShortestPath {
  struct Instance {
    int nodes = 0;
    std::vector<WeightedEdge> edges;
    int source = 0;
    int target = 0;
  };
  /// Dijkstra: (distance, one optimal node sequence).
  static std::pair<int, std::vector<int>> solve(const Instance& inst);

  static Instance generate(const Json& params, Rng& rng);
  static Verdict verify(const Instance& inst, std::string_view answer);
  static std::string answer(const Instance& inst);
  static std::string question(const Instance& inst);
  static std::string caption(const Instance& inst);
  static RasterImage render(const Instance& inst, const StyleConfig& style);
  static std::string random_answer(const Instance& inst, Rng& rng);
};

struct LongestPathLen {
  struct Instance {
    int nodes = 0;
    std::vector<std::pair<int, int>> edges;
  };
  /// Edge count of the longest simple path (subset DP).
  static int solve(const Instance& inst);

  static Instance generate(const Json& params, Rng& rng);
  static Verdict verify(const Instance& inst, std::string_view answer);
  static std::string answer(const Instance& inst);
  static std::string question(const Instance& inst);
  static std::string caption(const Instance& inst);
  static RasterImage render(const Instance& inst, const StyleConfig& style);
  static std::string random_answer(const Instance& inst, Rng& rng);
};

// ---------------------------------------------------------------------------
// Logic

struct MiniSudoku {
  struct Instance {
    Grid<int> puzzle;    // 0 = blank
    Grid<int> solution;
  };
  /// Counts completions of `puzzle`, stopping at `limit`.
  static int count_solutions(const Grid<int>& puzzle, int limit = 2);

  static Instance generate(const Json& params, Rng& rng);
  static Verdict verify(const Instance& inst, std::string_view answer);
  static std::string answer(const Instance& inst);
  static std::string question(const Instance& inst);
  static std::string caption(const Instance& inst);
  static RasterImage render(const Instance& inst, const StyleConfig& style);
  static std::string random_answer(const Instance& inst, Rng& rng);
};

struct CircuitLogic {
  enum class Op { kAnd, kOr, kXor, kNot };
  struct Gate {
    Op op;
    /// Operand indices: < input_count are inputs, otherwise gate (index - input_count).
    std::vector<int> operands;
  };
  struct Instance {
    std::vector<int> inputs;  // bits
    std::vector<Gate> gates;  // topologically ordered; last gate is the output
  };
  static int evaluate(const Instance& inst);
  static std::string_view op_name(Op op);

  static Instance generate(const Json& params, Rng& rng);
  static Verdict verify(const Instance& inst, std::string_view answer);
  static std::string answer(const Instance& inst);
  static std::string question(const Instance& inst);
  static std::string caption(const Instance& inst);
  static RasterImage render(const Instance& inst, const StyleConfig& style);
  static std::string random_answer(const Instance& inst, Rng& rng);
};

struct NQueens {
  struct Instance {
    int n = 0;
    std::vector<std::pair<int, int>> preplaced;  // (row, col)
  };
  /// A full non-attacking placement extending the pre-placed queens.
  static std::optional<std::vector<std::pair<int, int>>> complete(const Instance& inst);

  static Instance generate(const Json& params, Rng& rng);
  static Verdict verify(const Instance& inst, std::string_view answer);
  static std::string answer(const Instance& inst);
  static std::string question(const Instance& inst);
  static std::string caption(const Instance& inst);
  static RasterImage render(const Instance& inst, const StyleConfig& style);
  static std::string random_answer(const Instance& inst, Rng& rng);
};

// ---------------------------------------------------------------------------
// Puzzles

struct TowerOfHanoi {
  struct Instance {
    int discs = 3;
  };
  /// Optimal 2^n - 1 move sequence from peg 0 to peg 2.
  static std::vector<std::pair<int, int>> solve(int discs);

  static Instance generate(const Json& params, Rng& rng);
  static Verdict verify(const Instance& inst, std::string_view answer);
  static std::string answer(const Instance& inst);
  static std::string question(const Instance& inst);
  static std::string caption(const Instance& inst);
  static RasterImage render(const Instance& inst, const StyleConfig& style);
  static std::string random_answer(const Instance& inst, Rng& rng);
};

}  // namespace gymv::envs
