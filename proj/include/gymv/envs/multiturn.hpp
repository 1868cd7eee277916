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

// Stateful games with per-step rewards. Constructors taking explicit boards
// exist so tests can script exact positions; generate() is the seeded path.

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gymv/game.hpp"
#include "gymv/grid.hpp"

namespace gymv::envs {

using Cell = std::pair<int, int>;

inline constexpr std::array<std::string_view, 4> kDirectionNames{"up", "down", "left", "right"};

/// Index into kDirRow/kDirCol for a parsed direction action, or nullopt.
std::optional<int> direction_index(std::string_view action);

struct SokobanRewards {
  double box_on_goal = 1.0;
  double box_off_goal = -1.0;
  double solve = 10.0;
};

class Sokoban final : public Game {
 public:
  using Rewards = SokobanRewards;

  /// Rows use '#' wall, '_' floor, '.' goal, '$' box, '*' box on goal,
  /// '@' player, '+' player on goal.
  static Sokoban from_text(const std::vector<std::string>& rows, Rewards rewards = {});
  static std::unique_ptr<Sokoban> generate(const Json& params, Rng& rng);

  RasterImage render(const std::string& agent, const StyleConfig& style, Rng& rng) const override;
  std::string question(const std::string& agent) const override;
  std::string caption(const std::string& agent) const override;
  GameStep step(const AgentMap<std::string>& actions, Rng& dynamics) override;
  bool over() const override { return solved(); }
  std::string oracle_action(const std::string& agent) const override;
  std::string random_action(const std::string& agent, Rng& rng) const override;
  std::string state_digest() const override;

  bool solved() const;
  const std::set<Cell>& boxes() const { return boxes_; }
  const std::set<Cell>& goals() const { return goals_; }
  Cell player() const { return player_; }
  bool wall(int r, int c) const { return walls_(r, c) != 0; }
  int rows() const { return walls_.rows(); }
  int cols() const { return walls_.cols(); }
  /// Generator's forward plan (directions); empty for hand-built boards.
  const std::vector<int>& plan() const { return plan_; }
  /// Shortest solution by breadth-first search over (player, boxes), capped
  /// at `max_states`; nullopt if none found.
  std::optional<std::vector<int>> solve(std::size_t max_states = 400000) const;
  std::vector<std::string> text_rows() const;

 private:
  Sokoban() = default;

  Grid<int> walls_;
  std::set<Cell> goals_;
  std::set<Cell> boxes_;
  Cell player_{0, 0};
  Rewards rewards_;
  std::vector<int> plan_;
  struct Move {
    bool moved = false;
    int placed = 0;   // boxes newly on a goal
    int removed = 0;  // boxes pushed off a goal
  };
  Move apply(int dir);
  void remember_plan(const std::vector<int>& plan) const;

  // state digest -> next oracle direction
  mutable std::map<std::string, int> oracle_moves_;
};

class FrozenLake final : public Game {
 public:
  enum Tile : int { kIce = 0, kHole = 1 };

  FrozenLake(Grid<int> tiles, Cell start, Cell goal, double goal_reward = 1.0);
  static std::unique_ptr<FrozenLake> generate(const Json& params, Rng& rng);

  RasterImage render(const std::string& agent, const StyleConfig& style, Rng& rng) const override;
  std::string question(const std::string& agent) const override;
  std::string caption(const std::string& agent) const override;
  GameStep step(const AgentMap<std::string>& actions, Rng& dynamics) override;
  bool over() const override { return fell_ || reached_; }
  std::string oracle_action(const std::string& agent) const override;
  std::string random_action(const std::string& agent, Rng& rng) const override;
  std::string state_digest() const override;

  const Grid<int>& tiles() const { return tiles_; }
  Cell start() const { return start_; }
  Cell goal() const { return goal_; }
  Cell player() const { return player_; }
  /// Shortest hole-free path length from the player to the goal; -1 if none.
  int distance_to_goal() const;

 private:
  Grid<int> tiles_;
  Cell start_, goal_, player_;
  double goal_reward_;
  bool fell_ = false;
  bool reached_ = false;
};

class Game2048 final : public Game {
 public:
  struct Slide {
    Grid<int> board;
    int merged = 0;
    bool changed = false;
  };
  /// Pure slide-merge of `board` toward direction `dir` (no spawn).
  static Slide slide(const Grid<int>& board, int dir);

  Game2048(Grid<int> board, int target, double target_bonus = 1.0);
  static std::unique_ptr<Game2048> generate(const Json& params, Rng& rng);

  RasterImage render(const std::string& agent, const StyleConfig& style, Rng& rng) const override;
  std::string question(const std::string& agent) const override;
  std::string caption(const std::string& agent) const override;
  GameStep step(const AgentMap<std::string>& actions, Rng& dynamics) override;
  bool over() const override;
  std::string oracle_action(const std::string& agent) const override;
  std::string random_action(const std::string& agent, Rng& rng) const override;
  std::string state_digest() const override;

  const Grid<int>& board() const { return board_; }
  int target() const { return target_; }
  bool has_move() const;
  /// Places a 2 (p=0.9) or 4 on a uniformly drawn empty cell.
  static void spawn(Grid<int>& board, Rng& rng);

 private:
  Grid<int> board_;
  int target_;
  double target_bonus_;
};

class Minesweeper final : public Game {
 public:
  Minesweeper(int side, int mines);
  /// Pre-mined board for tests; the first-reveal placement is skipped.
  Minesweeper(Grid<int> mines);
  static std::unique_ptr<Minesweeper> generate(const Json& params, Rng& rng);

  RasterImage render(const std::string& agent, const StyleConfig& style, Rng& rng) const override;
  std::string question(const std::string& agent) const override;
  std::string caption(const std::string& agent) const override;
  GameStep step(const AgentMap<std::string>& actions, Rng& dynamics) override;
  bool over() const override { return exploded_ || revealed_safe() == safe_total(); }
  std::string oracle_action(const std::string& agent) const override;
  std::string random_action(const std::string& agent, Rng& rng) const override;
  std::string state_digest() const override;

  int side() const { return side_; }
  bool mines_placed() const { return placed_; }
  bool exploded() const { return exploded_; }
  bool mine(int r, int c) const { return mines_(r, c) != 0; }
  bool revealed(int r, int c) const { return open_(r, c) != 0; }
  int adjacent(int r, int c) const;
  int revealed_safe() const;
  int safe_total() const { return side_ * side_ - mine_count_; }

 private:
  void place_mines(Cell first, Rng& rng);
  int flood(Cell from);

  int side_;
  int mine_count_;
  Grid<int> mines_;
  Grid<int> open_;
  bool placed_ = false;
  bool exploded_ = false;
};

struct TicTacToeRewards {
  double win = 1.0;
  double loss = -1.0;
  double draw = 0.0;
  double forfeit = -1.0;
};

class TicTacToe final : public Game {
 public:
  static constexpr const char* kX = "agent_x";
  static constexpr const char* kO = "agent_o";
  using Rewards = TicTacToeRewards;

  explicit TicTacToe(Rewards rewards = {});
  /// Board rows of 'X', 'O', '.'; X moves next when counts are equal.
  static TicTacToe from_text(const std::vector<std::string>& rows, Rewards rewards = {});
  static std::unique_ptr<TicTacToe> generate(const Json& params, Rng& rng);

  std::vector<std::string> agents() const override { return {kO, kX}; }
  std::vector<std::string> to_move() const override;
  RasterImage render(const std::string& agent, const StyleConfig& style, Rng& rng) const override;
  std::string question(const std::string& agent) const override;
  std::string caption(const std::string& agent) const override;
  GameStep step(const AgentMap<std::string>& actions, Rng& dynamics) override;
  bool over() const override { return finished_; }
  std::string oracle_action(const std::string& agent) const override;
  std::string random_action(const std::string& agent, Rng& rng) const override;
  std::string state_digest() const override;

  const Grid<char>& board() const { return board_; }
  char turn() const { return turn_; }
  /// 'X', 'O', 'D' (draw) or 0 while undecided.
  char outcome() const { return outcome_; }
  /// Minimax value for the side to move: +1 win, 0 draw, -1 loss.
  static int minimax(Grid<char>& board, char to_move);
  static char winner(const Grid<char>& board);

 private:
  Grid<char> board_{3, 3, '.'};
  char turn_ = 'X';
  char outcome_ = 0;
  bool finished_ = false;
  Rewards rewards_;
};

}  // namespace gymv::envs
