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
#include <gtest/gtest.h>

#include <algorithm>
#include <deque>
#include <numeric>

#include "gymv/envs/multiturn.hpp"
#include "gymv/wrappers.hpp"
#include "oracles.hpp"

namespace gymv::test {
namespace {

using namespace envs;
using oracle::caption_rows;
using oracle::lake_reachable;
using oracle::SokobanBoard;

AgentMap<std::string> act(const std::string& agent, const std::string& text) {
  AgentMap<std::string> m;
  m[agent] = text;
  return m;
}

AgentMap<std::string> solo(const std::string& text) { return act(std::string(kSingleAgent), text); }

double reward_of(const GameStep& s, const std::string& agent = std::string(kSingleAgent)) {
  return s.outcomes.at(agent).reward;
}

std::unique_ptr<Env> make_env(const std::string& id, int level, std::uint64_t seed) {
  EnvSpec spec;
  spec.env_id = id;
  spec.difficulty = level;
  auto e = make(spec, Seed{seed});
  e->reset();
  return e;
}

long long tile_sum(const Grid<int>& g) {
  return std::accumulate(g.cells().begin(), g.cells().end(), 0LL);
}

// ---- sokoban ------------------------------------------------------------

TEST(Sokoban, LastPushScoresEleven) {
  auto s = Sokoban::from_text({"#####", "#@$.#", "#####"});
  Rng rng(0);
  const auto step = s.step(solo("right"), rng);
  EXPECT_DOUBLE_EQ(reward_of(step), 11.0);
  EXPECT_TRUE(s.over());
}

TEST(Sokoban, WalkIntoWallIsNoOp) {
  auto s = Sokoban::from_text({"#####", "#@$.#", "#####"});
  Rng rng(0);
  const auto before = s.state_digest();
  EXPECT_DOUBLE_EQ(reward_of(s.step(solo("left"), rng)), 0.0);
  EXPECT_EQ(s.state_digest(), before);
}

TEST(Sokoban, BlockedPushIsNoOp) {
  auto s = Sokoban::from_text({"######", "#$@_.#", "######"});
  Rng rng(0);
  const auto before = s.state_digest();
  EXPECT_DOUBLE_EQ(reward_of(s.step(solo("left"), rng)), 0.0);
  EXPECT_EQ(s.state_digest(), before);
}

TEST(Sokoban, PushOffGoalCostsOne) {
  auto s = Sokoban::from_text({"######", "#@*_.#", "#$___#", "######"});
  Rng rng(0);
  EXPECT_DOUBLE_EQ(reward_of(s.step(solo("right"), rng)), -1.0);
  EXPECT_DOUBLE_EQ(reward_of(s.step(solo("right"), rng)), 1.0);
  EXPECT_FALSE(s.over());
}

TEST(Sokoban, GeneratedPlansSolveUnderIndependentSimulator) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int level = static_cast<int>(seed % 3);
    auto e = make_env("sokoban", level, seed);
    const auto& game = dynamic_cast<const Sokoban&>(e->base().game());
    auto board = SokobanBoard::parse(game.text_rows());
    const std::size_t boxes = board.boxes.size();
    ASSERT_FALSE(game.plan().empty()) << "seed " << seed;
    for (int d : game.plan()) board.move(std::string(kDirectionNames[static_cast<std::size_t>(d)]));
    EXPECT_TRUE(board.solved()) << "seed " << seed;
    EXPECT_EQ(board.boxes.size(), boxes);
  }
}

TEST(Sokoban, BoxCountConservedUnderRandomPlay) {
  auto e = make_env("sokoban", 2, 5);
  const auto& game = dynamic_cast<const Sokoban&>(e->base().game());
  const std::size_t boxes = game.boxes().size();
  Rng rng(99);
  for (int i = 0; i < 150 && !e->base().done(); ++i) {
    e->step(solo(std::string(kDirectionNames[rng.index(4)])));
    EXPECT_EQ(game.boxes().size(), boxes);
  }
}

// ---- frozenlake ---------------------------------------------------------

TEST(FrozenLake, GoalPaysOne) {
  FrozenLake f(Grid<int>(1, 2, FrozenLake::kIce), {0, 0}, {0, 1});
  Rng rng(0);
  EXPECT_DOUBLE_EQ(reward_of(f.step(solo("right"), rng)), 1.0);
  EXPECT_TRUE(f.over());
}

TEST(FrozenLake, HoleEndsWithZero) {
  Grid<int> tiles(1, 3, FrozenLake::kIce);
  tiles(0, 1) = FrozenLake::kHole;
  FrozenLake f(tiles, {0, 0}, {0, 2});
  Rng rng(0);
  EXPECT_DOUBLE_EQ(reward_of(f.step(solo("right"), rng)), 0.0);
  EXPECT_TRUE(f.over());
}

// BFS over the tile grid, returning direction names.
std::vector<std::string> lake_route(const FrozenLake& f) {
  const auto& t = f.tiles();
  std::map<Cell, std::pair<Cell, int>> prev;
  std::deque<Cell> q{f.player()};
  prev[f.player()] = {f.player(), -1};
  const int dr[] = {-1, 1, 0, 0};
  const int dc[] = {0, 0, -1, 1};
  while (!q.empty()) {
    const Cell at = q.front();
    q.pop_front();
    if (at == f.goal()) break;
    for (int d = 0; d < 4; ++d) {
      const Cell nb{at.first + dr[d], at.second + dc[d]};
      if (!t.in_bounds(nb.first, nb.second) || t(nb.first, nb.second) == FrozenLake::kHole) continue;
      if (prev.emplace(nb, std::make_pair(at, d)).second) q.push_back(nb);
    }
  }
  std::vector<std::string> route;
  if (!prev.count(f.goal())) return route;
  for (Cell at = f.goal(); at != f.player(); at = prev[at].first) {
    route.emplace_back(kDirectionNames[static_cast<std::size_t>(prev[at].second)]);
  }
  std::reverse(route.begin(), route.end());
  return route;
}

TEST(FrozenLake, SeedNineOptimalRouteReturnsOne) {
  for (int level = 0; level < 3; ++level) {
    auto e = make_env("frozenlake", level, 9);
    const auto& f = dynamic_cast<const FrozenLake&>(e->base().game());
    const auto route = lake_route(f);
    ASSERT_FALSE(route.empty());
    double ret = 0.0;
    StepResult r;
    for (const auto& dir : route) {
      r = e->step(solo(dir));
      ret += r.rewards.at(std::string(kSingleAgent));
    }
    EXPECT_DOUBLE_EQ(ret, 1.0);
    EXPECT_TRUE(e->base().done());
  }
}

TEST(FrozenLake, CaptionMapHasPath) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto e = make_env("frozenlake", static_cast<int>(seed % 3), seed);
    const auto rows = caption_rows(e->base().game().caption(std::string(kSingleAgent)));
    EXPECT_TRUE(lake_reachable(rows)) << "seed " << seed;
  }
}

// ---- 2048 ---------------------------------------------------------------

TEST(Game2048, MergeLeft) {
  const auto g = Grid<int>::from_rows({{2, 2, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  const auto s = Game2048::slide(g, 2);
  EXPECT_EQ(s.board(0, 0), 4);
  EXPECT_EQ(s.board(0, 1), 0);
  EXPECT_EQ(s.merged, 4);
  EXPECT_TRUE(s.changed);

  Game2048 game(g, 64);
  Rng rng(1);
  EXPECT_DOUBLE_EQ(reward_of(game.step(solo("left"), rng)), 4.0 / 64.0);
  EXPECT_EQ(tile_sum(game.board()), 4 + 2) << "one spawn expected";
}

TEST(Game2048, NoChangeIsNoOp) {
  const auto g = Grid<int>::from_rows({{2, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  Game2048 game(g, 64);
  Rng rng(1);
  EXPECT_DOUBLE_EQ(reward_of(game.step(solo("left"), rng)), 0.0);
  EXPECT_EQ(game.board(), g);
}

TEST(Game2048, DeadBoardIsOver) {
  const auto g = Grid<int>::from_rows({{2, 4, 2, 4}, {4, 2, 4, 2}, {2, 4, 2, 4}, {4, 2, 4, 2}});
  Game2048 game(g, 64);
  EXPECT_FALSE(game.has_move());
  EXPECT_TRUE(game.over());
}

TEST(Game2048, SlidesConserveTileSum) {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    Grid<int> g(4, 4, 0);
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        const auto k = rng.uniform_int(0, 4);
        g(r, c) = k == 0 ? 0 : 1 << k;
      }
    }
    for (int d = 0; d < 4; ++d) EXPECT_EQ(tile_sum(Game2048::slide(g, d).board), tile_sum(g));
  }
}

TEST(Game2048, SpawnSequenceIsSeeded) {
  const std::vector<std::string> script = {"left", "up", "right", "down", "left", "left", "up", "right"};
  auto a = make_env("game2048", 0, 31);
  auto b = make_env("game2048", 0, 31);
  for (const auto& m : script) {
    if (a->base().done()) break;
    a->step(solo(m));
    b->step(solo(m));
    EXPECT_EQ(a->base().game().state_digest(), b->base().game().state_digest());
  }
}

TEST(Game2048, RewardsNeverNegative) {
  auto e = make_env("game2048", 1, 3);
  Rng rng(5);
  while (!e->base().done()) {
    const auto r = e->step(solo(std::string(kDirectionNames[rng.index(4)])));
    EXPECT_GE(r.rewards.at(std::string(kSingleAgent)), 0.0);
  }
}

// ---- minesweeper --------------------------------------------------------

TEST(Minesweeper, FloodOfWholeSafeAreaPaysOne) {
  Grid<int> mines(4, 4, 0);
  mines(3, 3) = 1;
  Minesweeper m(mines);
  Rng rng(0);
  EXPECT_DOUBLE_EQ(reward_of(m.step(solo("reveal 0 0"), rng)), 1.0);
  EXPECT_TRUE(m.over());
  EXPECT_FALSE(m.exploded());
}

TEST(Minesweeper, SecondRevealIsFree) {
  Grid<int> mines(3, 3, 0);
  mines(0, 0) = 1;
  mines(0, 2) = 1;
  Minesweeper m(mines);
  Rng rng(0);
  EXPECT_DOUBLE_EQ(reward_of(m.step(solo("reveal 0 1"), rng)), 1.0 / 7.0);
  EXPECT_DOUBLE_EQ(reward_of(m.step(solo("reveal 0 1"), rng)), 0.0);
}

TEST(Minesweeper, MineEndsWithZero) {
  Grid<int> mines(3, 3, 0);
  mines(1, 1) = 1;
  Minesweeper m(mines);
  Rng rng(0);
  EXPECT_DOUBLE_EQ(reward_of(m.step(solo("reveal 1 1"), rng)), 0.0);
  EXPECT_TRUE(m.exploded());
  EXPECT_TRUE(m.over());
}

TEST(Minesweeper, OffBoardIsInvalidNoOp) {
  Minesweeper m(Grid<int>(3, 3, 0));
  Rng rng(0);
  const auto s = m.step(solo("reveal 7 7"), rng);
  EXPECT_DOUBLE_EQ(reward_of(s), 0.0);
  EXPECT_TRUE(s.outcomes.at(std::string(kSingleAgent)).info.contains("invalid_action"));
  EXPECT_FALSE(m.over());
}

TEST(Minesweeper, FirstRevealSafeAndReturnBounded) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto e = make_env("minesweeper", static_cast<int>(seed % 3), seed);
    const auto& m = dynamic_cast<const Minesweeper&>(e->base().game());
    Rng pick(seed + 1000);
    const auto r = static_cast<int>(pick.index(static_cast<std::size_t>(m.side())));
    const auto c = static_cast<int>(pick.index(static_cast<std::size_t>(m.side())));
    double ret = e->step(solo("reveal " + std::to_string(r) + " " + std::to_string(c))).rewards.at(std::string(kSingleAgent));
    EXPECT_FALSE(m.exploded()) << "seed " << seed;
    while (!e->base().done()) {
      ret += e->step(solo(e->base().game().random_action(std::string(kSingleAgent), pick))).rewards.at(std::string(kSingleAgent));
    }
    EXPECT_GE(ret, 0.0);
    EXPECT_LE(ret, 1.0 + 1e-9);
  }
}

// ---- tictactoe ----------------------------------------------------------

TEST(TicTacToe, CompletingRowWins) {
  auto t = TicTacToe::from_text({"XX.", "OO.", "..."});
  Rng rng(0);
  const auto s = t.step(act(TicTacToe::kX, "place 0 2"), rng);
  EXPECT_DOUBLE_EQ(s.outcomes.at(TicTacToe::kX).reward, 1.0);
  EXPECT_DOUBLE_EQ(s.outcomes.at(TicTacToe::kO).reward, -1.0);
  EXPECT_TRUE(t.over());
}

TEST(TicTacToe, OccupiedSquareForfeits) {
  auto t = TicTacToe::from_text({"X..", "...", "..."});
  Rng rng(0);
  const auto s = t.step(act(TicTacToe::kO, "place 0 0"), rng);
  EXPECT_DOUBLE_EQ(s.outcomes.at(TicTacToe::kO).reward, -1.0);
  EXPECT_TRUE(t.over());
}

// Every complete game that fills the board with no line, enumerated by an
// independent simulator, ends 0/0 when replayed through the env.
char line_winner(const std::array<char, 9>& b) {
  static const int lines[8][3] = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6},
                                  {1, 4, 7}, {2, 5, 8}, {0, 4, 8}, {2, 4, 6}};
  for (const auto& l : lines) {
    if (b[static_cast<std::size_t>(l[0])] != '.' && b[static_cast<std::size_t>(l[0])] == b[static_cast<std::size_t>(l[1])] &&
        b[static_cast<std::size_t>(l[1])] == b[static_cast<std::size_t>(l[2])]) {
      return b[static_cast<std::size_t>(l[0])];
    }
  }
  return 0;
}

TEST(TicTacToe, FullBoardsWithoutLineAreDraws) {
  std::vector<std::vector<int>> draws;
  std::array<char, 9> board;
  board.fill('.');
  std::vector<int> seq;
  auto go = [&](auto&& self) -> void {
    if (line_winner(board)) return;
    if (seq.size() == 9) {
      draws.push_back(seq);
      return;
    }
    for (int i = 0; i < 9; ++i) {
      if (board[static_cast<std::size_t>(i)] != '.') continue;
      board[static_cast<std::size_t>(i)] = seq.size() % 2 ? 'O' : 'X';
      seq.push_back(i);
      self(self);
      seq.pop_back();
      board[static_cast<std::size_t>(i)] = '.';
    }
  };
  go(go);
  ASSERT_EQ(draws.size(), 46080U);
  for (std::size_t k = 0; k < draws.size(); k += 97) {
    TicTacToe t;
    Rng rng(0);
    GameStep last;
    for (std::size_t i = 0; i < 9; ++i) {
      ASSERT_FALSE(t.over());
      const int cell = draws[k][i];
      last = t.step(act(i % 2 ? TicTacToe::kO : TicTacToe::kX,
                        "place " + std::to_string(cell / 3) + " " + std::to_string(cell % 3)),
                    rng);
    }
    EXPECT_TRUE(t.over());
    EXPECT_EQ(t.outcome(), 'D');
    EXPECT_DOUBLE_EQ(last.outcomes.at(TicTacToe::kX).reward, 0.0);
    EXPECT_DOUBLE_EQ(last.outcomes.at(TicTacToe::kO).reward, 0.0);
  }
}

TEST(TicTacToe, PerfectPlayDraws) {
  Grid<char> empty(3, 3, '.');
  EXPECT_EQ(TicTacToe::minimax(empty, 'X'), 0);
}

// ---- replay -------------------------------------------------------------

TEST(MultiTurn, ReplayReproducesFinalState) {
  for (const std::string id : {"sokoban", "frozenlake", "game2048", "minesweeper"}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto e = make_env(id, 1, seed);
      Rng pick(seed);
      std::vector<std::string> log;
      while (!e->base().done()) {
        log.push_back(e->base().game().random_action(std::string(kSingleAgent), pick));
        e->step(solo(log.back()));
      }
      auto again = make_env(id, 1, seed);
      for (const auto& a : log) again->step(solo(a));
      EXPECT_EQ(again->base().game().state_digest(), e->base().game().state_digest()) << id << " " << seed;
    }
  }
}

}  // namespace
}  // namespace gymv::test
