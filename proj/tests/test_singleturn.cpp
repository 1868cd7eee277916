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

#include "agreement.hpp"
#include "gymv/envs/singleturn.hpp"
#include "gymv/wrappers.hpp"

namespace gymv::test {
namespace {

using namespace envs;

Grid<int> filled(int side, int value) { return Grid<int>(side, side, value); }

TEST(LargestIsland, AllWaterIsZero) {
  LargestIsland::Instance inst{filled(5, 0)};
  EXPECT_TRUE(LargestIsland::verify(inst, "0").correct);
  EXPECT_FALSE(LargestIsland::verify(inst, "1").correct);
}

TEST(LargestIsland, FullGridIsNine) {
  LargestIsland::Instance inst{filled(3, 1)};
  EXPECT_TRUE(LargestIsland::verify(inst, "9").correct);
}

TEST(LargestIsland, UnparseableGetsParseDetail) {
  LargestIsland::Instance inst{filled(3, 1)};
  const auto v = LargestIsland::verify(inst, "nine");
  EXPECT_FALSE(v.correct);
  EXPECT_EQ(v.score, 0.0);
  EXPECT_EQ(v.detail, "parse");
}

TEST(LargestIsland, SeedSevenEightByEightMatchesFloodFill) {
  const auto inst = make_instance_with<LargestIsland>("largest_island", 0, 7, Json{{"grid_side", 8}});
  ASSERT_EQ(inst.grid.rows(), 8);
  const int want = oracle::largest_island(inst.grid);
  EXPECT_TRUE(LargestIsland::verify(inst, std::to_string(want)).correct);
  EXPECT_FALSE(LargestIsland::verify(inst, std::to_string(want + 1)).correct);
}

TEST(VisibleLine, SingletonAndParallel) {
  VisibleLine::Instance one{{{2, 3}}};
  EXPECT_TRUE(VisibleLine::verify(one, "1").correct);
  VisibleLine::Instance par{{{1, 1}, {1, 2}}};
  EXPECT_TRUE(VisibleLine::verify(par, "2").correct);
  EXPECT_FALSE(VisibleLine::verify(par, "1 2").correct);
}

TEST(VisibleLine, EightRandomLinesMatchProbeOracle) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto inst = make_instance_with<VisibleLine>("visible_line", 1, seed, Json{{"line_count", 8}});
    ASSERT_EQ(inst.lines.size(), 8U);
    EXPECT_EQ(VisibleLine::solve(inst.lines), oracle::visible_lines(inst.lines)) << "seed " << seed;
  }
}

TEST(VisibleLine, OrderAndSpacingDoNotMatter) {
  VisibleLine::Instance inst{{{-1, 0}, {1, 0}, {0, -5}}};
  EXPECT_TRUE(VisibleLine::verify(inst, "1 2").correct);
  EXPECT_TRUE(VisibleLine::verify(inst, "2,1").correct);
  EXPECT_TRUE(VisibleLine::verify(inst, "  2 ,   1 ").correct);
}

TEST(RottenOranges, HandCases) {
  RottenOranges::Instance adj{Grid<int>::from_rows({{2, 1}})};
  EXPECT_TRUE(RottenOranges::verify(adj, "1").correct);
  RottenOranges::Instance lone{Grid<int>::from_rows({{1, 0}, {0, 0}})};
  EXPECT_TRUE(RottenOranges::verify(lone, "-1").correct);
  EXPECT_FALSE(RottenOranges::verify(lone, "0").correct);
}

TEST(RottenOranges, SeedElevenMatchesSimulation) {
  const auto inst = make_instance_of<RottenOranges>("rotten_oranges", 0, 11);
  EXPECT_TRUE(RottenOranges::verify(inst, std::to_string(oracle::rotting_minutes(inst.grid))).correct);
}

ShortestPath::Instance triangle() {
  ShortestPath::Instance g;
  g.nodes = 3;
  g.edges = {{0, 1, 1}, {1, 2, 1}, {0, 2, 5}};
  g.source = 0;
  g.target = 1;
  return g;
}

TEST(ShortestPath, DirectEdge) { EXPECT_TRUE(ShortestPath::verify(triangle(), "0 1").correct); }

TEST(ShortestPath, NonEdgeIsRejected) {
  auto g = triangle();
  g.edges = {{0, 1, 1}, {1, 2, 1}};
  g.target = 2;
  const auto v = ShortestPath::verify(g, "0 2");
  EXPECT_FALSE(v.correct);
  EXPECT_EQ(v.detail, "invalid edge");
}

TEST(ShortestPath, TenNodeGraphsMatchAllPairs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = make_instance_with<ShortestPath>("shortest_path", 1, seed, Json{{"node_count", 10}});
    ASSERT_EQ(inst.nodes, 10);
    const auto d = oracle::all_pairs(inst);
    EXPECT_EQ(ShortestPath::solve(inst).first, d[static_cast<std::size_t>(inst.source)][static_cast<std::size_t>(inst.target)]);
  }
}

TEST(MiniSudoku, OwnSolutionAndSwap) {
  const auto inst = make_instance_of<MiniSudoku>("mini_sudoku", 0, 3);
  EXPECT_TRUE(MiniSudoku::verify(inst, MiniSudoku::answer(inst)).correct);
  auto swapped = inst.solution;
  std::swap(swapped(0, 0), swapped(0, 1));
  std::string text;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) text += std::to_string(swapped(r, c));
    text += "\n";
  }
  EXPECT_FALSE(MiniSudoku::verify(inst, text).correct);
}

TEST(MiniSudoku, SeedThreeHasExactlyOneCompletion) {
  for (int level = 0; level < 3; ++level) {
    const auto inst = make_instance_of<MiniSudoku>("mini_sudoku", level, 3);
    EXPECT_EQ(oracle::sudoku_completions(inst.puzzle).size(), 1U) << "level " << level;
  }
}

TEST(TowerOfHanoi, HandCases) {
  EXPECT_TRUE(TowerOfHanoi::verify({1}, "(0,2)").correct);
  EXPECT_FALSE(TowerOfHanoi::verify({2}, "(0,2)(0,2)").correct);
  EXPECT_TRUE(TowerOfHanoi::verify({2}, "(0,1)(0,2)(1,2)").correct);
}

TEST(TowerOfHanoi, NonOptimalNineMoveSolutionsAccepted) {
  // Smallest disc steps aside and back at a random point of the optimal plan.
  const auto base = TowerOfHanoi::solve(3);
  Rng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const auto at = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(base.size())));
    std::vector<int> where(3, 0);
    for (std::size_t i = 0; i < at; ++i) {
      int top = -1;
      for (int d = 2; d >= 0; --d) {
        if (where[static_cast<std::size_t>(d)] == base[i].first) top = d;
      }
      where[static_cast<std::size_t>(top)] = base[i].second;
    }
    const int other = (where[0] + 1 + static_cast<int>(rng.uniform_int(0, 1))) % 3;
    auto moves = base;
    moves.insert(moves.begin() + static_cast<std::ptrdiff_t>(at), {{where[0], other}, {other, where[0]}});
    ASSERT_EQ(moves.size(), 9U);
    ASSERT_TRUE(oracle::hanoi_ok(3, moves));
    EXPECT_TRUE(TowerOfHanoi::verify({3}, detail::pairs(moves)).correct) << detail::pairs(moves);
  }
}

TEST(CircuitLogic, AndNot) {
  CircuitLogic::Instance and_gate{{1, 1}, {{CircuitLogic::Op::kAnd, {0, 1}}}};
  EXPECT_TRUE(CircuitLogic::verify(and_gate, "1").correct);
  CircuitLogic::Instance not_gate{{0}, {{CircuitLogic::Op::kNot, {0}}}};
  EXPECT_TRUE(CircuitLogic::verify(not_gate, "1").correct);
  EXPECT_FALSE(CircuitLogic::verify(not_gate, "0").correct);
}

TEST(CircuitLogic, SeedFiveTwelveGates) {
  const auto inst = make_instance_of<CircuitLogic>("circuit_logic", 2, 5);
  ASSERT_EQ(inst.gates.size(), 12U);
  EXPECT_EQ(CircuitLogic::evaluate(inst), oracle::circuit_output(inst));
}

TEST(NQueens, PlacementOrderDoesNotMatter) {
  const auto inst = make_instance_of<NQueens>("n_queens", 0, 1);
  auto sol = *oracle::queens_solution(inst);
  std::reverse(sol.begin(), sol.end());
  EXPECT_TRUE(NQueens::verify(inst, detail::pairs(sol)).correct);
}

// Small slice of the oracle comparison; the acceptance binary runs the full count.
TEST(SingleTurn, VerifiersAgreeWithOracles) {
  for (const auto& env : single_turn_envs()) {
    Agreement a = check_agreement(env, 0, 0, 60);
    a.merge(check_agreement(env, 2, 1000, 15));
    EXPECT_EQ(a.disagreements, 0) << env << ": " << (a.examples.empty() ? "" : a.examples.front());
    EXPECT_GT(a.candidates, a.instances);
  }
}

TEST(SingleTurn, GroundTruthAlwaysVerifies) {
  const std::string agent(kSingleAgent);
  for (const auto& env : single_turn_envs()) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const int level = static_cast<int>(seed % 3);
      EnvSpec spec;
      spec.env_id = env;
      spec.difficulty = level;
      auto e = make(spec, Seed{seed});
      e->reset();
      const auto truth = e->base().game().oracle_action(agent);
      AgentMap<std::string> act;
      act[agent] = truth;
      const auto r = e->step(act);
      EXPECT_DOUBLE_EQ(r.rewards.at(agent), 1.0) << env << " seed " << seed;
    }
  }
}

}  // namespace
}  // namespace gymv::test
