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
#include <map>

#include "gymv/envs/multiturn.hpp"
#include "gymv/envs/singleturn.hpp"
#include "gymv/registry.hpp"

namespace gymv {

namespace detail {
// Generated at build time from data/catalog.json.
extern const char* const kEmbeddedManifest;
}  // namespace detail

namespace {

template <typename G>
GameFactory multi_turn_factory() {
  return [](const Json& params, Rng& rng) -> std::unique_ptr<Game> { return G::generate(params, rng); };
}

const std::map<std::string, GameFactory>& builtin_factories() {
  using namespace envs;
  static const std::map<std::string, GameFactory> factories{
      {"rotten_oranges", single_turn_factory<RottenOranges>()},
      {"grid_bfs", single_turn_factory<GridBfs>()},
      {"binary_matrix", single_turn_factory<BinaryMatrix>()},
      {"largest_island", single_turn_factory<LargestIsland>()},
      {"visible_line", single_turn_factory<VisibleLine>()},
      {"convex_hull_count", single_turn_factory<ConvexHullCount>()},
      {"shortest_path", single_turn_factory<ShortestPath>()},
      {"longest_path_len", single_turn_factory<LongestPathLen>()},
      {"mini_sudoku", single_turn_factory<MiniSudoku>()},
      {"circuit_logic", single_turn_factory<CircuitLogic>()},
      {"n_queens", single_turn_factory<NQueens>()},
      {"tower_of_hanoi", single_turn_factory<TowerOfHanoi>()},
      {"sokoban", multi_turn_factory<Sokoban>()},
      {"frozenlake", multi_turn_factory<FrozenLake>()},
      {"game2048", multi_turn_factory<Game2048>()},
      {"minesweeper", multi_turn_factory<Minesweeper>()},
      {"tictactoe", multi_turn_factory<TicTacToe>()},
  };
  return factories;
}

}  // namespace

const Json& builtin_manifest() {
  static const Json manifest = Json::parse(detail::kEmbeddedManifest);
  return manifest;
}

void register_builtin_envs(Registry& registry, const Json& manifest) {
  if (!manifest.contains("envs") || !manifest["envs"].is_array()) {
    throw GymError(ErrorCode::kConfig, "manifest has no envs array");
  }
  for (const auto& entry : manifest["envs"]) {
    EnvDescriptor d = entry.get<EnvDescriptor>();
    const auto& factories = builtin_factories();
    auto it = factories.find(d.env_id);
    if (it == factories.end()) {
      throw GymError(ErrorCode::kConfig, "manifest lists '" + d.env_id + "' but no implementation exists");
    }
    registry.register_env(std::move(d), it->second);
  }
}

}  // namespace gymv
