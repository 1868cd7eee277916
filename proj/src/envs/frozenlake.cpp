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
#include <cmath>
#include <queue>

#include "common.hpp"
#include "gymv/envs/multiturn.hpp"

namespace gymv::envs {

namespace {

// BFS distances to `goal` over non-hole cells.
Grid<int> distances_to(const Grid<int>& tiles, Cell goal) {
  Grid<int> dist(tiles.rows(), tiles.cols(), -1);
  std::queue<Cell> q;
  dist(goal.first, goal.second) = 0;
  q.push(goal);
  while (!q.empty()) {
    const auto [r, c] = q.front();
    q.pop();
    for (int d = 0; d < 4; ++d) {
      const int nr = r + kDirRow[d];
      const int nc = c + kDirCol[d];
      if (!tiles.in_bounds(nr, nc) || tiles(nr, nc) == FrozenLake::kHole || dist(nr, nc) != -1) continue;
      dist(nr, nc) = dist(r, c) + 1;
      q.push({nr, nc});
    }
  }
  return dist;
}

}  // namespace

FrozenLake::FrozenLake(Grid<int> tiles, Cell start, Cell goal, double goal_reward)
    : tiles_(std::move(tiles)), start_(start), goal_(goal), player_(start), goal_reward_(goal_reward) {}

std::unique_ptr<FrozenLake> FrozenLake::generate(const Json& params, Rng& rng) {
  const int side = param_int(params, "grid_side");
  const double density = param_double(params, "hole_density");
  const double reward = params.value("reward_goal", 1.0);
  const int holes = static_cast<int>(std::lround(density * side * side));
  return std::make_unique<FrozenLake>(generate_until_valid("frozenlake", [&]() -> std::unique_ptr<FrozenLake> {
    std::vector<Cell> cells;
    for (int r = 0; r < side; ++r) {
      for (int c = 0; c < side; ++c) cells.emplace_back(r, c);
    }
    rng.shuffle(cells);
    const Cell start = cells[0];
    const Cell goal = cells[1];
    // Adjacent start and goal make a one-move episode.
    if (std::abs(start.first - goal.first) + std::abs(start.second - goal.second) < side / 2 + 1) {
      return nullptr;
    }
    Grid<int> tiles(side, side, kIce);
    for (int i = 0; i < holes; ++i) {
      const Cell h = cells[static_cast<std::size_t>(2 + i)];
      tiles(h.first, h.second) = kHole;
    }
    auto lake = std::make_unique<FrozenLake>(std::move(tiles), start, goal, reward);
    if (lake->distance_to_goal() < 0) return nullptr;
    return lake;
  }));
}

int FrozenLake::distance_to_goal() const {
  return distances_to(tiles_, goal_)(player_.first, player_.second);
}

GameStep FrozenLake::step(const AgentMap<std::string>& actions, Rng&) {
  AgentOutcome out;
  const auto dir = direction_index(actions.at(kSingleAgent));
  if (!dir) {
    out.feedback = "Invalid action; expected up, down, left or right.";
  } else {
    const int nr = player_.first + kDirRow[*dir];
    const int nc = player_.second + kDirCol[*dir];
    if (!tiles_.in_bounds(nr, nc)) {
      out.feedback = "Edge of the lake; you stay put.";
    } else {
      player_ = {nr, nc};
      if (tiles_(nr, nc) == kHole) {
        fell_ = true;
        out.feedback = "You fell into a hole.";
      } else if (player_ == goal_) {
        reached_ = true;
        out.reward = goal_reward_;
        out.feedback = "You reached the goal.";
      } else {
        out.feedback = "Moved " + std::string(kDirectionNames[static_cast<std::size_t>(*dir)]) + ".";
      }
    }
  }
  GameStep step;
  step.outcomes[kSingleAgent] = std::move(out);
  return step;
}

std::string FrozenLake::oracle_action(const std::string&) const {
  const Grid<int> dist = distances_to(tiles_, goal_);
  const int here = dist(player_.first, player_.second);
  for (int d = 0; d < 4; ++d) {
    const int nr = player_.first + kDirRow[d];
    const int nc = player_.second + kDirCol[d];
    if (tiles_.in_bounds(nr, nc) && dist(nr, nc) >= 0 && dist(nr, nc) == here - 1) {
      return std::string(kDirectionNames[static_cast<std::size_t>(d)]);
    }
  }
  return "up";
}

std::string FrozenLake::random_action(const std::string&, Rng& rng) const {
  return std::string(kDirectionNames[rng.index(4)]);
}

namespace {

char lake_symbol(const FrozenLake& lake, int r, int c) {
  const Cell cell{r, c};
  if (lake.player() == cell) return 'P';
  if (lake.tiles()(r, c) == FrozenLake::kHole) return 'H';
  if (lake.goal() == cell) return 'G';
  if (lake.start() == cell) return 'S';
  return 'F';
}

}  // namespace

std::string FrozenLake::state_digest() const {
  std::string out;
  for (int r = 0; r < tiles_.rows(); ++r) {
    for (int c = 0; c < tiles_.cols(); ++c) out += lake_symbol(*this, r, c);
    out += '/';
  }
  return out;
}

std::string FrozenLake::question(const std::string&) const {
  return "Walk across the frozen lake from your position (magenta) to the goal (yellow) without "
         "stepping into a hole (dark blue). Reply with one move: up, down, left or right.";
}

std::string FrozenLake::caption(const std::string&) const {
  std::string out = "Lake " + detail::size_text(tiles_.rows(), tiles_.cols()) +
                    " (P you, S start, F ice, H hole, G goal):";
  for (int r = 0; r < tiles_.rows(); ++r) {
    out += '\n';
    for (int c = 0; c < tiles_.cols(); ++c) out += lake_symbol(*this, r, c);
  }
  return out;
}

RasterImage FrozenLake::render(const std::string&, const StyleConfig& style, Rng&) const {
  return render_grid(detail::grid_cells<int>(tiles_,
                                             [&](int r, int c) -> GridCell {
                                               switch (lake_symbol(*this, r, c)) {
                                                 case 'P':
                                                   return {"player", ""};
                                                 case 'H':
                                                   return {"hole", ""};
                                                 case 'G':
                                                   return {"goal", ""};
                                                 case 'S':
                                                   return {"start", ""};
                                                 default:
                                                   return {"ice", ""};
                                               }
                                             }),
                     style);
}

}  // namespace gymv::envs
