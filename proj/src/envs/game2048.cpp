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

#include "common.hpp"
#include "gymv/envs/multiturn.hpp"

namespace gymv::envs {

Game2048::Slide Game2048::slide(const Grid<int>& board, int dir) {
  Slide out{board, 0, false};
  const int n = board.rows();
  for (int line = 0; line < n; ++line) {
    // Cells of this line, starting at the wall the tiles slide toward.
    std::vector<Cell> cells;
    for (int k = 0; k < n; ++k) {
      switch (dir) {
        case 0:
          cells.emplace_back(k, line);
          break;
        case 1:
          cells.emplace_back(n - 1 - k, line);
          break;
        case 2:
          cells.emplace_back(line, k);
          break;
        default:
          cells.emplace_back(line, n - 1 - k);
          break;
      }
    }
    std::vector<int> values;
    for (auto [r, c] : cells) {
      if (board(r, c)) values.push_back(board(r, c));
    }
    std::vector<int> merged;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i + 1 < values.size() && values[i] == values[i + 1]) {
        merged.push_back(values[i] * 2);
        out.merged += values[i] * 2;
        ++i;
      } else {
        merged.push_back(values[i]);
      }
    }
    merged.resize(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k) {
      auto [r, c] = cells[static_cast<std::size_t>(k)];
      if (out.board(r, c) != merged[static_cast<std::size_t>(k)]) out.changed = true;
      out.board(r, c) = merged[static_cast<std::size_t>(k)];
    }
  }
  return out;
}

Game2048::Game2048(Grid<int> board, int target, double target_bonus)
    : board_(std::move(board)), target_(target), target_bonus_(target_bonus) {}

void Game2048::spawn(Grid<int>& board, Rng& rng) {
  std::vector<Cell> empty;
  for (int r = 0; r < board.rows(); ++r) {
    for (int c = 0; c < board.cols(); ++c) {
      if (!board(r, c)) empty.emplace_back(r, c);
    }
  }
  if (empty.empty()) return;
  const Cell at = empty[rng.index(empty.size())];
  board(at.first, at.second) = rng.bernoulli(0.9) ? 2 : 4;
}

std::unique_ptr<Game2048> Game2048::generate(const Json& params, Rng& rng) {
  const int side = param_int(params, "grid_side");
  Grid<int> board(side, side, 0);
  spawn(board, rng);
  spawn(board, rng);
  return std::make_unique<Game2048>(std::move(board), param_int(params, "target_tile"),
                                    params.value("reward_target_bonus", 1.0));
}

bool Game2048::has_move() const {
  for (int d = 0; d < 4; ++d) {
    if (slide(board_, d).changed) return true;
  }
  return false;
}

bool Game2048::over() const {
  const auto& cells = board_.cells();
  if (std::find_if(cells.begin(), cells.end(), [&](int v) { return v >= target_; }) != cells.end()) {
    return true;
  }
  return !has_move();
}

GameStep Game2048::step(const AgentMap<std::string>& actions, Rng& dynamics) {
  AgentOutcome out;
  const auto dir = direction_index(actions.at(kSingleAgent));
  if (!dir) {
    out.feedback = "Invalid action; expected up, down, left or right.";
  } else {
    Slide s = slide(board_, *dir);
    if (!s.changed) {
      out.feedback = "No tile can move " + std::string(kDirectionNames[static_cast<std::size_t>(*dir)]) + ".";
    } else {
      board_ = std::move(s.board);
      spawn(board_, dynamics);
      out.reward = static_cast<double>(s.merged) / target_;
      out.info["merged"] = s.merged;
      out.feedback = "Slid " + std::string(kDirectionNames[static_cast<std::size_t>(*dir)]) +
                     "; merged " + std::to_string(s.merged) + ".";
      const auto& cells = board_.cells();
      if (*std::max_element(cells.begin(), cells.end()) >= target_) {
        out.reward += target_bonus_;
        out.feedback += " Target tile reached.";
      } else if (!has_move()) {
        out.feedback += " No moves remain.";
      }
    }
  }
  GameStep step;
  step.outcomes[kSingleAgent] = std::move(out);
  return step;
}

std::string Game2048::oracle_action(const std::string&) const {
  // Greedy: merge value plus free space, ties broken toward left/up.
  static constexpr int kPreference[4] = {2, 0, 3, 1};
  int best = -1;
  long best_score = -1;
  for (int d : kPreference) {
    const Slide s = slide(board_, d);
    if (!s.changed) continue;
    const long empty = std::count(s.board.cells().begin(), s.board.cells().end(), 0);
    const long score = 4L * s.merged + 8L * empty;
    if (score > best_score) {
      best_score = score;
      best = d;
    }
  }
  return std::string(kDirectionNames[static_cast<std::size_t>(best < 0 ? 0 : best)]);
}

std::string Game2048::random_action(const std::string&, Rng& rng) const {
  return std::string(kDirectionNames[rng.index(4)]);
}

std::string Game2048::state_digest() const {
  std::string out;
  for (int r = 0; r < board_.rows(); ++r) {
    std::vector<int> row;
    for (int c = 0; c < board_.cols(); ++c) row.push_back(board_(r, c));
    out += detail::join_ints(row, ",") + "/";
  }
  return out;
}

std::string Game2048::question(const std::string&) const {
  return "Slide the tiles to merge equal numbers and build a " + std::to_string(target_) +
         " tile. Every move that shifts tiles adds a new 2 or 4. Reply with one move: up, down, "
         "left or right.";
}

std::string Game2048::caption(const std::string&) const {
  std::string out = "Board " + detail::size_text(board_.rows(), board_.cols()) + " (. = empty):";
  for (int r = 0; r < board_.rows(); ++r) {
    out += '\n';
    for (int c = 0; c < board_.cols(); ++c) {
      if (c) out += ' ';
      out += board_(r, c) ? std::to_string(board_(r, c)) : ".";
    }
  }
  return out;
}

RasterImage Game2048::render(const std::string&, const StyleConfig& style, Rng&) const {
  return render_grid(detail::grid_cells<int>(board_,
                                             [&](int r, int c) -> GridCell {
                                               const int v = board_(r, c);
                                               if (!v) return {"empty", ""};
                                               return {"tile", std::to_string(v)};
                                             }),
                     style);
}

}  // namespace gymv::envs
