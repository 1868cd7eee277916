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
#include <cmath>
#include <queue>

#include "common.hpp"
#include "gymv/envs/multiturn.hpp"

namespace gymv::envs {

Minesweeper::Minesweeper(int side, int mines)
    : side_(side), mine_count_(mines), mines_(side, side, 0), open_(side, side, 0) {
  if (mines < 0 || mines >= side * side) throw GymError(ErrorCode::kConfig, "minesweeper: bad mine count");
}

Minesweeper::Minesweeper(Grid<int> mines)
    : side_(mines.rows()),
      mine_count_(static_cast<int>(std::count(mines.cells().begin(), mines.cells().end(), 1))),
      mines_(std::move(mines)),
      open_(side_, side_, 0),
      placed_(true) {}

std::unique_ptr<Minesweeper> Minesweeper::generate(const Json& params, Rng&) {
  const int side = param_int(params, "grid_side");
  const double density = param_double(params, "mine_density");
  return std::make_unique<Minesweeper>(side, static_cast<int>(std::lround(density * side * side)));
}

void Minesweeper::place_mines(Cell first, Rng& rng) {
  std::vector<Cell> cells;
  for (int r = 0; r < side_; ++r) {
    for (int c = 0; c < side_; ++c) {
      if (Cell{r, c} != first) cells.emplace_back(r, c);
    }
  }
  rng.shuffle(cells);
  for (int i = 0; i < mine_count_; ++i) {
    const Cell m = cells[static_cast<std::size_t>(i)];
    mines_(m.first, m.second) = 1;
  }
  placed_ = true;
}

int Minesweeper::adjacent(int r, int c) const {
  int n = 0;
  for (int dr = -1; dr <= 1; ++dr) {
    for (int dc = -1; dc <= 1; ++dc) {
      if ((dr || dc) && mines_.in_bounds(r + dr, c + dc) && mines_(r + dr, c + dc)) ++n;
    }
  }
  return n;
}

int Minesweeper::revealed_safe() const {
  int n = 0;
  for (int r = 0; r < side_; ++r) {
    for (int c = 0; c < side_; ++c) {
      if (open_(r, c) && !mines_(r, c)) ++n;
    }
  }
  return n;
}

int Minesweeper::flood(Cell from) {
  int opened = 0;
  std::queue<Cell> q;
  q.push(from);
  open_(from.first, from.second) = 1;
  while (!q.empty()) {
    const auto [r, c] = q.front();
    q.pop();
    ++opened;
    if (adjacent(r, c) != 0) continue;
    for (int dr = -1; dr <= 1; ++dr) {
      for (int dc = -1; dc <= 1; ++dc) {
        const int nr = r + dr;
        const int nc = c + dc;
        if (!open_.in_bounds(nr, nc) || open_(nr, nc) || mines_(nr, nc)) continue;
        open_(nr, nc) = 1;
        q.push({nr, nc});
      }
    }
  }
  return opened;
}

GameStep Minesweeper::step(const AgentMap<std::string>& actions, Rng& dynamics) {
  AgentOutcome out;
  const ActionParse parsed = parse_action(actions.at(kSingleAgent), Grammar::kReveal);
  const auto* a = as_action(parsed);
  if (a == nullptr) {
    out.feedback = "Invalid action; expected 'reveal r c'.";
  } else {
    const int r = static_cast<int>(a->values[0]);
    const int c = static_cast<int>(a->values[1]);
    if (!open_.in_bounds(r, c)) {
      out.feedback = "Cell (" + std::to_string(r) + "," + std::to_string(c) + ") is off the board.";
      out.info["invalid_action"] = "out of bounds";
    } else if (open_(r, c)) {
      out.feedback = "That cell is already open.";
    } else {
      if (!placed_) place_mines({r, c}, dynamics);
      if (mines_(r, c)) {
        open_(r, c) = 1;
        exploded_ = true;
        out.feedback = "Boom: that cell held a mine.";
      } else {
        const int opened = flood({r, c});
        out.reward = static_cast<double>(opened) / safe_total();
        out.feedback = "Opened " + std::to_string(opened) + (opened == 1 ? " cell." : " cells.");
        if (revealed_safe() == safe_total()) out.feedback += " Every safe cell is open.";
      }
    }
  }
  GameStep step;
  step.outcomes[kSingleAgent] = std::move(out);
  return step;
}

std::string Minesweeper::oracle_action(const std::string&) const {
  if (!placed_) return "reveal " + std::to_string(side_ / 2) + " " + std::to_string(side_ / 2);
  for (int r = 0; r < side_; ++r) {
    for (int c = 0; c < side_; ++c) {
      if (!open_(r, c) && !mines_(r, c)) return "reveal " + std::to_string(r) + " " + std::to_string(c);
    }
  }
  return "reveal 0 0";
}

std::string Minesweeper::random_action(const std::string&, Rng& rng) const {
  const auto r = rng.index(static_cast<std::size_t>(side_));
  const auto c = rng.index(static_cast<std::size_t>(side_));
  return "reveal " + std::to_string(r) + " " + std::to_string(c);
}

namespace {

char mine_symbol(const Minesweeper& m, int r, int c) {
  if (!m.revealed(r, c)) return '#';
  if (m.mine(r, c)) return '*';
  const int n = m.adjacent(r, c);
  return n ? static_cast<char>('0' + n) : '.';
}

}  // namespace

std::string Minesweeper::state_digest() const {
  std::string out;
  for (int r = 0; r < side_; ++r) {
    for (int c = 0; c < side_; ++c) out += mine_symbol(*this, r, c);
    out += '/';
  }
  // Hidden mines are state too once placed.
  if (placed_) {
    for (int v : mines_.cells()) out += static_cast<char>('0' + v);
  }
  return out;
}

std::string Minesweeper::question(const std::string&) const {
  return "Open every cell that has no mine; the board hides " + std::to_string(mine_count_) +
         " mines. Grey cells are hidden; an open cell's number counts "
         "the mines among its 8 neighbours. Row and column indices are printed on the border. "
         "Reply with one move: reveal r c.";
}

std::string Minesweeper::caption(const std::string&) const {
  std::string out = "Board " + detail::size_text(side_, side_) +
                    " (# hidden, . open with no adjacent mine, digit = adjacent mines, * mine):";
  for (int r = 0; r < side_; ++r) {
    out += '\n';
    for (int c = 0; c < side_; ++c) out += mine_symbol(*this, r, c);
  }
  return out;
}

RasterImage Minesweeper::render(const std::string&, const StyleConfig& style, Rng&) const {
  return render_grid(detail::grid_cells<int>(open_,
                                             [&](int r, int c) -> GridCell {
                                               const char s = mine_symbol(*this, r, c);
                                               if (s == '#') return {"hidden", ""};
                                               if (s == '*') return {"mine", "*"};
                                               if (s == '.') return {"empty", ""};
                                               return {"empty", std::string(1, s)};
                                             }),
                     style, GridOptions{.coordinates = true});
}

}  // namespace gymv::envs
