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
#include <queue>
#include <unordered_map>

#include "common.hpp"
#include "gymv/envs/multiturn.hpp"

namespace gymv::envs {

namespace {

constexpr int kPlanLimit = 150;

int opposite(int dir) { return dir ^ 1; }

Cell shifted(Cell c, int dir) { return {c.first + kDirRow[dir], c.second + kDirCol[dir]}; }

// Walk from `from` to `to` around walls and boxes; directions in order.
std::optional<std::vector<int>> walk(const Grid<int>& walls, const std::set<Cell>& boxes, Cell from,
                                     Cell to) {
  Grid<int> prev(walls.rows(), walls.cols(), -1);
  std::queue<Cell> q;
  q.push(from);
  prev(from.first, from.second) = 4;
  while (!q.empty()) {
    const Cell c = q.front();
    q.pop();
    if (c == to) break;
    for (int d = 0; d < 4; ++d) {
      const Cell n = shifted(c, d);
      if (!walls.in_bounds(n.first, n.second) || walls(n.first, n.second) || boxes.count(n)) continue;
      if (prev(n.first, n.second) != -1) continue;
      prev(n.first, n.second) = d;
      q.push(n);
    }
  }
  if (prev(to.first, to.second) == -1) return std::nullopt;
  std::vector<int> path;
  for (Cell c = to; c != from;) {
    const int d = prev(c.first, c.second);
    path.push_back(d);
    c = shifted(c, opposite(d));
  }
  std::reverse(path.begin(), path.end());
  return path;
}

bool connected_floor(const Grid<int>& walls) {
  std::optional<Cell> first;
  int floor = 0;
  for (int r = 0; r < walls.rows(); ++r) {
    for (int c = 0; c < walls.cols(); ++c) {
      if (walls(r, c)) continue;
      ++floor;
      if (!first) first = Cell{r, c};
    }
  }
  if (!first) return false;
  Grid<int> seen(walls.rows(), walls.cols(), 0);
  std::queue<Cell> q;
  q.push(*first);
  seen(first->first, first->second) = 1;
  int count = 0;
  while (!q.empty()) {
    const Cell c = q.front();
    q.pop();
    ++count;
    for (int d = 0; d < 4; ++d) {
      const Cell n = shifted(c, d);
      if (walls(n.first, n.second) || seen(n.first, n.second)) continue;
      seen(n.first, n.second) = 1;
      q.push(n);
    }
  }
  return count == floor;
}

}  // namespace

std::optional<int> direction_index(std::string_view action) {
  const ActionParse parsed = parse_action(action, Grammar::kDirection);
  const auto* a = as_action(parsed);
  if (a == nullptr) return std::nullopt;
  for (std::size_t i = 0; i < kDirectionNames.size(); ++i) {
    if (a->word == kDirectionNames[i]) return static_cast<int>(i);
  }
  return std::nullopt;
}

Sokoban Sokoban::from_text(const std::vector<std::string>& rows, Rewards rewards) {
  Sokoban s;
  s.rewards_ = rewards;
  const int h = static_cast<int>(rows.size());
  const int w = h ? static_cast<int>(rows.front().size()) : 0;
  s.walls_ = Grid<int>(h, w, 0);
  bool player = false;
  for (int r = 0; r < h; ++r) {
    if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != w) {
      throw std::invalid_argument("ragged sokoban board");
    }
    for (int c = 0; c < w; ++c) {
      switch (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) {
        case '#':
          s.walls_(r, c) = 1;
          break;
        case '_':
          break;
        case '.':
          s.goals_.insert({r, c});
          break;
        case '$':
          s.boxes_.insert({r, c});
          break;
        case '*':
          s.goals_.insert({r, c});
          s.boxes_.insert({r, c});
          break;
        case '+':
          s.goals_.insert({r, c});
          [[fallthrough]];
        case '@':
          s.player_ = {r, c};
          player = true;
          break;
        default:
          throw std::invalid_argument("bad sokoban symbol");
      }
    }
  }
  if (!player) throw std::invalid_argument("sokoban board has no player");
  if (s.boxes_.size() != s.goals_.size()) throw std::invalid_argument("box and goal counts differ");
  // Edges behave as walls.
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if ((r == 0 || c == 0 || r == h - 1 || c == w - 1) && !s.walls_(r, c)) {
        throw std::invalid_argument("sokoban board must be walled in");
      }
    }
  }
  return s;
}

std::unique_ptr<Sokoban> Sokoban::generate(const Json& params, Rng& rng) {
  const int side = param_int(params, "grid_side");
  const int box_count = param_int(params, "box_count");
  const double wall_prob = param_double(params, "wall_prob");
  Rewards rewards;
  rewards.box_on_goal = params.value("reward_box_on_goal", rewards.box_on_goal);
  rewards.box_off_goal = params.value("reward_box_off_goal", rewards.box_off_goal);
  rewards.solve = params.value("reward_solve", rewards.solve);

  Sokoban s = generate_until_valid("sokoban", [&]() -> std::optional<Sokoban> {
    Sokoban g;
    g.rewards_ = rewards;
    g.walls_ = Grid<int>(side, side, 1);
    std::vector<Cell> floor;
    for (int r = 1; r < side - 1; ++r) {
      for (int c = 1; c < side - 1; ++c) {
        g.walls_(r, c) = rng.bernoulli(wall_prob) ? 1 : 0;
        if (!g.walls_(r, c)) floor.emplace_back(r, c);
      }
    }
    if (static_cast<int>(floor.size()) < 2 * box_count + 4 || !connected_floor(g.walls_)) return std::nullopt;
    rng.shuffle(floor);
    for (int i = 0; i < box_count; ++i) g.goals_.insert(floor[static_cast<std::size_t>(i)]);
    g.boxes_ = g.goals_;
    g.player_ = floor[static_cast<std::size_t>(box_count)];

    // Reverse play: the player walks and sometimes pulls the box behind it.
    struct Pull {
      Cell stand;  // where the forward pusher stands
      int dir;     // forward push direction
    };
    std::vector<Pull> pulls;
    const int steps = 12 * side * box_count;
    for (int i = 0; i < steps; ++i) {
      const int d = static_cast<int>(rng.index(4));
      const Cell next = shifted(g.player_, d);
      if (g.walls_(next.first, next.second) || g.boxes_.count(next)) continue;
      const Cell behind = shifted(g.player_, opposite(d));
      if (g.boxes_.count(behind) && rng.bernoulli(0.6)) {
        g.boxes_.erase(behind);
        g.boxes_.insert(g.player_);
        pulls.push_back({next, opposite(d)});
      }
      g.player_ = next;
    }
    for (const Cell& b : g.boxes_) {
      if (g.goals_.count(b)) return std::nullopt;
    }
    if (static_cast<int>(pulls.size()) < 3 * box_count) return std::nullopt;

    // Forward plan: undo the pulls in reverse order, walking between pushes.
    Sokoban sim = g;
    std::vector<int> plan;
    for (auto it = pulls.rbegin(); it != pulls.rend(); ++it) {
      auto path = walk(sim.walls_, sim.boxes_, sim.player_, it->stand);
      if (!path) return std::nullopt;
      for (int d : *path) sim.apply(d);
      plan.insert(plan.end(), path->begin(), path->end());
      if (!sim.apply(it->dir).moved) return std::nullopt;
      plan.push_back(it->dir);
      if (static_cast<int>(plan.size()) > kPlanLimit) return std::nullopt;
    }
    if (!sim.solved()) return std::nullopt;
    g.plan_ = std::move(plan);
    return g;
  });
  return std::unique_ptr<Sokoban>(new Sokoban(std::move(s)));
}

bool Sokoban::solved() const {
  return std::all_of(boxes_.begin(), boxes_.end(), [&](const Cell& b) { return goals_.count(b) != 0; });
}

Sokoban::Move Sokoban::apply(int dir) {
  Move m;
  const Cell next = shifted(player_, dir);
  if (!walls_.in_bounds(next.first, next.second) || walls_(next.first, next.second)) return m;
  if (boxes_.count(next)) {
    const Cell beyond = shifted(next, dir);
    if (!walls_.in_bounds(beyond.first, beyond.second) || walls_(beyond.first, beyond.second) ||
        boxes_.count(beyond)) {
      return m;
    }
    boxes_.erase(next);
    boxes_.insert(beyond);
    if (goals_.count(next)) ++m.removed;
    if (goals_.count(beyond)) ++m.placed;
  }
  player_ = next;
  m.moved = true;
  return m;
}

GameStep Sokoban::step(const AgentMap<std::string>& actions, Rng&) {
  AgentOutcome out;
  const auto dir = direction_index(actions.at(kSingleAgent));
  if (!dir) {
    out.feedback = "Invalid action; expected up, down, left or right.";
  } else {
    const Move m = apply(*dir);
    if (!m.moved) {
      out.feedback = "Blocked; nothing moved.";
    } else {
      out.reward = m.placed * rewards_.box_on_goal + m.removed * rewards_.box_off_goal;
      out.feedback = "Moved " + std::string(kDirectionNames[static_cast<std::size_t>(*dir)]) + ".";
      if (m.placed) out.feedback += " A box reached a goal.";
      if (m.removed) out.feedback += " A box left a goal.";
      if (solved()) {
        out.reward += rewards_.solve;
        out.feedback += " All boxes are on goals.";
      }
    }
  }
  GameStep step;
  step.outcomes[kSingleAgent] = std::move(out);
  return step;
}

std::optional<std::vector<int>> Sokoban::solve(std::size_t max_states) const {
  auto key_of = [&](const Sokoban& s) { return s.state_digest(); };
  struct Node {
    std::string parent;
    int dir;
  };
  std::unordered_map<std::string, Node> seen;
  std::queue<Sokoban> q;
  const std::string start = key_of(*this);
  seen.emplace(start, Node{"", -1});
  q.push(*this);
  while (!q.empty() && seen.size() < max_states) {
    Sokoban cur = std::move(q.front());
    q.pop();
    const std::string ck = key_of(cur);
    if (cur.solved()) {
      std::vector<int> path;
      for (std::string k = ck; k != start;) {
        const Node& n = seen.at(k);
        path.push_back(n.dir);
        k = n.parent;
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (int d = 0; d < 4; ++d) {
      Sokoban nxt = cur;
      if (!nxt.apply(d).moved) continue;
      std::string nk = key_of(nxt);
      if (seen.count(nk)) continue;
      seen.emplace(nk, Node{ck, d});
      q.push(std::move(nxt));
    }
  }
  return std::nullopt;
}

void Sokoban::remember_plan(const std::vector<int>& plan) const {
  Sokoban sim = *this;
  for (int d : plan) {
    oracle_moves_[sim.state_digest()] = d;
    sim.apply(d);
  }
}

std::string Sokoban::oracle_action(const std::string&) const {
  if (oracle_moves_.empty() && !plan_.empty()) remember_plan(plan_);
  auto it = oracle_moves_.find(state_digest());
  if (it == oracle_moves_.end()) {
    if (auto path = solve()) {
      remember_plan(*path);
      it = oracle_moves_.find(state_digest());
    }
  }
  if (it == oracle_moves_.end()) return "up";
  return std::string(kDirectionNames[static_cast<std::size_t>(it->second)]);
}

std::string Sokoban::random_action(const std::string&, Rng& rng) const {
  return std::string(kDirectionNames[rng.index(4)]);
}

std::vector<std::string> Sokoban::text_rows() const {
  std::vector<std::string> rows;
  for (int r = 0; r < walls_.rows(); ++r) {
    std::string row;
    for (int c = 0; c < walls_.cols(); ++c) {
      const Cell cell{r, c};
      const bool goal = goals_.count(cell) != 0;
      if (walls_(r, c)) {
        row += '#';
      } else if (player_ == cell) {
        row += goal ? '+' : '@';
      } else if (boxes_.count(cell)) {
        row += goal ? '*' : '$';
      } else {
        row += goal ? '.' : '_';
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string Sokoban::state_digest() const {
  std::string out;
  for (const auto& row : text_rows()) out += row + "/";
  return out;
}

std::string Sokoban::question(const std::string&) const {
  return "Push every box onto a goal square. You (magenta) move one cell per turn and push a box "
         "by walking into it; boxes cannot be pulled or pushed into walls or other boxes. Reply "
         "with one move: up, down, left or right.";
}

std::string Sokoban::caption(const std::string&) const {
  std::string out =
      "Board " + detail::size_text(walls_.rows(), walls_.cols()) +
      " (# wall, _ floor, . goal, $ box, * box on goal, @ you, + you on goal):";
  for (const auto& row : text_rows()) out += "\n" + row;
  return out;
}

RasterImage Sokoban::render(const std::string&, const StyleConfig& style, Rng&) const {
  return render_grid(detail::grid_cells<int>(walls_,
                                             [&](int r, int c) -> GridCell {
                                               const Cell cell{r, c};
                                               const bool goal = goals_.count(cell) != 0;
                                               if (walls_(r, c)) return {"wall", ""};
                                               if (player_ == cell) return {"player", goal ? "+" : ""};
                                               if (boxes_.count(cell)) return {goal ? "box_on_goal" : "box", ""};
                                               return {goal ? "goal" : "floor", ""};
                                             }),
                     style);
}

}  // namespace gymv::envs
