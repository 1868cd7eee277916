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
#include "common.hpp"
#include "gymv/envs/multiturn.hpp"

namespace gymv::envs {

namespace {

char other(char mark) { return mark == 'X' ? 'O' : 'X'; }
std::string agent_of(char mark) { return mark == 'X' ? TicTacToe::kX : TicTacToe::kO; }

bool full(const Grid<char>& b) {
  for (char v : b.cells()) {
    if (v == '.') return false;
  }
  return true;
}

}  // namespace

TicTacToe::TicTacToe(Rewards rewards) : rewards_(rewards) {}

TicTacToe TicTacToe::from_text(const std::vector<std::string>& rows, Rewards rewards) {
  TicTacToe t(rewards);
  if (rows.size() != 3) throw std::invalid_argument("tictactoe board needs 3 rows");
  int x = 0;
  int o = 0;
  for (int r = 0; r < 3; ++r) {
    if (rows[static_cast<std::size_t>(r)].size() != 3) throw std::invalid_argument("tictactoe row needs 3 cells");
    for (int c = 0; c < 3; ++c) {
      const char v = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (v != 'X' && v != 'O' && v != '.') throw std::invalid_argument("bad tictactoe symbol");
      t.board_(r, c) = v;
      x += v == 'X';
      o += v == 'O';
    }
  }
  if (x != o && x != o + 1) throw std::invalid_argument("impossible tictactoe position");
  t.turn_ = x == o ? 'X' : 'O';
  if (const char w = winner(t.board_)) {
    t.outcome_ = w;
    t.finished_ = true;
  } else if (full(t.board_)) {
    t.outcome_ = 'D';
    t.finished_ = true;
  }
  return t;
}

std::unique_ptr<TicTacToe> TicTacToe::generate(const Json& params, Rng&) {
  Rewards r;
  r.win = params.value("reward_win", r.win);
  r.loss = params.value("reward_loss", r.loss);
  r.draw = params.value("reward_draw", r.draw);
  r.forfeit = params.value("reward_forfeit", r.forfeit);
  return std::make_unique<TicTacToe>(r);
}

std::vector<std::string> TicTacToe::to_move() const {
  if (finished_) return {};
  return {agent_of(turn_)};
}

char TicTacToe::winner(const Grid<char>& b) {
  static constexpr int kLines[8][3][2] = {
      {{0, 0}, {0, 1}, {0, 2}}, {{1, 0}, {1, 1}, {1, 2}}, {{2, 0}, {2, 1}, {2, 2}},
      {{0, 0}, {1, 0}, {2, 0}}, {{0, 1}, {1, 1}, {2, 1}}, {{0, 2}, {1, 2}, {2, 2}},
      {{0, 0}, {1, 1}, {2, 2}}, {{0, 2}, {1, 1}, {2, 0}},
  };
  for (const auto& line : kLines) {
    const char v = b(line[0][0], line[0][1]);
    if (v != '.' && v == b(line[1][0], line[1][1]) && v == b(line[2][0], line[2][1])) return v;
  }
  return 0;
}

int TicTacToe::minimax(Grid<char>& board, char to_move) {
  if (const char w = winner(board)) return w == to_move ? 1 : -1;
  if (full(board)) return 0;
  int best = -2;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if (board(r, c) != '.') continue;
      board(r, c) = to_move;
      best = std::max(best, -minimax(board, other(to_move)));
      board(r, c) = '.';
      if (best == 1) return best;
    }
  }
  return best;
}

GameStep TicTacToe::step(const AgentMap<std::string>& actions, Rng&) {
  const char mover = turn_;
  const std::string me = agent_of(mover);
  const std::string them = agent_of(other(mover));
  const ActionParse parsed = parse_action(actions.at(me), Grammar::kPlace);
  const auto* a = as_action(parsed);
  GameStep step;

  std::string problem;
  int r = -1;
  int c = -1;
  if (a == nullptr) {
    problem = "unreadable move";
  } else {
    r = static_cast<int>(a->values[0]);
    c = static_cast<int>(a->values[1]);
    if (!board_.in_bounds(r, c)) {
      problem = "square off the board";
    } else if (board_(r, c) != '.') {
      problem = "square already taken";
    }
  }
  if (!problem.empty()) {
    finished_ = true;
    outcome_ = other(mover);
    step.outcomes[me] = {rewards_.forfeit, "You forfeit (" + problem + ").", Json{{"forfeit", problem}}};
    step.outcomes[them] = {rewards_.win, "Opponent forfeited (" + problem + "); you win.", Json{{"forfeit", problem}}};
    return step;
  }

  board_(r, c) = mover;
  const std::string placed = std::string(1, mover) + " placed at (" + std::to_string(r) + "," + std::to_string(c) + ").";
  if (winner(board_)) {
    finished_ = true;
    outcome_ = mover;
    step.outcomes[me] = {rewards_.win, placed + " Three in a row; you win.", Json::object()};
    step.outcomes[them] = {rewards_.loss, placed + " Three in a row; you lose.", Json::object()};
  } else if (full(board_)) {
    finished_ = true;
    outcome_ = 'D';
    step.outcomes[me] = {rewards_.draw, placed + " Board full; draw.", Json::object()};
    step.outcomes[them] = {rewards_.draw, placed + " Board full; draw.", Json::object()};
  } else {
    turn_ = other(mover);
    step.outcomes[them] = {0.0, placed + " Your turn.", Json::object()};
  }
  return step;
}

std::string TicTacToe::oracle_action(const std::string&) const {
  Grid<char> b = board_;
  int best = -2;
  Cell move{0, 0};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if (b(r, c) != '.') continue;
      b(r, c) = turn_;
      const int v = -minimax(b, other(turn_));
      b(r, c) = '.';
      if (v > best) {
        best = v;
        move = {r, c};
      }
    }
  }
  return "place " + std::to_string(move.first) + " " + std::to_string(move.second);
}

std::string TicTacToe::random_action(const std::string&, Rng& rng) const {
  std::vector<Cell> empty;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if (board_(r, c) == '.') empty.emplace_back(r, c);
    }
  }
  if (empty.empty()) return "place 0 0";
  const Cell m = empty[rng.index(empty.size())];
  return "place " + std::to_string(m.first) + " " + std::to_string(m.second);
}

std::string TicTacToe::state_digest() const {
  std::string out(board_.cells().begin(), board_.cells().end());
  out += '|';
  out += turn_;
  if (outcome_) out += outcome_;
  return out;
}

std::string TicTacToe::question(const std::string& agent) const {
  const char mark = agent == kX ? 'X' : 'O';
  return std::string("You play ") + mark + " in tic-tac-toe; three in a row wins. Row and column "
         "indices are printed on the border. Reply with one move: place r c.";
}

std::string TicTacToe::caption(const std::string&) const {
  std::string out = "Board 3x3 (X, O, . = empty):";
  for (int r = 0; r < 3; ++r) {
    out += '\n';
    for (int c = 0; c < 3; ++c) out += board_(r, c);
  }
  return out;
}

RasterImage TicTacToe::render(const std::string&, const StyleConfig& style, Rng&) const {
  return render_grid(detail::grid_cells<char>(board_,
                                              [&](int r, int c) -> GridCell {
                                                const char v = board_(r, c);
                                                if (v == '.') return {"empty", ""};
                                                return {"empty", std::string(1, v)};
                                              }),
                     style, GridOptions{.coordinates = true});
}

}  // namespace gymv::envs
