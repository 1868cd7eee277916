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
#include <array>

#include "common.hpp"
#include "gymv/envs/singleturn.hpp"

namespace gymv::envs {

namespace {

void hanoi(int n, int from, int to, int via, std::vector<std::pair<int, int>>& out) {
  if (n == 0) return;
  hanoi(n - 1, from, via, to, out);
  out.emplace_back(from, to);
  hanoi(n - 1, via, to, from, out);
}

}  // namespace

std::vector<std::pair<int, int>> TowerOfHanoi::solve(int discs) {
  std::vector<std::pair<int, int>> moves;
  hanoi(discs, 0, 2, 1, moves);
  return moves;
}

TowerOfHanoi::Instance TowerOfHanoi::generate(const Json& params, Rng&) {
  return Instance{param_int(params, "discs")};
}

Verdict TowerOfHanoi::verify(const Instance& inst, std::string_view answer) {
  const ActionParse parsed = parse_action(answer, Grammar::kPairSequence);
  const auto* a = as_action(parsed);
  if (a == nullptr) return Verdict::fail("parse");
  std::array<std::vector<int>, 3> pegs;
  for (int d = inst.discs; d >= 1; --d) pegs[0].push_back(d);
  for (auto [from, to] : a->pairs()) {
    if (from < 0 || from > 2 || to < 0 || to > 2 || from == to) return Verdict::fail("bad peg");
    auto& src = pegs[static_cast<std::size_t>(from)];
    auto& dst = pegs[static_cast<std::size_t>(to)];
    if (src.empty()) return Verdict::fail("empty peg");
    if (!dst.empty() && dst.back() < src.back()) return Verdict::fail("larger on smaller");
    dst.push_back(src.back());
    src.pop_back();
  }
  if (static_cast<int>(pegs[2].size()) != inst.discs) return Verdict::fail("not solved");
  return Verdict::pass();
}

std::string TowerOfHanoi::answer(const Instance& inst) { return detail::pairs_text(solve(inst.discs)); }

std::string TowerOfHanoi::question(const Instance& inst) {
  return "Move all " + std::to_string(inst.discs) +
         " discs from peg 0 to peg 2. Only the top disc of a peg may move and a disc may never rest "
         "on a smaller one. Answer with the moves as (from,to) pairs, e.g. (0,2) (0,1) ...";
}

std::string TowerOfHanoi::caption(const Instance& inst) {
  std::string out = "Peg 0 (bottom to top):";
  for (int d = inst.discs; d >= 1; --d) out += " " + std::to_string(d);
  out += "\nPeg 1: empty\nPeg 2: empty\nDisc 1 is the smallest.";
  return out;
}

RasterImage TowerOfHanoi::render(const Instance& inst, const StyleConfig& style) {
  const int width = style.canvas_px;
  const int disc_h = 22;
  const int base_y = style.canvas_px * 3 / 4;
  const int height = base_y + 48;
  if (base_y - (inst.discs + 2) * disc_h < 0) throw RenderError("too many discs to render");
  Canvas canvas(width, height, style.background);
  const int peg_gap = width / 3;
  const int max_w = peg_gap - 16;
  const int min_w = 30;
  const Rgb wood = style.color("box");
  canvas.fill_rect(8, base_y, width - 16, 8, wood);
  for (int p = 0; p < 3; ++p) {
    const int cx = peg_gap / 2 + p * peg_gap;
    canvas.fill_rect(cx - 3, base_y - (inst.discs + 1) * disc_h, 6, (inst.discs + 1) * disc_h, wood);
    canvas.text_centered(cx, base_y + 28, std::to_string(p), style.ink, style.font_scale);
  }
  const int cx = peg_gap / 2;
  for (int i = 0; i < inst.discs; ++i) {
    const int d = inst.discs - i;
    const int w = inst.discs == 1 ? max_w : min_w + (max_w - min_w) * (d - 1) / (inst.discs - 1);
    const int y = base_y - (i + 1) * disc_h;
    canvas.fill_rect(cx - w / 2, y + 1, w, disc_h - 2, series_color(static_cast<std::size_t>(d - 1)));
    canvas.stroke_rect(cx - w / 2, y + 1, w, disc_h - 2, style.ink, 1);
    canvas.text_centered(cx, y + disc_h / 2, std::to_string(d), style.ink, style.font_scale);
  }
  return std::move(canvas).image();
}

std::string TowerOfHanoi::random_answer(const Instance& inst, Rng& rng) {
  const std::size_t count = (std::size_t{1} << inst.discs) - 1;
  std::vector<std::pair<int, int>> moves;
  for (std::size_t i = 0; i < count; ++i) {
    const int from = static_cast<int>(rng.index(3));
    const int to = (from + 1 + static_cast<int>(rng.index(2))) % 3;
    moves.emplace_back(from, to);
  }
  return detail::pairs_text(moves);
}

}  // namespace gymv::envs
