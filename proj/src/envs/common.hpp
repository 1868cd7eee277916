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

// Helpers shared by the task implementations.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gymv/game.hpp"
#include "gymv/grid.hpp"
#include "gymv/parse.hpp"
#include "gymv/render.hpp"

namespace gymv::envs::detail {

/// Verdict for single-integer answers; unparseable text scores 0 with detail "parse".
inline Verdict verify_integer(std::string_view answer, long long expected) {
  const ActionParse parsed = parse_action(answer, Grammar::kInteger);
  const auto* a = as_action(parsed);
  if (a == nullptr) return Verdict::fail("parse");
  if (a->values.front() != expected) return Verdict::fail("wrong value");
  return Verdict::pass();
}

/// Character-matrix caption body: one line per row.
template <typename T>
std::string grid_text(const Grid<T>& grid, const std::function<char(const T&)>& symbol) {
  std::string out;
  for (int r = 0; r < grid.rows(); ++r) {
    if (r) out += '\n';
    for (int c = 0; c < grid.cols(); ++c) out += symbol(grid(r, c));
  }
  return out;
}

template <typename T>
GridCells grid_cells(const Grid<T>& grid, const std::function<GridCell(int, int)>& cell) {
  GridCells cells(static_cast<std::size_t>(grid.rows()));
  for (int r = 0; r < grid.rows(); ++r) {
    auto& row = cells[static_cast<std::size_t>(r)];
    row.reserve(static_cast<std::size_t>(grid.cols()));
    for (int c = 0; c < grid.cols(); ++c) row.push_back(cell(r, c));
  }
  return cells;
}

inline std::string size_text(int rows, int cols) {
  return std::to_string(rows) + "x" + std::to_string(cols);
}

inline std::string join_ints(const std::vector<int>& values, std::string_view sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

inline std::string pairs_text(const std::vector<std::pair<int, int>>& pairs) {
  std::string out;
  for (const auto& [a, b] : pairs) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return out;
}

}  // namespace gymv::envs::detail
