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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gymv {

/// Dense row-major 2D array.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(int rows, int cols, T fill = T{})
      : rows_(rows), cols_(cols), cells_(static_cast<std::size_t>(rows * cols), fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool in_bounds(int r, int c) const { return r >= 0 && c >= 0 && r < rows_ && c < cols_; }

  T& operator()(int r, int c) { return cells_[index(r, c)]; }
  const T& operator()(int r, int c) const { return cells_[index(r, c)]; }

  const std::vector<T>& cells() const { return cells_; }

  /// Builds a grid from nested rows; throws std::invalid_argument if ragged.
  static Grid from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty()) return {};
    Grid g(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int r = 0; r < g.rows_; ++r) {
      if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != g.cols_) {
        throw std::invalid_argument("ragged grid");
      }
      for (int c = 0; c < g.cols_; ++c) g(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    return g;
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> cells_;
};

inline constexpr int kDirRow[4] = {-1, 1, 0, 0};
inline constexpr int kDirCol[4] = {0, 0, -1, 1};

}  // namespace gymv
