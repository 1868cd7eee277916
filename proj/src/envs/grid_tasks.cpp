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
#include <deque>

#include "common.hpp"
#include "gymv/envs/singleturn.hpp"

namespace gymv::envs {

using detail::grid_cells;
using detail::grid_text;
using detail::size_text;

namespace {

/// Sizes of the 4-connected components of cells where `member` holds.
std::vector<int> component_sizes(const Grid<int>& grid, int member) {
  Grid<int> seen(grid.rows(), grid.cols(), 0);
  std::vector<int> sizes;
  std::deque<std::pair<int, int>> queue;
  for (int r = 0; r < grid.rows(); ++r) {
    for (int c = 0; c < grid.cols(); ++c) {
      if (grid(r, c) != member || seen(r, c)) continue;
      int size = 0;
      seen(r, c) = 1;
      queue.emplace_back(r, c);
      while (!queue.empty()) {
        auto [cr, cc] = queue.front();
        queue.pop_front();
        ++size;
        for (int d = 0; d < 4; ++d) {
          const int nr = cr + kDirRow[d];
          const int nc = cc + kDirCol[d];
          if (grid.in_bounds(nr, nc) && !seen(nr, nc) && grid(nr, nc) == member) {
            seen(nr, nc) = 1;
            queue.emplace_back(nr, nc);
          }
        }
      }
      sizes.push_back(size);
    }
  }
  return sizes;
}

Grid<int> random_binary_grid(int side, double p_one, Rng& rng) {
  Grid<int> grid(side, side, 0);
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) grid(r, c) = rng.bernoulli(p_one) ? 1 : 0;
  }
  return grid;
}

std::string random_int_text(Rng& rng, int lo, int hi) {
  return std::to_string(rng.uniform_int(lo, hi));
}

}  // namespace

// --- RottenOranges ----------------------------------------------------------

int RottenOranges::solve(const Grid<int>& grid) {
  Grid<int> time(grid.rows(), grid.cols(), -1);
  std::deque<std::pair<int, int>> queue;
  for (int r = 0; r < grid.rows(); ++r) {
    for (int c = 0; c < grid.cols(); ++c) {
      if (grid(r, c) == kRotten) {
        time(r, c) = 0;
        queue.emplace_back(r, c);
      }
    }
  }
  int minutes = 0;
  while (!queue.empty()) {
    auto [r, c] = queue.front();
    queue.pop_front();
    for (int d = 0; d < 4; ++d) {
      const int nr = r + kDirRow[d];
      const int nc = c + kDirCol[d];
      if (grid.in_bounds(nr, nc) && grid(nr, nc) == kFresh && time(nr, nc) < 0) {
        time(nr, nc) = time(r, c) + 1;
        minutes = std::max(minutes, time(nr, nc));
        queue.emplace_back(nr, nc);
      }
    }
  }
  for (int r = 0; r < grid.rows(); ++r) {
    for (int c = 0; c < grid.cols(); ++c) {
      if (grid(r, c) == kFresh && time(r, c) < 0) return -1;
    }
  }
  return minutes;
}

RottenOranges::Instance RottenOranges::generate(const Json& params, Rng& rng) {
  const int side = param_int(params, "grid_side");
  const double empty_prob = param_double(params, "empty_prob");
  const int sources = param_int(params, "rotten_sources");
  return generate_until_valid("rotten_oranges", [&]() -> std::optional<Instance> {
    Grid<int> grid(side, side, kEmpty);
    std::vector<std::pair<int, int>> oranges;
    for (int r = 0; r < side; ++r) {
      for (int c = 0; c < side; ++c) {
        if (!rng.bernoulli(empty_prob)) {
          grid(r, c) = kFresh;
          oranges.emplace_back(r, c);
        }
      }
    }
    if (static_cast<int>(oranges.size()) <= sources) return std::nullopt;
    rng.shuffle(oranges);
    for (int i = 0; i < sources; ++i) {
      grid(oranges[static_cast<std::size_t>(i)].first, oranges[static_cast<std::size_t>(i)].second) = kRotten;
    }
    return Instance{std::move(grid)};
  });
}

Verdict RottenOranges::verify(const Instance& inst, std::string_view answer) {
  return detail::verify_integer(answer, solve(inst.grid));
}

std::string RottenOranges::answer(const Instance& inst) { return std::to_string(solve(inst.grid)); }

std::string RottenOranges::question(const Instance&) {
  return "Each minute, every fresh orange (orange cell) that is 4-directionally adjacent to a "
         "rotten orange (purple cell) becomes rotten. What is the minimum number of minutes until "
         "no fresh orange remains? Answer with a single integer, or -1 if it is impossible.";
}

std::string RottenOranges::caption(const Instance& inst) {
  return "Grid " + size_text(inst.grid.rows(), inst.grid.cols()) +
         " (. = empty, F = fresh, R = rotten):\n" +
         grid_text<int>(inst.grid, [](const int& v) { return v == kFresh ? 'F' : v == kRotten ? 'R' : '.'; });
}

RasterImage RottenOranges::render(const Instance& inst, const StyleConfig& style) {
  return render_grid(grid_cells<int>(inst.grid,
                                     [&](int r, int c) {
                                       const int v = inst.grid(r, c);
                                       return GridCell{v == kFresh ? "fresh" : v == kRotten ? "rotten" : "empty", ""};
                                     }),
                     style);
}

std::string RottenOranges::random_answer(const Instance& inst, Rng& rng) {
  return random_int_text(rng, -1, 2 * inst.grid.rows());
}

// --- GridBfs ----------------------------------------------------------------

int GridBfs::solve(const Instance& inst) {
  const auto& grid = inst.grid;
  Grid<int> dist(grid.rows(), grid.cols(), -1);
  std::deque<std::pair<int, int>> queue{inst.start};
  dist(inst.start.first, inst.start.second) = 0;
  while (!queue.empty()) {
    auto [r, c] = queue.front();
    queue.pop_front();
    if (std::pair(r, c) == inst.target) return dist(r, c);
    for (int d = 0; d < 4; ++d) {
      const int nr = r + kDirRow[d];
      const int nc = c + kDirCol[d];
      if (grid.in_bounds(nr, nc) && grid(nr, nc) == kFloor && dist(nr, nc) < 0) {
        dist(nr, nc) = dist(r, c) + 1;
        queue.emplace_back(nr, nc);
      }
    }
  }
  return -1;
}

GridBfs::Instance GridBfs::generate(const Json& params, Rng& rng) {
  const int side = param_int(params, "grid_side");
  const double wall_prob = param_double(params, "wall_prob");
  return generate_until_valid("grid_bfs", [&]() -> std::optional<Instance> {
    Instance inst{random_binary_grid(side, wall_prob, rng), {}, {}};
    std::vector<std::pair<int, int>> floor;
    for (int r = 0; r < side; ++r) {
      for (int c = 0; c < side; ++c) {
        if (inst.grid(r, c) == kFloor) floor.emplace_back(r, c);
      }
    }
    if (floor.size() < 2) return std::nullopt;
    rng.shuffle(floor);
    inst.start = floor[0];
    inst.target = floor[1];
    if (solve(inst) < 1) return std::nullopt;
    return inst;
  });
}

Verdict GridBfs::verify(const Instance& inst, std::string_view answer) {
  return detail::verify_integer(answer, solve(inst));
}

std::string GridBfs::answer(const Instance& inst) { return std::to_string(solve(inst)); }

std::string GridBfs::question(const Instance&) {
  return "Moving one cell at a time up, down, left or right and never entering a wall (dark cell), "
         "what is the minimum number of moves from S to T? Answer with a single integer.";
}

std::string GridBfs::caption(const Instance& inst) {
  std::string body;
  for (int r = 0; r < inst.grid.rows(); ++r) {
    if (r) body += '\n';
    for (int c = 0; c < inst.grid.cols(); ++c) {
      char ch = inst.grid(r, c) == kWall ? '#' : '.';
      if (std::pair(r, c) == inst.start) ch = 'S';
      if (std::pair(r, c) == inst.target) ch = 'T';
      body += ch;
    }
  }
  return "Grid " + size_text(inst.grid.rows(), inst.grid.cols()) +
         " (. = floor, # = wall, S = start, T = target):\n" + body;
}

RasterImage GridBfs::render(const Instance& inst, const StyleConfig& style) {
  return render_grid(grid_cells<int>(inst.grid,
                                     [&](int r, int c) {
                                       if (std::pair(r, c) == inst.start) return GridCell{"start", "S"};
                                       if (std::pair(r, c) == inst.target) return GridCell{"target", "T"};
                                       return GridCell{inst.grid(r, c) == kWall ? "wall" : "floor", ""};
                                     }),
                     style);
}

std::string GridBfs::random_answer(const Instance& inst, Rng& rng) {
  return random_int_text(rng, 1, 2 * inst.grid.rows());
}

// --- BinaryMatrix -----------------------------------------------------------

int BinaryMatrix::solve(const Grid<int>& grid) {
  return static_cast<int>(component_sizes(grid, 1).size());
}

BinaryMatrix::Instance BinaryMatrix::generate(const Json& params, Rng& rng) {
  const int side = param_int(params, "grid_side");
  const double p_one = param_double(params, "one_prob");
  return Instance{random_binary_grid(side, p_one, rng)};
}

Verdict BinaryMatrix::verify(const Instance& inst, std::string_view answer) {
  return detail::verify_integer(answer, solve(inst.grid));
}

std::string BinaryMatrix::answer(const Instance& inst) { return std::to_string(solve(inst.grid)); }

std::string BinaryMatrix::question(const Instance&) {
  return "The image shows a binary matrix (cells marked 1 are filled). How many connected groups "
         "of 1-cells are there, counting cells as connected when they share an edge? Answer with a "
         "single integer.";
}

std::string BinaryMatrix::caption(const Instance& inst) {
  return "Matrix " + size_text(inst.grid.rows(), inst.grid.cols()) + ":\n" +
         grid_text<int>(inst.grid, [](const int& v) { return v ? '1' : '0'; });
}

RasterImage BinaryMatrix::render(const Instance& inst, const StyleConfig& style) {
  return render_grid(grid_cells<int>(inst.grid,
                                     [&](int r, int c) {
                                       return inst.grid(r, c) ? GridCell{"one", "1"} : GridCell{"empty", "0"};
                                     }),
                     style);
}

std::string BinaryMatrix::random_answer(const Instance& inst, Rng& rng) {
  return random_int_text(rng, 0, inst.grid.rows() * inst.grid.cols() / 3);
}

// --- LargestIsland ----------------------------------------------------------

int LargestIsland::solve(const Grid<int>& grid) {
  const auto sizes = component_sizes(grid, 1);
  return sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
}

LargestIsland::Instance LargestIsland::generate(const Json& params, Rng& rng) {
  const int side = param_int(params, "grid_side");
  const double p_land = param_double(params, "land_prob");
  return Instance{random_binary_grid(side, p_land, rng)};
}

Verdict LargestIsland::verify(const Instance& inst, std::string_view answer) {
  return detail::verify_integer(answer, solve(inst.grid));
}

std::string LargestIsland::answer(const Instance& inst) { return std::to_string(solve(inst.grid)); }

std::string LargestIsland::question(const Instance&) {
  return "The grid shows water (blue) and land (green). An island is a group of land cells "
         "connected up, down, left or right. What is the area (cell count) of the largest island? "
         "Answer with a single integer (0 if there is no land).";
}

std::string LargestIsland::caption(const Instance& inst) {
  return "Grid " + size_text(inst.grid.rows(), inst.grid.cols()) + " (L = land, W = water):\n" +
         grid_text<int>(inst.grid, [](const int& v) { return v ? 'L' : 'W'; });
}

RasterImage LargestIsland::render(const Instance& inst, const StyleConfig& style) {
  return render_grid(grid_cells<int>(inst.grid,
                                     [&](int r, int c) {
                                       return GridCell{inst.grid(r, c) ? "land" : "water", ""};
                                     }),
                     style);
}

std::string LargestIsland::random_answer(const Instance& inst, Rng& rng) {
  return random_int_text(rng, 0, inst.grid.rows() * inst.grid.cols() / 2);
}

}  // namespace gymv::envs
