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

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gymv/canvas.hpp"
#include "gymv/image.hpp"

namespace gymv {

class RenderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Semantic-role palette. Distinct roles differ by at least 64 in some channel.
using Palette = std::map<std::string, Rgb>;

const Palette& default_palette();

struct StyleConfig {
  int cell_px = 32;
  int max_px = 768;
  int font_scale = 1;
  /// Side length of square canvases used for graphs, plots and diagrams.
  int canvas_px = 512;
  Rgb gridline{0, 0, 0};
  Rgb ink{0, 0, 0};
  Rgb background{255, 255, 255};
  Palette palette = default_palette();

  Rgb color(const std::string& role) const;
};

struct GridCell {
  std::string role = "empty";
  std::string glyph;
};

using GridCells = std::vector<std::vector<GridCell>>;

struct GridOptions {
  /// Adds a one-cell band on the top and left carrying 0-based row/column indices.
  bool coordinates = false;
  /// Draws thick separators every `block` cells (sudoku boxes); 0 disables.
  int block = 0;
};

/// Uniform color block per cell with 1px border and optional centered glyph.
/// Throws RenderError on an empty matrix or when the image would exceed max_px.
RasterImage render_grid(const GridCells& cells, const StyleConfig& style,
                        const GridOptions& options = {});

/// Pixel rectangle occupied by cell (row, col) in a render_grid image.
struct CellRect {
  int x, y, size;
};
CellRect grid_cell_rect(int row, int col, const StyleConfig& style, const GridOptions& options = {});

struct GraphEdge {
  int u = 0;
  int v = 0;
  std::optional<int> weight;
};

struct GraphDrawing {
  int node_count = 0;
  std::vector<GraphEdge> edges;
  std::optional<int> source;
  std::optional<int> target;
};

struct LabelBox {
  int x, y, w, h;
  bool intersects(const LabelBox& o) const {
    return x < o.x + o.w && o.x < x + w && y < o.y + o.h && o.y < y + h;
  }
};

struct GraphLayout {
  std::vector<std::pair<int, int>> node_centers;
  int node_radius = 0;
  std::vector<LabelBox> node_labels;
  std::vector<LabelBox> weight_labels;
};

/// Circular layout: node i at angle 2*pi*i/N, starting at twelve o'clock.
GraphLayout layout_graph(const GraphDrawing& graph, const StyleConfig& style);
RasterImage render_graph(const GraphDrawing& graph, const StyleConfig& style);

struct Line2 {
  double slope = 0;
  double intercept = 0;
};

struct Viewport {
  double x_min = -10, x_max = 10, y_min = -10, y_max = 10;
};

/// World-to-pixel mapping used by render_lines and render_points.
struct PlotTransform {
  Viewport view;
  int size = 512;
  int pad = 24;
  double px(double x) const;
  double py(double y) const;
};

RasterImage render_lines(const std::vector<Line2>& lines, const Viewport& view,
                         const StyleConfig& style);
/// Scatter plot of labeled integer points with axes.
RasterImage render_points(const std::vector<std::pair<int, int>>& points, const Viewport& view,
                          const StyleConfig& style);

/// Distinct stroke colors for indexed series (lines).
Rgb series_color(std::size_t index);

}  // namespace gymv
