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
#include "gymv/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace gymv {

const Palette& default_palette() {
  static const Palette palette = {
      {"empty", {250, 250, 250}},   {"wall", {50, 50, 50}},        {"floor", {225, 210, 170}},
      {"water", {30, 110, 230}},    {"land", {40, 170, 60}},       {"fresh", {255, 160, 0}},
      {"rotten", {130, 70, 150}},   {"start", {0, 200, 200}},      {"target", {220, 30, 30}},
      {"hole", {20, 20, 120}},      {"ice", {170, 210, 250}},      {"goal", {240, 230, 90}},
      {"box", {150, 90, 30}},       {"box_on_goal", {160, 240, 40}}, {"player", {230, 60, 200}},
      {"hidden", {160, 160, 160}},  {"mine", {120, 0, 0}},         {"one", {90, 40, 240}},
      {"tile", {255, 110, 130}},
  };
  return palette;
}

Rgb StyleConfig::color(const std::string& role) const {
  auto it = palette.find(role);
  if (it == palette.end()) throw RenderError("no palette entry for role '" + role + "'");
  return it->second;
}

namespace {

Rgb glyph_color_on(Rgb fill) {
  const int luma = (299 * fill.r + 587 * fill.g + 114 * fill.b) / 1000;
  return luma < 110 ? Rgb{255, 255, 255} : Rgb{0, 0, 0};
}

void check_size(int w, int h, const StyleConfig& style) {
  if (w > style.max_px || h > style.max_px) {
    throw RenderError("image " + std::to_string(w) + "x" + std::to_string(h) +
                      " exceeds the " + std::to_string(style.max_px) + "px limit");
  }
}

}  // namespace

CellRect grid_cell_rect(int row, int col, const StyleConfig& style, const GridOptions& options) {
  const int band = options.coordinates ? style.cell_px : 0;
  return {band + col * style.cell_px, band + row * style.cell_px, style.cell_px};
}

RasterImage render_grid(const GridCells& cells, const StyleConfig& style, const GridOptions& options) {
  if (cells.empty() || cells.front().empty()) throw RenderError("render_grid: empty matrix");
  const int rows = static_cast<int>(cells.size());
  const int cols = static_cast<int>(cells.front().size());
  const int band = options.coordinates ? style.cell_px : 0;
  const int width = band + cols * style.cell_px;
  const int height = band + rows * style.cell_px;
  check_size(width, height, style);

  Canvas canvas(width, height, style.background);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(cells[static_cast<std::size_t>(r)].size()) != cols) {
      throw RenderError("render_grid: ragged matrix");
    }
    for (int c = 0; c < cols; ++c) {
      const auto& cell = cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      const CellRect rect = grid_cell_rect(r, c, style, options);
      const Rgb fill = style.color(cell.role);
      canvas.fill_rect(rect.x, rect.y, rect.size, rect.size, fill);
      canvas.stroke_rect(rect.x, rect.y, rect.size, rect.size, style.gridline);
      if (!cell.glyph.empty()) {
        canvas.text_centered(rect.x + rect.size / 2, rect.y + rect.size / 2, cell.glyph,
                             glyph_color_on(fill), style.font_scale);
      }
    }
  }
  if (options.block > 0) {
    for (int k = 0; k <= rows; k += options.block) {
      canvas.fill_rect(band, band + k * style.cell_px - 1, cols * style.cell_px, 3, style.gridline);
    }
    for (int k = 0; k <= cols; k += options.block) {
      canvas.fill_rect(band + k * style.cell_px - 1, band, 3, rows * style.cell_px, style.gridline);
    }
  }
  if (options.coordinates) {
    for (int c = 0; c < cols; ++c) {
      canvas.text_centered(band + c * style.cell_px + style.cell_px / 2, style.cell_px / 2,
                           std::to_string(c), style.ink, style.font_scale);
    }
    for (int r = 0; r < rows; ++r) {
      canvas.text_centered(style.cell_px / 2, band + r * style.cell_px + style.cell_px / 2,
                           std::to_string(r), style.ink, style.font_scale);
    }
  }
  return std::move(canvas).image();
}

namespace {

LabelBox text_box(int cx, int cy, const std::string& text, int scale) {
  const int w = Canvas::text_width(text, scale) + 4;
  const int h = Canvas::text_height(scale) + 2;
  return {cx - w / 2, cy - h / 2, w, h};
}

bool collides(const LabelBox& box, const std::vector<LabelBox>& others) {
  return std::any_of(others.begin(), others.end(),
                     [&](const LabelBox& o) { return box.intersects(o); });
}

}  // namespace

GraphLayout layout_graph(const GraphDrawing& graph, const StyleConfig& style) {
  GraphLayout layout;
  const int size = style.canvas_px;
  layout.node_radius = 14;
  const double radius = size / 2.0 - layout.node_radius - 10;
  const double center = size / 2.0;
  for (int i = 0; i < graph.node_count; ++i) {
    const double angle = 2.0 * std::numbers::pi * i / graph.node_count - std::numbers::pi / 2;
    const int x = static_cast<int>(std::lround(center + radius * std::cos(angle)));
    const int y = static_cast<int>(std::lround(center + radius * std::sin(angle)));
    layout.node_centers.emplace_back(x, y);
    const int r = layout.node_radius;
    layout.node_labels.push_back({x - r, y - r, 2 * r + 1, 2 * r + 1});
  }
  static constexpr std::array<double, 13> kSlide = {0.5,  0.42, 0.58, 0.34, 0.66, 0.46, 0.54,
                                                    0.38, 0.62, 0.3,  0.7,  0.26, 0.74};
  for (const auto& e : graph.edges) {
    if (!e.weight) continue;
    const auto [x0, y0] = layout.node_centers[static_cast<std::size_t>(e.u)];
    const auto [x1, y1] = layout.node_centers[static_cast<std::size_t>(e.v)];
    const std::string text = std::to_string(*e.weight);
    std::optional<LabelBox> chosen;
    for (double t : kSlide) {
      const int cx = static_cast<int>(std::lround(x0 + t * (x1 - x0)));
      const int cy = static_cast<int>(std::lround(y0 + t * (y1 - y0)));
      const LabelBox box = text_box(cx, cy, text, style.font_scale);
      if (!collides(box, layout.weight_labels) && !collides(box, layout.node_labels)) {
        chosen = box;
        break;
      }
    }
    if (!chosen) {
      chosen = text_box((x0 + x1) / 2, (y0 + y1) / 2, text, style.font_scale);
    }
    layout.weight_labels.push_back(*chosen);
  }
  return layout;
}

RasterImage render_graph(const GraphDrawing& graph, const StyleConfig& style) {
  if (graph.node_count < 1) throw RenderError("render_graph: need at least one node");
  const int size = style.canvas_px;
  check_size(size, size, style);
  const GraphLayout layout = layout_graph(graph, style);
  Canvas canvas(size, size, style.background);
  const Rgb edge_color{90, 90, 90};
  for (const auto& e : graph.edges) {
    const auto [x0, y0] = layout.node_centers[static_cast<std::size_t>(e.u)];
    const auto [x1, y1] = layout.node_centers[static_cast<std::size_t>(e.v)];
    canvas.line(x0, y0, x1, y1, edge_color, 2);
  }
  std::size_t label = 0;
  for (const auto& e : graph.edges) {
    if (!e.weight) continue;
    const LabelBox& box = layout.weight_labels[label++];
    canvas.fill_rect(box.x, box.y, box.w, box.h, style.background);
    canvas.stroke_rect(box.x, box.y, box.w, box.h, edge_color);
    canvas.text(box.x + 2, box.y + 1, std::to_string(*e.weight), style.ink, style.font_scale);
  }
  for (int i = 0; i < graph.node_count; ++i) {
    const auto [x, y] = layout.node_centers[static_cast<std::size_t>(i)];
    std::string role = "ice";
    if (graph.source == i) role = "start";
    if (graph.target == i) role = "target";
    canvas.fill_circle(x, y, layout.node_radius, style.color(role));
    canvas.stroke_circle(x, y, layout.node_radius, style.ink, 2);
    canvas.text_centered(x, y, std::to_string(i), style.ink, style.font_scale);
  }
  return std::move(canvas).image();
}

double PlotTransform::px(double x) const {
  return pad + (x - view.x_min) / (view.x_max - view.x_min) * (size - 1 - 2 * pad);
}

double PlotTransform::py(double y) const {
  return pad + (view.y_max - y) / (view.y_max - view.y_min) * (size - 1 - 2 * pad);
}

Rgb series_color(std::size_t index) {
  static constexpr std::array<Rgb, 16> kColors = {{
      {220, 30, 30},  {30, 110, 230}, {20, 150, 40},  {230, 120, 0},
      {150, 40, 200}, {0, 160, 160},  {200, 30, 150}, {120, 90, 0},
      {0, 0, 0},      {90, 90, 255},  {255, 60, 100}, {0, 110, 60},
      {170, 120, 40}, {90, 0, 120},   {0, 70, 140},   {140, 140, 0},
  }};
  return kColors[index % kColors.size()];
}

namespace {

void draw_axes(Canvas& canvas, const PlotTransform& tf) {
  const Rgb axis{170, 170, 170};
  const int lo = tf.pad;
  const int hi = tf.size - 1 - tf.pad;
  canvas.stroke_rect(lo, lo, hi - lo + 1, hi - lo + 1, axis);
  if (tf.view.y_min <= 0 && 0 <= tf.view.y_max) {
    const int y = static_cast<int>(std::lround(tf.py(0)));
    canvas.line(lo, y, hi, y, axis);
  }
  if (tf.view.x_min <= 0 && 0 <= tf.view.x_max) {
    const int x = static_cast<int>(std::lround(tf.px(0)));
    canvas.line(x, lo, x, hi, axis);
  }
}

}  // namespace

RasterImage render_lines(const std::vector<Line2>& lines, const Viewport& view,
                         const StyleConfig& style) {
  if (lines.empty()) throw RenderError("render_lines: need at least one line");
  if (!(view.x_max > view.x_min) || !(view.y_max > view.y_min) || !std::isfinite(view.x_min) ||
      !std::isfinite(view.x_max) || !std::isfinite(view.y_min) || !std::isfinite(view.y_max)) {
    throw RenderError("render_lines: viewport must be finite and non-degenerate");
  }
  const int size = style.canvas_px;
  check_size(size, size, style);
  PlotTransform tf{view, size};
  Canvas canvas(size, size, style.background);
  draw_axes(canvas, tf);

  struct Visible {
    double x0, x1;
  };
  std::vector<std::optional<Visible>> spans;
  for (const auto& ln : lines) {
    double x0 = view.x_min;
    double x1 = view.x_max;
    if (ln.slope == 0) {
      if (ln.intercept < view.y_min || ln.intercept > view.y_max) {
        spans.emplace_back();
        continue;
      }
    } else {
      double a = (view.y_min - ln.intercept) / ln.slope;
      double b = (view.y_max - ln.intercept) / ln.slope;
      if (a > b) std::swap(a, b);
      x0 = std::max(x0, a);
      x1 = std::min(x1, b);
    }
    if (x0 > x1) {
      spans.emplace_back();
      continue;
    }
    spans.push_back(Visible{x0, x1});
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!spans[i]) continue;
    const auto& ln = lines[i];
    const auto [x0, x1] = *spans[i];
    canvas.line(static_cast<int>(std::lround(tf.px(x0))),
                static_cast<int>(std::lround(tf.py(ln.slope * x0 + ln.intercept))),
                static_cast<int>(std::lround(tf.px(x1))),
                static_cast<int>(std::lround(tf.py(ln.slope * x1 + ln.intercept))),
                series_color(i), 2);
  }
  // Index labels near the right end of each visible segment, slid left on collision.
  std::vector<LabelBox> placed;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!spans[i]) continue;
    const auto& ln = lines[i];
    const auto [x0, x1] = *spans[i];
    const std::string text = std::to_string(i + 1);
    LabelBox best{};
    bool found = false;
    for (int step = 0; step <= 20 && !found; ++step) {
      const double t = 0.92 - 0.04 * step;
      const double x = x0 + t * (x1 - x0);
      const int cx = static_cast<int>(std::lround(tf.px(x)));
      const int cy = static_cast<int>(std::lround(tf.py(ln.slope * x + ln.intercept)));
      const LabelBox box = text_box(cx, cy, text, style.font_scale);
      if (step == 0) best = box;
      if (!collides(box, placed)) {
        best = box;
        found = true;
      }
    }
    placed.push_back(best);
    canvas.fill_rect(best.x, best.y, best.w, best.h, style.background);
    canvas.stroke_rect(best.x, best.y, best.w, best.h, series_color(i));
    canvas.text(best.x + 2, best.y + 1, text, series_color(i), style.font_scale);
  }
  return std::move(canvas).image();
}

RasterImage render_points(const std::vector<std::pair<int, int>>& points, const Viewport& view,
                          const StyleConfig& style) {
  const int size = style.canvas_px;
  check_size(size, size, style);
  PlotTransform tf{view, size};
  Canvas canvas(size, size, style.background);
  const Rgb faint{225, 225, 225};
  for (int x = static_cast<int>(std::ceil(view.x_min)); x <= view.x_max; ++x) {
    const int px = static_cast<int>(std::lround(tf.px(x)));
    canvas.line(px, tf.pad, px, size - 1 - tf.pad, faint);
  }
  for (int y = static_cast<int>(std::ceil(view.y_min)); y <= view.y_max; ++y) {
    const int py = static_cast<int>(std::lround(tf.py(y)));
    canvas.line(tf.pad, py, size - 1 - tf.pad, py, faint);
  }
  draw_axes(canvas, tf);
  for (const auto& [x, y] : points) {
    canvas.fill_circle(static_cast<int>(std::lround(tf.px(x))),
                       static_cast<int>(std::lround(tf.py(y))), 5, style.color("target"));
  }
  return std::move(canvas).image();
}

}  // namespace gymv
