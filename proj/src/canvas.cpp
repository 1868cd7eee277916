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
#include "gymv/canvas.hpp"

#include <cstdlib>

#include "gymv/font_data.hpp"

namespace gymv {

Canvas::Canvas(int width, int height, Rgb background) : image_(width, height, background) {}

void Canvas::fill_rect(int x, int y, int w, int h, Rgb color) {
  for (int yy = y; yy < y + h; ++yy) {
    for (int xx = x; xx < x + w; ++xx) image_.plot(xx, yy, color);
  }
}

void Canvas::stroke_rect(int x, int y, int w, int h, Rgb color, int thickness) {
  fill_rect(x, y, w, thickness, color);
  fill_rect(x, y + h - thickness, w, thickness, color);
  fill_rect(x, y, thickness, h, color);
  fill_rect(x + w - thickness, y, thickness, h, color);
}

void Canvas::brush(int x, int y, Rgb color, int thickness) {
  const int lo = -(thickness - 1) / 2;
  const int hi = thickness / 2;
  for (int dy = lo; dy <= hi; ++dy) {
    for (int dx = lo; dx <= hi; ++dx) image_.plot(x + dx, y + dy, color);
  }
}

void Canvas::line(int x0, int y0, int x1, int y1, Rgb color, int thickness) {
  // Bresenham.
  const int dx = std::abs(x1 - x0);
  const int dy = -std::abs(y1 - y0);
  const int sx = x0 < x1 ? 1 : -1;
  const int sy = y0 < y1 ? 1 : -1;
  int err = dx + dy;
  while (true) {
    brush(x0, y0, color, thickness);
    if (x0 == x1 && y0 == y1) break;
    const int e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      x0 += sx;
    }
    if (e2 <= dx) {
      err += dx;
      y0 += sy;
    }
  }
}

void Canvas::fill_circle(int cx, int cy, int radius, Rgb color) {
  const int r2 = radius * radius;
  for (int dy = -radius; dy <= radius; ++dy) {
    for (int dx = -radius; dx <= radius; ++dx) {
      if (dx * dx + dy * dy <= r2) image_.plot(cx + dx, cy + dy, color);
    }
  }
}

void Canvas::stroke_circle(int cx, int cy, int radius, Rgb color, int thickness) {
  const int outer = radius * radius;
  const int inner = (radius - thickness) * (radius - thickness);
  for (int dy = -radius; dy <= radius; ++dy) {
    for (int dx = -radius; dx <= radius; ++dx) {
      const int d = dx * dx + dy * dy;
      if (d <= outer && d > inner) image_.plot(cx + dx, cy + dy, color);
    }
  }
}

int Canvas::text_width(std::string_view s, int scale) {
  return static_cast<int>(s.size()) * font::kGlyphWidth * scale;
}

int Canvas::text_height(int scale) { return font::kGlyphHeight * scale; }

void Canvas::text(int x, int y, std::string_view s, Rgb color, int scale) {
  int pen = x;
  for (char ch : s) {
    int code = static_cast<unsigned char>(ch);
    if (code < font::kFirstChar || code > font::kLastChar) code = '?';
    const auto& glyph = font::kGlyphs[static_cast<std::size_t>(code - font::kFirstChar)];
    for (int row = 0; row < font::kGlyphHeight; ++row) {
      for (int col = 0; col < font::kGlyphWidth; ++col) {
        if (glyph[static_cast<std::size_t>(row)] & (1u << col)) {
          fill_rect(pen + col * scale, y + row * scale, scale, scale, color);
        }
      }
    }
    pen += font::kGlyphWidth * scale;
  }
}

void Canvas::text_centered(int cx, int cy, std::string_view s, Rgb color, int scale) {
  text(cx - text_width(s, scale) / 2, cy - text_height(scale) / 2, s, color, scale);
}

}  // namespace gymv
