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

#include <string_view>

#include "gymv/image.hpp"

namespace gymv {

/// Immediate-mode drawing onto a RasterImage. Integer coordinates, no
/// anti-aliasing, so output is bit-stable across machines.
class Canvas {
 public:
  Canvas(int width, int height, Rgb background);

  int width() const { return image_.width(); }
  int height() const { return image_.height(); }

  void fill_rect(int x, int y, int w, int h, Rgb color);
  void stroke_rect(int x, int y, int w, int h, Rgb color, int thickness = 1);
  void line(int x0, int y0, int x1, int y1, Rgb color, int thickness = 1);
  void fill_circle(int cx, int cy, int radius, Rgb color);
  void stroke_circle(int cx, int cy, int radius, Rgb color, int thickness = 1);
  /// Top-left anchored text in the embedded bitmap font.
  void text(int x, int y, std::string_view s, Rgb color, int scale = 1);
  /// Text centered on (cx, cy).
  void text_centered(int cx, int cy, std::string_view s, Rgb color, int scale = 1);

  static int text_width(std::string_view s, int scale = 1);
  static int text_height(int scale = 1);

  const RasterImage& image() const& { return image_; }
  RasterImage image() && { return std::move(image_); }

 private:
  void brush(int x, int y, Rgb color, int thickness);

  RasterImage image_;
};

}  // namespace gymv
