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

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gymv {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(Rgb, Rgb) = default;
};

/// Largest channel difference between two colors.
inline int channel_distance(Rgb a, Rgb b) {
  auto d = [](std::uint8_t x, std::uint8_t y) { return x > y ? x - y : y - x; };
  int m = d(a.r, b.r);
  m = std::max(m, d(a.g, b.g));
  return std::max(m, d(a.b, b.b));
}

/// Row-major RGB8 raster.
class RasterImage {
 public:
  RasterImage() = default;
  RasterImage(int width, int height, Rgb fill = {255, 255, 255});

  int width() const { return width_; }
  int height() const { return height_; }
  bool empty() const { return width_ == 0 || height_ == 0; }

  Rgb at(int x, int y) const {
    const std::size_t i = offset(x, y);
    return {pixels_[i], pixels_[i + 1], pixels_[i + 2]};
  }
  void set(int x, int y, Rgb c) {
    const std::size_t i = offset(x, y);
    pixels_[i] = c.r;
    pixels_[i + 1] = c.g;
    pixels_[i + 2] = c.b;
  }
  /// Bounds-checked write; silently clips.
  void plot(int x, int y, Rgb c) {
    if (x >= 0 && y >= 0 && x < width_ && y < height_) set(x, y, c);
  }

  std::span<const std::uint8_t> bytes() const { return pixels_; }

  friend bool operator==(const RasterImage&, const RasterImage&) = default;

 private:
  std::size_t offset(int x, int y) const {
    return (static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
            static_cast<std::size_t>(x)) * 3;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

class ImageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// PNG settings are pinned: 8-bit RGB, no interlace, filter None, zlib level 6.
std::vector<std::uint8_t> encode_png(const RasterImage& image);
/// Decodes any non-interlaced 8-bit gray/RGB/RGBA PNG into RGB8.
/// Throws ImageError on malformed input.
RasterImage decode_png(std::span<const std::uint8_t> png);

std::string base64_encode(std::span<const std::uint8_t> data);
/// Throws ImageError on characters outside the standard alphabet.
std::vector<std::uint8_t> base64_decode(std::string_view text);

inline std::string png_base64(const RasterImage& image) {
  return base64_encode(encode_png(image));
}

}  // namespace gymv
