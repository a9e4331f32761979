/*
 * Copyright 2026 The riley Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "riley/orders.hpp"

namespace riley {

/// Axis-aligned window of the complex plane.
struct Viewport {
  double x_min = -5.0;
  double x_max = 5.0;
  double y_min = -5.0;
  double y_max = 5.0;

  /// Throws ValidationError for empty or non-finite windows.
  void validate() const;
  /// Parses "xmin,xmax,ymin,ymax".
  static Viewport parse(const std::string& text);
};

using Rgb = std::array<std::uint8_t, 3>;

/// 8-bit RGB image, row-major from the top-left corner.
class Raster {
 public:
  static constexpr int kMaxSide = 8192;

  Raster(int width, int height, Rgb fill = {0, 0, 0});

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  Rgb pixel(int x, int y) const;
  void set(int x, int y, Rgb color) noexcept;  // ignores out-of-range pixels
  std::span<const std::uint8_t> data() const noexcept { return data_; }

  friend bool operator==(const Raster&, const Raster&) = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> data_;
};

/// Pixel holding z, or {-1, -1} when z falls outside the viewport.
/// Columns grow with Re z, rows grow downwards with -Im z.
std::array<int, 2> to_pixel(const Viewport& view, int width, int height, Complex z) noexcept;

/// Marks every pixel crossed by the polyline, sampling at half-pixel steps.
void draw_polyline(Raster& raster, const Viewport& view, std::span<const Complex> points,
                   Rgb color);
void draw_circle(Raster& raster, const Viewport& view, Complex center, double radius, Rgb color);
/// A plus-shaped mark of the given arm length in pixels.
void draw_marker(Raster& raster, const Viewport& view, Complex z, int arm, Rgb color);

/// Binary PPM (P6) with maxval 255.
void write_ppm(std::ostream& out, const Raster& raster);
std::string encode_ppm(const Raster& raster);
void save_ppm(const std::string& path, const Raster& raster);

}  // namespace riley
