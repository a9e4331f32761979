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

#include "riley/raster.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <fmt/format.h>

#include "riley/error.hpp"

namespace riley {

void Viewport::validate() const {
  bool finite = std::isfinite(x_min) && std::isfinite(x_max) && std::isfinite(y_min) &&
                std::isfinite(y_max);
  if (!finite || !(x_min < x_max) || !(y_min < y_max))
    throw ValidationError("viewport must satisfy xmin < xmax and ymin < ymax");
}

Viewport Viewport::parse(const std::string& text) {
  Viewport v;
  std::istringstream in(text);
  char c1 = 0, c2 = 0, c3 = 0;
  if (!(in >> v.x_min >> c1 >> v.x_max >> c2 >> v.y_min >> c3 >> v.y_max) || c1 != ',' ||
      c2 != ',' || c3 != ',' || !(in >> std::ws).eof())
    throw ValidationError("viewport must look like xmin,xmax,ymin,ymax: '" + text + "'");
  v.validate();
  return v;
}

Raster::Raster(int width, int height, Rgb fill) : width_(width), height_(height) {
  if (width < 1 || height < 1 || width > kMaxSide || height > kMaxSide)
    throw ValidationError(fmt::format("raster size {}x{} outside 1..{}", width, height, kMaxSide));
  data_.resize(static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * 3);
  for (std::size_t i = 0; i < data_.size(); i += 3) std::copy(fill.begin(), fill.end(), &data_[i]);
}

Rgb Raster::pixel(int x, int y) const {
  if (x < 0 || y < 0 || x >= width_ || y >= height_) throw ValidationError("pixel out of range");
  std::size_t i = (static_cast<std::size_t>(y) * width_ + x) * 3;
  return {data_[i], data_[i + 1], data_[i + 2]};
}

void Raster::set(int x, int y, Rgb color) noexcept {
  if (x < 0 || y < 0 || x >= width_ || y >= height_) return;
  std::size_t i = (static_cast<std::size_t>(y) * width_ + x) * 3;
  std::copy(color.begin(), color.end(), &data_[i]);
}

std::array<int, 2> to_pixel(const Viewport& view, int width, int height, Complex z) noexcept {
  double fx = (z.real() - view.x_min) / (view.x_max - view.x_min);
  double fy = (view.y_max - z.imag()) / (view.y_max - view.y_min);
  if (!(fx >= 0.0 && fx <= 1.0 && fy >= 0.0 && fy <= 1.0)) return {-1, -1};
  int x = std::min(width - 1, static_cast<int>(std::floor(fx * width)));
  int y = std::min(height - 1, static_cast<int>(std::floor(fy * height)));
  return {x, y};
}

void draw_polyline(Raster& raster, const Viewport& view, std::span<const Complex> points,
                   Rgb color) {
  const double pixel = std::min((view.x_max - view.x_min) / raster.width(),
                                (view.y_max - view.y_min) / raster.height());
  auto plot = [&](Complex z) {
    auto [x, y] = to_pixel(view, raster.width(), raster.height(), z);
    if (x >= 0) raster.set(x, y, color);
  };
  if (points.size() == 1) plot(points[0]);
  for (std::size_t i = 1; i < points.size(); ++i) {
    Complex a = points[i - 1];
    Complex b = points[i];
    double n = std::ceil(2.0 * std::abs(b - a) / pixel);
    // Segments far longer than the window are clipped by sampling only.
    n = std::min(n, 1e6);
    for (double k = 0; k <= n; ++k) plot(a + (n > 0 ? k / n : 0.0) * (b - a));
  }
}

void draw_circle(Raster& raster, const Viewport& view, Complex center, double radius, Rgb color) {
  const double pixel = std::min((view.x_max - view.x_min) / raster.width(),
                                (view.y_max - view.y_min) / raster.height());
  int n = std::max(64, static_cast<int>(std::ceil(4.0 * std::numbers::pi * radius / pixel)));
  std::vector<Complex> ring;
  ring.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) ring.push_back(center + std::polar(radius, 2.0 * std::numbers::pi * k / n));
  draw_polyline(raster, view, ring, color);
}

void draw_marker(Raster& raster, const Viewport& view, Complex z, int arm, Rgb color) {
  auto [x, y] = to_pixel(view, raster.width(), raster.height(), z);
  if (x < 0) return;
  for (int d = -arm; d <= arm; ++d) {
    raster.set(x + d, y, color);
    raster.set(x, y + d, color);
  }
}

void write_ppm(std::ostream& out, const Raster& raster) {
  out << "P6\n" << raster.width() << ' ' << raster.height() << "\n255\n";
  auto bytes = raster.data();
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

std::string encode_ppm(const Raster& raster) {
  std::ostringstream out(std::ios::binary);
  write_ppm(out, raster);
  return std::move(out).str();
}

void save_ppm(const std::string& path, const Raster& raster) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  write_ppm(out, raster);
  if (!out) throw Error("failed writing " + path);
}

}  // namespace riley
