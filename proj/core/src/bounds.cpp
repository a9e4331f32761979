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

#include "riley/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace riley {
namespace {

const double kSqrt3 = std::sqrt(3.0);

double segment_distance(Complex z, Complex a, Complex b) noexcept {
  Complex ab = b - a;
  double s = std::clamp(((z - a) * std::conj(ab)).real() / std::norm(ab), 0.0, 1.0);
  return std::abs(z - (a + s * ab));
}

// Closed triangle test with a sign-consistent orientation check.
bool in_triangle(Complex z, Complex a, Complex b, Complex c, bool strict) noexcept {
  auto cross = [](Complex u, Complex v) { return u.real() * v.imag() - u.imag() * v.real(); };
  double d1 = cross(b - a, z - a);
  double d2 = cross(c - b, z - b);
  double d3 = cross(a - c, z - c);
  if (strict) return (d1 > 0 && d2 > 0 && d3 > 0) || (d1 < 0 && d2 < 0 && d3 < 0);
  return (d1 >= 0 && d2 >= 0 && d3 >= 0) || (d1 <= 0 && d2 <= 0 && d3 <= 0);
}

// Tangent points 2 exp(+-i pi/3) from 4, and their mirrors from -4.
const std::array<Complex, 4> kTangents{Complex(1.0, kSqrt3), Complex(1.0, -kSqrt3),
                                       Complex(-1.0, kSqrt3), Complex(-1.0, -kSqrt3)};

bool in_closed_hull(Complex z) noexcept {
  if (std::abs(z) <= 2.0) return true;
  return in_triangle(z, 4.0, kTangents[0], kTangents[1], false) ||
         in_triangle(z, -4.0, kTangents[2], kTangents[3], false);
}

double boundary_distance(Complex z) noexcept {
  double d = std::min({segment_distance(z, 4.0, kTangents[0]), segment_distance(z, 4.0, kTangents[1]),
                       segment_distance(z, -4.0, kTangents[2]),
                       segment_distance(z, -4.0, kTangents[3])});
  // The two arcs of |z| = 2 with argument in [pi/3, 2pi/3] and its mirror.
  double angle = std::abs(std::arg(z));
  if (angle >= std::numbers::pi / 3.0 && angle <= 2.0 * std::numbers::pi / 3.0)
    d = std::min(d, std::abs(std::abs(z) - 2.0));
  for (Complex t : kTangents) d = std::min(d, std::abs(z - t));
  return d;
}

}  // namespace

BoundReport classical_bounds(Complex rho) noexcept {
  BoundReport r;
  r.shimizu_leutbecher_ok = std::abs(rho) >= 1.0;
  r.cjr_interior = std::abs(rho + 2.0) > 2.0 && std::abs(rho) > 2.0 && std::abs(rho - 2.0) > 2.0;
  r.lu_excluded = std::abs(rho) < 2.0 ||
                  in_triangle(rho, 4.0, kTangents[0], kTangents[1], true) ||
                  in_triangle(rho, -4.0, kTangents[2], kTangents[3], true);
  return r;
}

double lu_hull_depth(Complex z) noexcept {
  double d = boundary_distance(z);
  return in_closed_hull(z) ? d : -d;
}

double cjr_disk_distance(Complex z) noexcept {
  double d = std::min({std::abs(z + 2.0), std::abs(z), std::abs(z - 2.0)}) - 2.0;
  return std::max(0.0, d);
}

BoundCurves bound_curves(int samples_per_circle) {
  BoundCurves curves;
  auto circle = [&](Complex c, double r) {
    std::vector<Complex> ring;
    for (int k = 0; k <= samples_per_circle; ++k)
      ring.push_back(c + std::polar(r, 2.0 * std::numbers::pi * k / samples_per_circle));
    return ring;
  };
  curves.unit_circle = circle(0.0, 1.0);
  for (double c : {-2.0, 0.0, 2.0}) curves.cjr_circles.push_back(circle(c, 2.0));

  // Hull boundary counter-clockwise from +4: upper arc, -4, lower arc.
  auto& hull = curves.lu_hull;
  int arc = samples_per_circle / 6;
  hull.push_back(4.0);
  for (int k = 0; k <= arc; ++k)
    hull.push_back(std::polar(2.0, std::numbers::pi / 3.0 * (1.0 + static_cast<double>(k) / arc)));
  hull.push_back(-4.0);
  for (int k = 0; k <= arc; ++k)
    hull.push_back(std::polar(2.0, std::numbers::pi / 3.0 * (4.0 + static_cast<double>(k) / arc)));
  hull.push_back(4.0);
  return curves;
}

}  // namespace riley
