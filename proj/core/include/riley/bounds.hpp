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

#include <vector>

#include "riley/orders.hpp"

namespace riley {

/// Classical discreteness bounds for the parabolic slice.
struct BoundReport {
  /// |rho| >= 1; groups with |rho| < 1 are never discrete and free.
  bool shimizu_leutbecher_ok = false;
  /// Outside the three closed radius-2 disks centred at -2, 0, 2; such
  /// points lie in the slice.
  bool cjr_interior = false;
  /// Inside the open convex hull of |z| = 2 and the points +-4. Points
  /// outside the hull give free groups, so the slice complement lies in it.
  bool lu_excluded = false;
};

BoundReport classical_bounds(Complex rho) noexcept;

/// Signed distance to the boundary of the Lyndon-Ullman hull, positive
/// inside. Used for tolerance-aware checks.
double lu_hull_depth(Complex z) noexcept;

/// Distance from z to the union of the three closed radius-2 disks (0 inside).
double cjr_disk_distance(Complex z) noexcept;

/// Polylines tracing the bound curves: the unit circle, the three radius-2
/// circles and the hull boundary.
struct BoundCurves {
  std::vector<Complex> unit_circle;
  std::vector<std::vector<Complex>> cjr_circles;
  std::vector<Complex> lu_hull;
};

BoundCurves bound_curves(int samples_per_circle = 720);

}  // namespace riley
