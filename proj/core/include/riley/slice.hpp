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

#include <cstdint>
#include <string>
#include <vector>

#include "riley/bounds.hpp"
#include "riley/limitset.hpp"
#include "riley/pleating.hpp"
#include "riley/raster.hpp"

namespace riley {

enum class VerdictKind {
  InteriorCertified,
  OnRay,
  CuspNear,
  ExteriorRelator,
  NondiscreteEvidence,
  OutsideNecessaryBound,
  Unknown,
};

std::string to_string(VerdictKind kind);

/// Classification of a slice point. Only the witness fields belonging to
/// `kind` are meaningful.
struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  /// InteriorCertified, OnRay, CuspNear, ExteriorRelator.
  Slope slope;
  /// p_slope(rho) for InteriorCertified, OnRay and ExteriorRelator.
  Complex trace{};
  /// OnRay: the real trace value.
  double t = 0.0;
  /// CuspNear: distance to the cusp (or its mirror image).
  double distance = 0.0;
  Complex cusp{};
  /// NondiscreteEvidence: jorgensen_value(word_a, word_b).
  GroupWord word_a;
  GroupWord word_b;
  double jorgensen = 0.0;
  /// OutsideNecessaryBound.
  std::string bound_name;
};

struct ClassifyOptions {
  std::int64_t max_denominator = 20;
  int word_depth = 4;
  double tol = 1e-9;
};

/// First match in this order: outside |rho| >= 1 (parabolic only); in a
/// ray neighbourhood p^{-1}(H) for some slope (Stern-Brocot order); near a
/// cusp; a Farey word with trace +-2 or an elliptic point on an extended
/// ray; a non-elementary word pair violating Jorgensen's inequality;
/// otherwise Unknown.
Verdict classify_point(const SlicePoint& pt, const ClassifyOptions& options = {});

struct SlopeFailure {
  Slope slope;
  std::string message;
};

struct CuspCloud {
  ConeOrders orders;
  /// Sorted by slope, upper branch before its conjugate.
  std::vector<CuspPoint> points;
  std::vector<SlopeFailure> failures;
};

/// Cusps of every slope with q <= Q, with conjugates, and with the
/// rho -> -rho images when a = b. Failing slopes are collected.
CuspCloud cusp_cloud(std::int64_t max_denominator, const ConeOrders& orders, int threads = 0);

struct SliceRender {
  Raster raster;
  std::vector<SlopeFailure> failures;
  /// Set for the (2, 2) pair, whose slice is an interval.
  bool degenerate = false;
  std::size_t cusp_count = 0;
};

/// Cusp cloud, rays with q <= min(Q, 12), and for (inf, inf) the classical
/// bound curves. Q = 0 draws the bound curves alone.
SliceRender render_slice(const ConeOrders& orders, std::int64_t max_denominator,
                         const Viewport& view, int width, int height, int threads = 0);

namespace palette {
inline constexpr Rgb kBackground{255, 255, 255};
inline constexpr Rgb kUnitCircle{200, 0, 0};
inline constexpr Rgb kCjrCircle{0, 140, 0};
inline constexpr Rgb kHull{0, 0, 200};
inline constexpr Rgb kRay{150, 150, 150};
inline constexpr Rgb kCusp{0, 0, 0};
inline constexpr Rgb kWarning{255, 215, 0};
}  // namespace palette

}  // namespace riley
