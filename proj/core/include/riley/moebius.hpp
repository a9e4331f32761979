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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "riley/orders.hpp"

namespace riley {

/// A point of the Riemann sphere: a finite complex number or infinity.
class SpherePoint {
 public:
  SpherePoint(Complex z) : z_(z) {}  // NOLINT(google-explicit-constructor)
  SpherePoint(double x) : z_(Complex(x, 0.0)) {}  // NOLINT(google-explicit-constructor)

  static SpherePoint infinity() { return SpherePoint(); }

  bool is_infinity() const noexcept { return !z_.has_value(); }
  /// Precondition: !is_infinity().
  Complex value() const { return *z_; }

  friend bool operator==(const SpherePoint&, const SpherePoint&) = default;

 private:
  SpherePoint() = default;
  std::optional<Complex> z_;
};

/// Chordal distance on the unit sphere: 2|u - v| / sqrt((1+|u|^2)(1+|v|^2)),
/// so d(0, inf) = 2.
double chordal_distance(const SpherePoint& u, const SpherePoint& v);

/// A Moebius map z -> (az + b)/(cz + d), stored as an SL(2,C) matrix.
class MoebiusMap {
 public:
  /// Identity.
  MoebiusMap() = default;

  /// Divides by the principal square root of ad - bc. Throws
  /// ValidationError on a singular or non-finite matrix and
  /// NumericRangeError when an entry exceeds 1e150 in magnitude.
  MoebiusMap(Complex a, Complex b, Complex c, Complex d);

  static MoebiusMap identity() { return MoebiusMap(); }

  Complex a() const noexcept { return a_; }
  Complex b() const noexcept { return b_; }
  Complex c() const noexcept { return c_; }
  Complex d() const noexcept { return d_; }

  Complex trace() const noexcept { return a_ + d_; }
  Complex determinant() const noexcept { return a_ * d_ - b_ * c_; }

  /// True when the map is +-identity with entries within `tol`.
  bool is_identity(double tol = 1e-9) const noexcept;

  std::string to_string() const;

 private:
  struct Raw {};
  MoebiusMap(Raw, Complex a, Complex b, Complex c, Complex d) noexcept
      : a_(a), b_(b), c_(c), d_(d) {}

  friend MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g);
  friend MoebiusMap inverse(const MoebiusMap& f);

  Complex a_{1.0, 0.0};
  Complex b_{0.0, 0.0};
  Complex c_{0.0, 0.0};
  Complex d_{1.0, 0.0};
};

/// f o g, renormalized to determinant 1.
MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g);
MoebiusMap inverse(const MoebiusMap& f);
SpherePoint apply(const MoebiusMap& f, const SpherePoint& z);

inline MoebiusMap operator*(const MoebiusMap& f, const MoebiusMap& g) { return compose(f, g); }

/// Trace of f*g without forming the product.
Complex trace_of_product(const MoebiusMap& f, const MoebiusMap& g) noexcept;

enum class MapKind { Identity, Parabolic, Elliptic, Hyperbolic, StrictlyLoxodromic };

struct MapClass {
  MapKind kind = MapKind::Identity;
  /// Rotation order for elliptics of finite order (searched up to 1000).
  std::optional<int> order;

  friend bool operator==(const MapClass&, const MapClass&) = default;
};

std::string to_string(MapKind kind);

inline constexpr double kDefaultClassifyTolerance = 1e-9;

/// Classification by tr^2: 4 parabolic, [0,4) elliptic, (4,inf) hyperbolic,
/// anything non-real strictly loxodromic. `tol` is the band around the
/// real axis and around 0 and 4.
MapClass classify(const MoebiusMap& f, double tol = kDefaultClassifyTolerance);

/// One fixed point for parabolics, two otherwise. Throws ValidationError
/// for the identity.
std::vector<SpherePoint> fixed_points(const MoebiusMap& f);

/// |tr^2 A - 4| + |tr[A,B] - 2|, with [A,B] = A B A^-1 B^-1.
double jorgensen_value(const MoebiusMap& A, const MoebiusMap& B);

/// The generators X and Y_rho of the slice with the given cone orders:
///   X   = [[e^{pi i/a}, 1], [0, e^{-pi i/a}]]
///   Y_r = [[e^{pi i/b}, 0], [rho, e^{-pi i/b}]]
std::pair<MoebiusMap, MoebiusMap> generator_pair(Complex rho, const ConeOrders& orders);

}  // namespace riley
