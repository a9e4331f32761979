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

#include "riley/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <fmt/format.h>

#include "riley/error.hpp"

namespace riley {
namespace {

constexpr double kEntryLimit = 1e150;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void check_range(Complex a, Complex b, Complex c, Complex d) {
  for (Complex z : {a, b, c, d}) {
    if (!finite(z) || std::abs(z) > kEntryLimit)
      throw NumericRangeError("Moebius entry out of range");
  }
}

// Smallest n <= 1000 with tr^2 = 4 cos^2(k pi / n) for some k coprime to n.
std::optional<int> elliptic_order(double trace_squared) {
  double half = std::sqrt(std::clamp(trace_squared, 0.0, 4.0)) / 2.0;
  double theta = std::acos(std::clamp(half, 0.0, 1.0));  // in [0, pi/2]
  for (int n = 2; n <= 1000; ++n) {
    long k0 = std::lround(theta * n / std::numbers::pi);
    for (long k = k0 - 1; k <= k0 + 1; ++k) {
      if (k < 1 || k >= n || std::gcd(k, static_cast<long>(n)) != 1) continue;
      double c = std::cos(static_cast<double>(k) * std::numbers::pi / n);
      if (std::abs(4.0 * c * c - trace_squared) <= 1e-10) return n;
    }
  }
  return std::nullopt;
}

}  // namespace

double chordal_distance(const SpherePoint& u, const SpherePoint& v) {
  if (u.is_infinity() && v.is_infinity()) return 0.0;
  if (u.is_infinity() || v.is_infinity()) {
    Complex z = u.is_infinity() ? v.value() : u.value();
    return 2.0 / std::sqrt(1.0 + std::norm(z));
  }
  Complex z = u.value();
  Complex w = v.value();
  return 2.0 * std::abs(z - w) / std::sqrt((1.0 + std::norm(z)) * (1.0 + std::norm(w)));
}

MoebiusMap::MoebiusMap(Complex a, Complex b, Complex c, Complex d) {
  check_range(a, b, c, d);
  Complex det = a * d - b * c;
  if (std::abs(det) == 0.0 || !finite(det)) throw ValidationError("singular Moebius matrix");
  Complex s = std::sqrt(det);
  a_ = a / s;
  b_ = b / s;
  c_ = c / s;
  d_ = d / s;
}

bool MoebiusMap::is_identity(double tol) const noexcept {
  auto near = [tol](Complex z, Complex w) { return std::abs(z - w) <= tol; };
  bool plus = near(a_, 1.0) && near(d_, 1.0);
  bool minus = near(a_, -1.0) && near(d_, -1.0);
  return (plus || minus) && std::abs(b_) <= tol && std::abs(c_) <= tol;
}

std::string MoebiusMap::to_string() const {
  auto z = [](Complex w) { return fmt::format("{:.6g}{:+.6g}i", w.real(), w.imag()); };
  return fmt::format("[[{}, {}], [{}, {}]]", z(a_), z(b_), z(c_), z(d_));
}

MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g) {
  Complex a = f.a_ * g.a_ + f.b_ * g.c_;
  Complex b = f.a_ * g.b_ + f.b_ * g.d_;
  Complex c = f.c_ * g.a_ + f.d_ * g.c_;
  Complex d = f.c_ * g.b_ + f.d_ * g.d_;
  check_range(a, b, c, d);
  Complex det = a * d - b * c;
  // det is 1 up to rounding; the principal root keeps the SL(2) lift.
  Complex s = std::sqrt(det);
  if (std::abs(s) == 0.0 || !finite(s)) throw NumericRangeError("composition lost precision");
  return MoebiusMap(MoebiusMap::Raw{}, a / s, b / s, c / s, d / s);
}

MoebiusMap inverse(const MoebiusMap& f) {
  return MoebiusMap(MoebiusMap::Raw{}, f.d_, -f.b_, -f.c_, f.a_);
}

SpherePoint apply(const MoebiusMap& f, const SpherePoint& z) {
  if (z.is_infinity()) {
    if (f.c() == Complex{}) return SpherePoint::infinity();
    return f.a() / f.c();
  }
  Complex w = z.value();
  Complex den = f.c() * w + f.d();
  if (den == Complex{}) return SpherePoint::infinity();
  return (f.a() * w + f.b()) / den;
}

Complex trace_of_product(const MoebiusMap& f, const MoebiusMap& g) noexcept {
  return f.a() * g.a() + f.b() * g.c() + f.c() * g.b() + f.d() * g.d();
}

std::string to_string(MapKind kind) {
  switch (kind) {
    case MapKind::Identity: return "identity";
    case MapKind::Parabolic: return "parabolic";
    case MapKind::Elliptic: return "elliptic";
    case MapKind::Hyperbolic: return "hyperbolic";
    case MapKind::StrictlyLoxodromic: return "strictly-loxodromic";
  }
  return "unknown";
}

MapClass classify(const MoebiusMap& f, double tol) {
  if (f.is_identity(tol)) return {MapKind::Identity, std::nullopt};
  Complex t2 = f.trace() * f.trace();
  if (std::abs(t2.imag()) > tol) return {MapKind::StrictlyLoxodromic, std::nullopt};
  double x = t2.real();
  if (std::abs(x - 4.0) <= tol) return {MapKind::Parabolic, std::nullopt};
  if (x > 4.0) return {MapKind::Hyperbolic, std::nullopt};
  if (x >= -tol) return {MapKind::Elliptic, elliptic_order(x)};
  return {MapKind::StrictlyLoxodromic, std::nullopt};
}

std::vector<SpherePoint> fixed_points(const MoebiusMap& f) {
  if (f.is_identity()) throw ValidationError("identity map fixes every point");
  Complex a = f.a(), b = f.b(), c = f.c(), d = f.d();
  double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  bool parabolic = classify(f).kind == MapKind::Parabolic;

  if (std::abs(c) <= 1e-15 * scale) {
    if (parabolic || std::abs(d - a) <= 1e-15 * scale) return {SpherePoint::infinity()};
    return {SpherePoint(b / (d - a)), SpherePoint::infinity()};
  }
  if (parabolic) return {SpherePoint((a - d) / (2.0 * c))};

  Complex disc = std::sqrt((a + d) * (a + d) - 4.0);
  // Pick the sign that avoids cancellation, then use the product of roots.
  Complex num = (a - d);
  Complex q = std::abs(num + disc) >= std::abs(num - disc) ? num + disc : num - disc;
  Complex z1 = q / (2.0 * c);
  Complex z2 = z1 == Complex{} ? (2.0 * num - q) / (2.0 * c) : (-b / c) / z1;  // z1 z2 = -b/c
  return {SpherePoint(z1), SpherePoint(z2)};
}

double jorgensen_value(const MoebiusMap& A, const MoebiusMap& B) {
  Complex ta = A.trace();
  Complex tb = B.trace();
  Complex tab = trace_of_product(A, B);
  Complex commutator = ta * ta + tb * tb + tab * tab - ta * tb * tab - 2.0;
  return std::abs(ta * ta - 4.0) + std::abs(commutator - 2.0);
}

std::pair<MoebiusMap, MoebiusMap> generator_pair(Complex rho, const ConeOrders& orders) {
  Complex alpha = orders.alpha();
  Complex beta = orders.beta();
  MoebiusMap x(alpha, 1.0, 0.0, std::conj(alpha));
  MoebiusMap y(beta, 0.0, rho, std::conj(beta));
  return {x, y};
}

}  // namespace riley
