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

#include "riley/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "riley/error.hpp"
#include "riley/polynomial.hpp"

namespace riley {

double cauchy_bound(std::span<const Complex> coefficients) {
  std::size_t n = coefficients.size() - 1;
  double lead = std::abs(coefficients[n]);
  std::vector<double> mag(n);
  double upper = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mag[i] = std::abs(coefficients[i]) / lead;
    upper = std::max(upper, mag[i]);
  }
  if (upper == 0.0) return 0.0;
  // f(x) = x^n - sum mag_i x^i is convex and increasing past its positive
  // root. Start above it where every mag_i x^i <= x^n / n, then Newton
  // descends monotonically. Terms are scaled by x^-n to avoid overflow.
  double x = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (mag[i] == 0.0) continue;
    x = std::max(x, std::pow(static_cast<double>(n) * mag[i], 1.0 / static_cast<double>(n - i)));
  }
  for (int iter = 0; iter < 200; ++iter) {
    double inv = 1.0 / x;
    double g = 1.0;
    double dg = static_cast<double>(n);
    double power = 1.0;
    for (std::size_t i = n; i-- > 0;) {
      power *= inv;
      g -= mag[i] * power;
      dg -= static_cast<double>(i) * mag[i] * power;
    }
    double step = x * g / dg;
    if (!(step > 0.0)) break;
    x -= step;
    if (step <= 1e-12 * x) break;
  }
  return x;
}

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

std::vector<Complex> aberth_roots(std::size_t degree, double radius, const RootFunction& f,
                                  const AberthOptions& options) {
  if (degree < 1) throw ValidationError("root finding needs degree >= 1");
  const std::size_t n = degree;
  if (radius == 0.0) return std::vector<Complex>(n, Complex{});

  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) +
                   0.4 + 1e-3 * static_cast<double>(k);
    z[k] = std::polar(radius, angle);
  }

  std::vector<bool> done(n, false);
  std::size_t remaining = n;
  for (int sweep = 0; sweep < options.max_sweeps && remaining > 0; ++sweep) {
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      RootEvaluation ev = f(z[k]);
      Complex ratio;
      if (finite(ev.value) && finite(ev.derivative)) {
        // At the rounding floor the step is noise; stop there too.
        if (std::abs(ev.value) <= ev.error) {
          done[k] = true;
          --remaining;
          continue;
        }
        ratio = ev.derivative == Complex{} ? ev.value : ev.value / ev.derivative;
      } else {
        ratio = z[k] / static_cast<double>(n);
      }
      Complex repulsion{};
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      }
      Complex step = ratio / (1.0 - ratio * repulsion);
      if (!finite(step)) step = ratio;
      z[k] -= step;
      if (std::abs(step) <= options.step_tolerance * (1.0 + std::abs(z[k]))) {
        done[k] = true;
        --remaining;
      }
    }
  }

  if (remaining > 0) {
    std::vector<std::size_t> stuck;
    for (std::size_t k = 0; k < n; ++k)
      if (!done[k]) stuck.push_back(k);
    std::string message =
        fmt::format("Aberth iteration left {} of {} roots unconverged", stuck.size(), n);
    throw ConvergenceError(message, std::move(stuck), std::move(z));
  }

  for (Complex& root : z) {
    for (int i = 0; i < options.polish_steps; ++i) {
      RootEvaluation ev = f(root);
      if (ev.derivative == Complex{}) break;
      Complex step = ev.value / ev.derivative;
      if (!finite(step)) break;
      // A polish step never moves a root by more than the Aberth tolerance
      // allows for; larger jumps mean Newton is heading to a neighbour.
      if (std::abs(step) > 1e-6 * (1.0 + std::abs(root))) break;
      root -= step;
    }
  }
  return z;
}

std::vector<Complex> aberth_roots(std::span<const Complex> coefficients,
                                  const AberthOptions& options) {
  std::size_t len = coefficients.size();
  while (len > 0 && coefficients[len - 1] == Complex{}) --len;
  if (len < 2) throw ValidationError("root finding needs degree >= 1");
  auto poly = coefficients.first(len);
  std::size_t n = len - 1;
  if (n == 1) return {-poly[0] / poly[1]};

  const double noise = 8.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(n);
  AberthOptions sweep_only = options;
  sweep_only.polish_steps = 0;
  std::vector<Complex> roots = aberth_roots(n, cauchy_bound(poly), [&](Complex z) {
    PolyValue pv = horner(poly, z);
    return RootEvaluation{pv.value, pv.derivative, noise * magnitude_bound(poly, std::abs(z))};
  }, sweep_only);
  for (Complex& root : roots) {
    for (int i = 0; i < options.polish_steps; ++i) {
      PolyValue pv = horner_extended(poly, root);
      if (pv.derivative == Complex{}) break;
      Complex step = pv.value / pv.derivative;
      if (!finite(step)) break;
      if (std::abs(step) > 1e-6 * (1.0 + std::abs(root))) break;
      root -= step;
    }
  }
  return roots;
}

}  // namespace riley
