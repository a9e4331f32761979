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

#include "riley/continuation.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "riley/error.hpp"

namespace riley {
namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

struct Corrected {
  Complex z;
  int iterations;
};

std::optional<Corrected> correct(const TraceFunction& f, Complex z, Complex target,
                                 int max_iterations) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int i = 1; i <= max_iterations; ++i) {
    TraceValue tv = f(z);
    if (tv.derivative == Complex{}) return std::nullopt;
    Complex residual = tv.value - target;
    if (std::abs(residual) <= tv.error + 4.0 * eps * std::abs(target)) return Corrected{z, i};
    Complex step = residual / tv.derivative;
    if (!finite(step)) return std::nullopt;
    z -= step;
    if (std::abs(step) <= 1e-14 * (1.0 + std::abs(z))) return Corrected{z, i};
  }
  return std::nullopt;
}

}  // namespace

std::optional<Complex> newton_solve(const TraceFunction& f, Complex z, Complex target,
                                    int max_iterations) {
  auto result = correct(f, z, target, max_iterations);
  if (!result) return std::nullopt;
  // The stopping rule is conservative; take further steps while they help.
  Complex best = result->z;
  double best_residual = std::abs(f(best).value - target);
  for (int i = 0; i < 3 && best_residual > 0.0; ++i) {
    TraceValue tv = f(best);
    if (tv.derivative == Complex{}) break;
    Complex next = best - (tv.value - target) / tv.derivative;
    double r = std::abs(f(next).value - target);
    if (!(r < best_residual)) break;
    best = next;
    best_residual = r;
  }
  return best;
}

TracePath segment_path(Complex from, Complex to) {
  return [from, to](double s) { return s >= 1.0 ? to : from + s * (to - from); };
}

TracePath log_real_path(double t0, double t1, double shift) {
  double u0 = std::log(shift - t0);
  double u1 = std::log(shift - t1);
  return [=](double s) {
    if (s <= 0.0) return Complex(t0, 0.0);
    if (s >= 1.0) return Complex(t1, 0.0);
    return Complex(shift - std::exp(u0 + s * (u1 - u0)), 0.0);
  };
}

Complex continue_root(const TraceFunction& f, Complex z0, const TracePath& path,
                      const PathOptions& options) {
  const double max_h = 1.0 / options.min_steps;
  double s = 0.0;
  double h = max_h;
  Complex z = z0;
  Complex w = path(0.0);
  int halvings = 0;

  auto fail = [&](const char* why) {
    throw BranchTrackingError(
        fmt::format("path continuation failed at w = {:.17g}{:+.17g}i: {}", w.real(), w.imag(),
                    why),
        w.real(), z.real(), z.imag());
  };

  while (s < 1.0) {
    double s_next = std::min(1.0, s + h);
    Complex w_next = path(s_next);
    if (std::abs(w_next - w) < options.min_step && s_next < 1.0) fail("step underflow");

    TraceValue tv = f(z);
    bool accepted = false;
    int iterations = 0;
    Complex z_next{};
    if (tv.derivative != Complex{}) {
      Complex predicted = z + (w_next - w) / tv.derivative;
      if (finite(predicted)) {
        auto corrected = correct(f, predicted, w_next, options.max_corrector_iterations);
        if (corrected) {
          double predicted_move = std::abs(predicted - z);
          double correction = std::abs(corrected->z - predicted);
          double noise = tv.error / std::abs(tv.derivative);
          // The corrector must stay close to the tangent prediction, or
          // Newton may have slid onto a neighbouring branch.
          if (correction <= 0.25 * predicted_move + 1e-10 * (1.0 + std::abs(z)) + 8.0 * noise) {
            accepted = true;
            iterations = corrected->iterations;
            z_next = corrected->z;
          }
        }
      }
    }

    if (!accepted) {
      if (++halvings > options.max_halvings) fail("too many step halvings");
      h *= 0.5;
      if (std::abs(path(std::min(1.0, s + h)) - w) < options.min_step) fail("step underflow");
      continue;
    }

    halvings = 0;
    s = s_next;
    z = z_next;
    w = w_next;
    if (iterations <= 3) h = std::min(max_h, 2.0 * h);
  }
  return z;
}

}  // namespace riley
