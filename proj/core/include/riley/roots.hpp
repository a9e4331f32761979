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

#include <functional>
#include <span>
#include <vector>

#include "riley/orders.hpp"

namespace riley {

struct AberthOptions {
  int max_sweeps = 500;
  /// Per-root stopping rule |step| <= step_tolerance * (1 + |root|).
  double step_tolerance = 1e-13;
  int polish_steps = 3;
};

/// All roots of the polynomial sum c_i z^i by Aberth-Ehrlich simultaneous
/// iteration, started on the Cauchy-bound circle and finished with a few
/// Newton steps. Throws ConvergenceError (listing the stuck indices) when
/// the sweep budget runs out, and ValidationError for degree < 1.
std::vector<Complex> aberth_roots(std::span<const Complex> coefficients,
                                  const AberthOptions& options = {});

/// Value, derivative and an estimate of the rounding error in the value.
struct RootEvaluation {
  Complex value;
  Complex derivative;
  double error = 0.0;
};

using RootFunction = std::function<RootEvaluation(Complex)>;

/// Same iteration for a degree-n polynomial known only through an
/// evaluator, with starting circle `radius`. A root is also accepted once
/// |value| <= error. Where the evaluator overflows, the far-field Newton
/// ratio z/n is used.
std::vector<Complex> aberth_roots(std::size_t degree, double radius, const RootFunction& f,
                                  const AberthOptions& options = {});

/// Unique positive root of |c_n| x^n = sum_{i<n} |c_i| x^i.
double cauchy_bound(std::span<const Complex> coefficients);

}  // namespace riley
