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
#include <optional>

#include "riley/traces.hpp"

namespace riley {

/// Path-following controls for lifting trace-plane paths through a
/// polynomial: predictor (tangent step), Newton corrector, step halving.
struct PathOptions {
  /// Lower bound on the number of steps per path.
  int min_steps = 64;
  /// Consecutive halvings tolerated before giving up.
  int max_halvings = 20;
  /// Smallest allowed |delta w| in the trace plane.
  double min_step = 1e-12;
  int max_corrector_iterations = 8;
};

/// Newton on f(z) = target from `z`. Returns the root once the update
/// falls below 1e-14 (1 + |z|) or the residual reaches the evaluation
/// error, or nullopt.
std::optional<Complex> newton_solve(const TraceFunction& f, Complex z, Complex target,
                                    int max_iterations = 50);

/// A trace-plane path w(s), s in [0, 1].
using TracePath = std::function<Complex(double)>;

TracePath segment_path(Complex from, Complex to);

/// Real-axis path from t0 to t1 (both < shift) parametrized by
/// log(shift - t); keeps step counts bounded across many orders of
/// magnitude.
TracePath log_real_path(double t0, double t1, double shift = -1.0);

/// Continues the root z0 of f(z) = path(0) to a root of f(z) = path(1).
/// Throws BranchTrackingError when the step size underflows.
Complex continue_root(const TraceFunction& f, Complex z0, const TracePath& path,
                      const PathOptions& options = {});

}  // namespace riley
