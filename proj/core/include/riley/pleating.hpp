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

#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "riley/continuation.hpp"
#include "riley/farey.hpp"
#include "riley/traces.hpp"

namespace riley {

struct RaySample {
  double t;
  Complex rho;
};

/// A rational pleating ray: the branch of p^{-1}((-inf, -2]) entering the
/// closed upper half-plane, sampled with t increasing up to the cusp.
struct RayTrace {
  Slope slope;
  ConeOrders orders;
  std::vector<RaySample> samples;
  Complex cusp;
};

/// A cusp group: the ray endpoint where the Farey word becomes parabolic.
struct CuspPoint {
  Slope slope;
  ConeOrders orders;
  Complex rho;
  double residual = 0.0;
};

/// Default trace value at which rays are started.
inline constexpr double kDefaultRayStart = -100.0;

/// A root of p(rho) = t0 on the pleating-ray branch. The branch is picked
/// by its asymptotic direction exp(i pi (1 - p/q)); when |t0|^{1/q} is too
/// small for the asymptotics to separate branches, the root is found far
/// out on the same branch and continued inward along the real t axis.
/// Throws SeedFailure when no perturbed start converges onto the branch.
Complex ray_seed(const Slope& s, const ConeOrders& orders, double t0);

/// Path-lifts [t_start, -2] through p_{p/q}; n_samples points, spaced
/// geometrically in (-1 - t) so they crowd towards the cusp.
RayTrace trace_ray(const Slope& s, const ConeOrders& orders, double t_start = kDefaultRayStart,
                   int n_samples = 64);

CuspPoint cusp_point(const Slope& s, const ConeOrders& orders);

struct NeighborhoodResult {
  bool inside = false;
  /// Set when path-lifting failed; `inside` is then false.
  bool lift_failed = false;
  /// p(rho) for reuse by the caller.
  Complex trace{};
};

/// Half-width of the real-axis cut excluded around -2 in the lift.
inline constexpr double kNeighborhoodDelta = 1e-3;

/// Whether rho lies in p^{-1}(H) on the ray's own branch, where
/// H = {x + iy : x <= -2, y != 0} together with (-inf, -2).
NeighborhoodResult neighborhood_test(Complex rho, const Slope& s, const ConeOrders& orders);
bool in_neighborhood(Complex rho, const Slope& s, const ConeOrders& orders);

/// Whether rho lies on the continuation of the ray past the cusp, where
/// the Farey trace is real in (-2, 2). `tol` bounds |Im p(rho)|.
bool on_extended_ray(Complex rho, const Slope& s, const ConeOrders& orders, double tol);

struct EllipticRayPoint {
  int n = 0;
  std::optional<Complex> rho;
  /// Set when continuation past the cusp failed for this n.
  std::string error;
};

/// Points past the cusp where the Farey trace equals -2 cos(pi / n).
std::vector<EllipticRayPoint> elliptic_ray_points(const Slope& s, const ConeOrders& orders,
                                                  const std::vector<int>& n_values);

/// Everything the slice-level code needs about one (slope, orders) ray.
struct RayData {
  TracePolynomial polynomial;
  TraceFunction evaluate;
  RayTrace trace;
  CuspPoint cusp;
};

/// Memoizes RayData per (slope, orders). Concurrent lookups of the same key
/// wait for a single computation; failures are cached too.
class RayCache {
 public:
  std::shared_ptr<const RayData> get(const Slope& s, const ConeOrders& orders);
  std::size_t size() const;
  void clear();

 private:
  using Key = std::pair<std::pair<std::int64_t, std::int64_t>, ConeOrders>;
  mutable std::mutex mutex_;
  std::map<Key, std::shared_future<std::shared_ptr<const RayData>>> entries_;
};

/// Process-wide cache used by the slice-level operations.
RayCache& default_ray_cache();

/// Ray point at trace value t (t <= -2), continued from the nearest cached
/// sample.
Complex ray_point_at(const RayData& ray, double t);

}  // namespace riley
