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

#include "riley/pleating.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "riley/error.hpp"

namespace riley {
namespace {

constexpr int kSeedPerturbations = 32;
constexpr int kCacheSamples = 256;
// Samples are already dense along the ray; each gap needs only a few steps.
constexpr PathOptions kSampleGap{.min_steps = 4};

double residual_scale(Complex target) { return 1e-9 * (1.0 + std::abs(target)); }

// Smallest radius at which the q asymptotic branches are reliably separated,
// capped so that p stays inside double range.
double far_radius(std::int64_t q) {
  double wanted = std::max(16.0, 2.0 * static_cast<double>(q));
  double cap = std::pow(10.0, 250.0 / static_cast<double>(q));
  return std::min(wanted, cap);
}

Complex seed_on_branch(const ComplexCoefficients& c, const TraceFunction& f, const Slope& s,
                       double t0) {
  const auto q = static_cast<std::size_t>(s.q());
  const double dq = static_cast<double>(q);
  const double theta = std::numbers::pi * (1.0 - s.value());
  const Complex lead = c[q];
  const Complex shift = -c[q - 1] / (dq * lead);
  const Complex direction = std::polar(1.0, theta);

  // The asymptotic direction must map to the negative real axis.
  Complex image = lead * std::polar(1.0, dq * theta);
  if (image.real() > -0.5)
    throw SeedFailure("direction exp(i pi (1 - p/q)) is not a branch of p^{-1}(-inf) for " +
                      s.to_string());

  double radius = std::pow(std::abs(t0), 1.0 / dq);
  double start = t0;
  const double wanted = far_radius(s.q());
  if (radius < wanted) {
    radius = wanted;
    start = -std::pow(radius, dq);
  }

  // Branch of z^q ~ start / lead nearest `direction`, within half a sector.
  auto on_branch = [&](Complex z) {
    Complex rel = (z - shift) / direction;
    return std::abs(std::arg(rel)) < 0.5 * std::numbers::pi / dq;
  };

  std::optional<Complex> seed;
  for (int j = 0; j <= kSeedPerturbations && !seed; ++j) {
    double sign = j % 2 == 0 ? 1.0 : -1.0;
    double angle = theta + sign * 0.02 * ((j + 1) / 2) * std::numbers::pi / dq;
    double r = radius * (1.0 + 0.005 * ((j + 1) / 2));
    auto z = newton_solve(f, std::polar(r, angle) + shift, start);
    if (z && on_branch(*z)) seed = z;
  }
  if (!seed) throw SeedFailure("no convergent seed for the " + s.to_string() + " ray");

  Complex z = *seed;
  if (start != t0) {
    z = continue_root(f, z, log_real_path(start, t0));
    auto polished = newton_solve(f, z, t0);
    if (polished) z = *polished;
  }
  if (std::abs(f(z).value - t0) > residual_scale(t0))
    throw SeedFailure("seed residual too large for the " + s.to_string() + " ray");
  return z;
}

std::vector<double> sample_times(double t_start, int n) {
  std::vector<double> t(static_cast<std::size_t>(n));
  double span = std::log(-1.0 - t_start);  // log(1 + (-2 - t_start))
  for (int k = 0; k < n; ++k) {
    double frac = 1.0 - static_cast<double>(k) / (n - 1);
    t[static_cast<std::size_t>(k)] = -1.0 - std::exp(span * frac);
  }
  t.front() = t_start;
  t.back() = -2.0;
  return t;
}

RayTrace trace_with(const ComplexCoefficients& c, const TraceFunction& f, const Slope& s,
                    const ConeOrders& orders, double t_start, int n_samples) {
  if (t_start > -10.0) throw ValidationError("ray start must satisfy t_start <= -10");
  if (n_samples < 2) throw ValidationError("a ray needs at least two samples");

  RayTrace ray{s, orders, {}, {}};
  ray.samples.reserve(static_cast<std::size_t>(n_samples));
  std::vector<double> t = sample_times(t_start, n_samples);
  Complex z = seed_on_branch(c, f, s, t_start);
  ray.samples.push_back({t[0], z});
  for (std::size_t k = 1; k < t.size(); ++k) {
    z = continue_root(f, z, segment_path(t[k - 1], t[k]), kSampleGap);
    if (auto polished = newton_solve(f, z, t[k])) z = *polished;
    if (std::abs(f(z).value - t[k]) > residual_scale(t[k]))
      throw BranchTrackingError("ray sample residual too large", t[k], z.real(), z.imag());
    ray.samples.push_back({t[k], z});
  }
  if (ray.samples.back().rho.imag() < -1e-9) {
    for (RaySample& sample : ray.samples) sample.rho = std::conj(sample.rho);
  }
  ray.cusp = ray.samples.back().rho;
  return ray;
}

CuspPoint cusp_from_trace(const TraceFunction& f, const RayTrace& ray) {
  CuspPoint cusp{ray.slope, ray.orders, ray.cusp, 0.0};
  cusp.residual = std::abs(f(cusp.rho).value + 2.0);
  if (cusp.residual > 1e-8)
    throw NumericError(fmt::format("cusp residual {:.3g} for {}", cusp.residual,
                                   ray.slope.to_string()));
  return cusp;
}

}  // namespace

Complex ray_seed(const Slope& s, const ConeOrders& orders, double t0) {
  if (t0 > -10.0) throw ValidationError("ray seed needs t0 <= -10");
  TracePolynomial p = farey_polynomial_direct(s, orders);
  return seed_on_branch(p.coefficients(), word_trace_function(s, orders), s, t0);
}

RayTrace trace_ray(const Slope& s, const ConeOrders& orders, double t_start, int n_samples) {
  TracePolynomial p = farey_polynomial_direct(s, orders);
  return trace_with(p.coefficients(), word_trace_function(s, orders), s, orders, t_start,
                    n_samples);
}

CuspPoint cusp_point(const Slope& s, const ConeOrders& orders) {
  TracePolynomial p = farey_polynomial_direct(s, orders);
  TraceFunction f = word_trace_function(s, orders);
  RayTrace ray = trace_with(p.coefficients(), f, s, orders, kDefaultRayStart, 64);
  return cusp_from_trace(f, ray);
}

Complex ray_point_at(const RayData& ray, double t) {
  const TraceFunction& f = ray.evaluate;
  const auto& samples = ray.trace.samples;
  if (t >= -2.0) return ray.trace.cusp;
  if (t <= samples.front().t) {
    if (t == samples.front().t) return samples.front().rho;
    return continue_root(f, samples.front().rho, log_real_path(samples.front().t, t));
  }
  auto it = std::upper_bound(samples.begin(), samples.end(), t,
                             [](double value, const RaySample& sample) { return value < sample.t; });
  const RaySample& from = *(it - 1);
  if (from.t == t) return from.rho;
  return continue_root(f, from.rho, segment_path(from.t, t), kSampleGap);
}

NeighborhoodResult neighborhood_test(Complex rho, const Slope& s, const ConeOrders& orders) {
  auto ray = default_ray_cache().get(s, orders);
  const TraceFunction& f = ray->evaluate;
  NeighborhoodResult result;
  Complex w = f(rho).value;
  result.trace = w;

  bool real_axis = std::abs(w.imag()) <= 1e-12 * (1.0 + std::abs(w));
  bool in_region = real_axis ? w.real() < -2.0 : w.real() <= -2.0;
  if (!in_region) return result;

  double t1 = std::min(w.real(), -2.0 - kNeighborhoodDelta);
  try {
    Complex z = rho;
    if (!(real_axis && w.real() == t1)) z = continue_root(f, rho, segment_path(w, t1));
    Complex reference = ray_point_at(*ray, t1);
    if (rho.imag() < 0.0) reference = std::conj(reference);
    result.inside = std::abs(z - reference) <= 1e-6 * std::max(1.0, std::abs(reference));
  } catch (const NumericError&) {
    result.lift_failed = true;
  }
  return result;
}

bool in_neighborhood(Complex rho, const Slope& s, const ConeOrders& orders) {
  return neighborhood_test(rho, s, orders).inside;
}

bool on_extended_ray(Complex rho, const Slope& s, const ConeOrders& orders, double tol) {
  auto ray = default_ray_cache().get(s, orders);
  const TraceFunction& f = ray->evaluate;
  Complex w = f(rho).value;
  if (std::abs(w.imag()) > tol || w.real() <= -2.0 || w.real() >= 2.0) return false;
  double t1 = -2.0 - kNeighborhoodDelta;
  try {
    Complex z = continue_root(f, rho, segment_path(w, t1));
    Complex reference = ray_point_at(*ray, t1);
    if (rho.imag() < 0.0) reference = std::conj(reference);
    return std::abs(z - reference) <= 1e-6 * std::max(1.0, std::abs(reference));
  } catch (const NumericError&) {
    return false;
  }
}

std::vector<EllipticRayPoint> elliptic_ray_points(const Slope& s, const ConeOrders& orders,
                                                  const std::vector<int>& n_values) {
  TracePolynomial p = farey_polynomial_direct(s, orders);
  TraceFunction f = word_trace_function(s, orders);
  RayTrace ray = trace_with(p.coefficients(), f, s, orders, kDefaultRayStart, 64);
  std::vector<EllipticRayPoint> out;
  out.reserve(n_values.size());
  for (int n : n_values) {
    EllipticRayPoint point{n, std::nullopt, {}};
    if (n < 2) {
      point.error = "order must be >= 2";
      out.push_back(point);
      continue;
    }
    double target = -2.0 * std::cos(std::numbers::pi / n);
    try {
      Complex z = continue_root(f, ray.cusp, segment_path(-2.0, target));
      if (auto polished = newton_solve(f, z, target)) z = *polished;
      point.rho = z;
    } catch (const NumericError& e) {
      point.error = e.what();
    }
    out.push_back(point);
  }
  return out;
}

std::shared_ptr<const RayData> RayCache::get(const Slope& s, const ConeOrders& orders) {
  Key key{{s.p(), s.q()}, orders};
  std::promise<std::shared_ptr<const RayData>> promise;
  std::shared_future<std::shared_ptr<const RayData>> future;
  bool owner = false;
  {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(key);
    if (it != entries_.end()) {
      future = it->second;
    } else {
      future = promise.get_future().share();
      entries_.emplace(key, future);
      owner = true;
    }
  }
  if (owner) {
    try {
      TracePolynomial p = farey_polynomial_direct(s, orders);
      TraceFunction f = word_trace_function(s, orders);
      RayTrace trace = trace_with(p.coefficients(), f, s, orders, kDefaultRayStart, kCacheSamples);
      CuspPoint cusp = cusp_from_trace(f, trace);
      promise.set_value(std::make_shared<const RayData>(
          RayData{std::move(p), std::move(f), std::move(trace), std::move(cusp)}));
    } catch (...) {
      promise.set_exception(std::current_exception());
    }
  }
  return future.get();
}

std::size_t RayCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

void RayCache::clear() {
  std::lock_guard lock(mutex_);
  entries_.clear();
}

RayCache& default_ray_cache() {
  static RayCache cache;
  return cache;
}

}  // namespace riley
