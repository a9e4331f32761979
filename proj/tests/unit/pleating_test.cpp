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

#include <gtest/gtest.h>

#include <thread>

#include "oracles.hpp"
#include "riley/bounds.hpp"
#include "riley/error.hpp"

namespace riley {
namespace {

const ConeOrders kPar = ConeOrders::parabolic();

TEST(Pleating, SeedsOfLowSlopes) {
  EXPECT_LE(std::abs(ray_seed(make_slope(0, 1), kPar, -100.0) - Complex(-102, 0)), 1e-10);
  EXPECT_LE(std::abs(ray_seed(make_slope(1, 1), kPar, -100.0) - Complex(102, 0)), 1e-10);
  EXPECT_LE(std::abs(ray_seed(make_slope(1, 2), kPar, -100.0) - Complex(0, std::sqrt(102.0))),
            1e-10);
}

TEST(Pleating, SeedsSolveTheTraceEquation) {
  for (const Slope& s : farey_sequence(20)) {
    Complex z = ray_seed(s, kPar, -100.0);
    Complex t = oracle::word_trace(s.p(), s.q(), z);
    EXPECT_LE(std::abs(t + 100.0), 1e-6) << s.to_string();
    EXPECT_GE(z.imag(), -1e-12) << s.to_string();
  }
}

TEST(Pleating, AnalyticRays) {
  RayTrace r01 = trace_ray(make_slope(0, 1), kPar);
  for (const RaySample& smp : r01.samples) EXPECT_LE(std::abs(smp.rho - (smp.t - 2.0)), 1e-9);
  RayTrace r12 = trace_ray(make_slope(1, 2), kPar);
  for (const RaySample& smp : r12.samples)
    EXPECT_LE(std::abs(smp.rho - Complex(0, std::sqrt(2.0 - smp.t))), 1e-9) << smp.t;
  EXPECT_LE(std::abs(r12.cusp - Complex(0, 2)), 1e-12);
}

TEST(Pleating, RaySamplesAreOrderedAndOnTheRay) {
  for (auto [p, q] : {std::pair{1, 3}, {2, 5}, {3, 7}, {5, 13}}) {
    Slope s = make_slope(p, q);
    RayTrace ray = trace_ray(s, kPar, -100.0, 32);
    ASSERT_EQ(ray.samples.size(), 32u);
    EXPECT_DOUBLE_EQ(ray.samples.front().t, -100.0);
    EXPECT_DOUBLE_EQ(ray.samples.back().t, -2.0);
    for (std::size_t i = 0; i < ray.samples.size(); ++i) {
      if (i > 0) {
        EXPECT_GT(ray.samples[i].t, ray.samples[i - 1].t);
      }
      Complex t = oracle::word_trace(p, q, ray.samples[i].rho);
      EXPECT_LE(std::abs(t - ray.samples[i].t), 1e-7) << s.to_string();
      EXPECT_GE(ray.samples[i].rho.imag(), -1e-12);
    }
  }
}

TEST(Pleating, RejectsBadRayArguments) {
  EXPECT_THROW(trace_ray(make_slope(1, 2), kPar, -1.0), ValidationError);
  EXPECT_THROW(trace_ray(make_slope(1, 2), kPar, -100.0, 1), ValidationError);
}

TEST(Pleating, CuspPoints) {
  EXPECT_LE(std::abs(cusp_point(make_slope(0, 1), kPar).rho + 4.0), 1e-12);
  EXPECT_LE(std::abs(cusp_point(make_slope(1, 1), kPar).rho - 4.0), 1e-12);
  for (const Slope& s : farey_sequence(20)) {
    CuspPoint c = cusp_point(s, kPar);
    Complex t = oracle::word_trace(s.p(), s.q(), c.rho);
    EXPECT_LE(std::abs(t + 2.0), 1e-7) << s.to_string();
    EXPECT_LE(c.residual, 1e-7);
    // The complement of the slice, hence every cusp, lies in the closed hull.
    EXPECT_GE(lu_hull_depth(c.rho), -1e-9) << s.to_string();
  }
}

TEST(Pleating, CuspReflectionSymmetry) {
  for (const Slope& s : farey_sequence(14)) {
    Complex a = cusp_point(s, kPar).rho;
    Complex b = cusp_point(s.reflected(), kPar).rho;
    EXPECT_LE(std::abs(b + std::conj(a)), 1e-9) << s.to_string();
  }
}

TEST(Pleating, CuspsForConeOrders) {
  ConeOrders orders = ConeOrders::make(2, 3);
  for (const Slope& s : farey_sequence(10)) {
    CuspPoint c = cusp_point(s, orders);
    Complex t = oracle::word_trace(s.p(), s.q(), c.rho, 2, 3);
    EXPECT_LE(std::abs(t + 2.0), 1e-7) << s.to_string();
  }
}

TEST(Pleating, NeighborhoodExamples) {
  EXPECT_TRUE(in_neighborhood(Complex(0.1, 3.0), make_slope(1, 2), kPar));
  EXPECT_FALSE(in_neighborhood(Complex(0.1, 1.5), make_slope(1, 2), kPar));
  EXPECT_TRUE(in_neighborhood(Complex(5.0, 0.0), make_slope(1, 1), kPar));
  EXPECT_FALSE(in_neighborhood(Complex(5.0, 0.0), make_slope(0, 1), kPar));
  EXPECT_TRUE(in_neighborhood(Complex(0, 3.0), make_slope(1, 2), kPar));
  EXPECT_FALSE(in_neighborhood(10.0, make_slope(1, 2), kPar));
  // Lower half-plane points are compared against the conjugate ray.
  EXPECT_TRUE(in_neighborhood(Complex(0.1, -3.0), make_slope(1, 2), kPar));
  // p_{1/3} = -7 has a real root on another branch and a conjugate pair on
  // the ray and its mirror.
  int on_ray = 0;
  for (Complex z : poly_roots(farey_polynomial_direct(make_slope(1, 3), kPar), -7.0))
    on_ray += in_neighborhood(z, make_slope(1, 3), kPar);
  EXPECT_EQ(on_ray, 2);
  NeighborhoodResult r = neighborhood_test(Complex(0.1, 3.0), make_slope(1, 2), kPar);
  EXPECT_LE(std::abs(r.trace - (Complex(0.1, 3.0) * Complex(0.1, 3.0) + 2.0)), 1e-12);
}

TEST(Pleating, ExtendedRay) {
  EXPECT_TRUE(on_extended_ray(Complex(0, 1.7), make_slope(1, 2), kPar, 1e-9));
  EXPECT_FALSE(on_extended_ray(Complex(0, 3.0), make_slope(1, 2), kPar, 1e-9));
  EXPECT_FALSE(on_extended_ray(Complex(0.2, 1.7), make_slope(1, 2), kPar, 1e-9));
}

TEST(Pleating, EllipticPoints) {
  auto pts = elliptic_ray_points(make_slope(1, 2), kPar, {2, 3, 4, 5, 6});
  ASSERT_EQ(pts.size(), 5u);
  ASSERT_TRUE(pts[0].rho && pts[1].rho);
  EXPECT_LE(std::abs(*pts[0].rho - Complex(0, std::sqrt(2.0))), 1e-10);
  EXPECT_LE(std::abs(*pts[1].rho - Complex(0, std::sqrt(3.0))), 1e-10);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    ASSERT_TRUE(pts[i].rho) << pts[i].error;
    EXPECT_GT(pts[i].rho->imag(), pts[i - 1].rho->imag());
    EXPECT_LT(pts[i].rho->imag(), 2.0);
  }
}

TEST(Pleating, EllipticPointsOnGeneralRay) {
  Slope s = make_slope(2, 5);
  Complex cusp = cusp_point(s, kPar).rho;
  auto pts = elliptic_ray_points(s, kPar, {2, 3, 4, 6, 10});
  for (const EllipticRayPoint& e : pts) {
    ASSERT_TRUE(e.rho) << e.error;
    Complex t = oracle::word_trace(2, 5, *e.rho);
    EXPECT_LE(std::abs(t + 2.0 * std::cos(oracle::kPi / e.n)), 1e-8);
  }
  // Larger n sits closer to the cusp.
  for (std::size_t i = 1; i < pts.size(); ++i)
    EXPECT_LT(std::abs(*pts[i].rho - cusp), std::abs(*pts[i - 1].rho - cusp));
}

TEST(Pleating, RayPointAt) {
  auto ray = default_ray_cache().get(make_slope(1, 2), kPar);
  for (double t : {-90.0, -10.0, -3.3, -2.0}) {
    EXPECT_LE(std::abs(ray_point_at(*ray, t) - Complex(0, std::sqrt(2.0 - t))), 1e-9) << t;
  }
  auto ray25 = default_ray_cache().get(make_slope(2, 5), kPar);
  Complex z = ray_point_at(*ray25, -7.5);
  EXPECT_LE(std::abs(oracle::word_trace(2, 5, z) + 7.5), 1e-8);
}

TEST(Pleating, RayCacheConcurrentLookups) {
  RayCache cache;
  Slope s = make_slope(3, 8);
  std::vector<std::shared_ptr<const RayData>> got(8);
  {
    std::vector<std::jthread> threads;
    for (std::size_t i = 0; i < got.size(); ++i)
      threads.emplace_back([&, i] { got[i] = cache.get(s, kPar); });
  }
  for (const auto& r : got) EXPECT_EQ(r.get(), got[0].get());
  EXPECT_EQ(cache.size(), 1u);
  EXPECT_EQ(got[0]->cusp.slope, s);
  cache.clear();
  EXPECT_EQ(cache.size(), 0u);
}

}  // namespace
}  // namespace riley
