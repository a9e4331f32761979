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

#include "riley/slice.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "riley/error.hpp"

namespace riley {
namespace {

const ConeOrders kPar = ConeOrders::parabolic();
const Complex kFigureEight(0.5, -std::sqrt(3.0) / 2);

bool has_point(const std::vector<CuspPoint>& pts, Complex z, double tol = 1e-9) {
  return std::any_of(pts.begin(), pts.end(), [&](const CuspPoint& c) { return std::abs(c.rho - z) <= tol; });
}

TEST(Classify, Examples) {
  Verdict v = classify_point({5.0, kPar});
  EXPECT_EQ(v.kind, VerdictKind::OnRay);
  EXPECT_EQ(v.slope, make_slope(1, 1));
  EXPECT_NEAR(v.t, -3.0, 1e-12);

  v = classify_point({0.5, kPar});
  EXPECT_EQ(v.kind, VerdictKind::OutsideNecessaryBound);
  EXPECT_EQ(v.bound_name, "shimizu-leutbecher");

  v = classify_point({kFigureEight, kPar});
  EXPECT_EQ(v.kind, VerdictKind::ExteriorRelator);
  EXPECT_EQ(v.slope, make_slope(3, 5));
  EXPECT_NEAR(std::abs(v.trace), 2.0, 1e-9);

  v = classify_point({Complex(0.1, 3.0), kPar});
  EXPECT_EQ(v.kind, VerdictKind::InteriorCertified);
  EXPECT_EQ(v.slope, make_slope(1, 2));
}

TEST(Classify, CuspNear) {
  Complex cusp = cusp_point(make_slope(2, 5), kPar).rho;
  Verdict v = classify_point({cusp + Complex(1e-11, 0), kPar});
  EXPECT_EQ(v.kind, VerdictKind::CuspNear);
  EXPECT_LE(v.distance, 1e-9);
}

TEST(Classify, DeepInsideBoundIsNondiscrete) {
  // |rho| >= 1 but well inside the hull: a short word pair breaks Jorgensen.
  Verdict v = classify_point({Complex(0.3, 1.0), kPar});
  EXPECT_TRUE(v.kind == VerdictKind::NondiscreteEvidence || v.kind == VerdictKind::ExteriorRelator ||
              v.kind == VerdictKind::Unknown);
  EXPECT_NE(v.kind, VerdictKind::InteriorCertified);
}

TEST(Classify, RejectsBadBudgets) {
  EXPECT_THROW(classify_point({5.0, kPar}, {.max_denominator = 0}), ValidationError);
  EXPECT_THROW(classify_point({5.0, kPar}, {.word_depth = 0}), ValidationError);
  EXPECT_THROW(classify_point({Complex(NAN, 0), kPar}), ValidationError);
}

TEST(Classify, WitnessesReverify) {
  const std::vector<ConeOrders> orders{kPar, ConeOrders::make(3, 4), ConeOrders::make(0, 2)};
  for (const ConeOrders& o : orders) {
    for (Complex rho : oracle::random_points(60, 4.0, 71)) {
      Verdict v = classify_point({rho, o}, {.max_denominator = 10, .word_depth = 3});
      switch (v.kind) {
        case VerdictKind::InteriorCertified:
        case VerdictKind::ExteriorRelator: {
          Complex t = oracle::word_trace(v.slope.p(), v.slope.q(), rho, o.a(), o.b());
          EXPECT_LE(std::abs(t - v.trace), 1e-9 * std::max(1.0, std::abs(t))) << rho;
          break;
        }
        case VerdictKind::OnRay: {
          Complex t = oracle::word_trace(v.slope.p(), v.slope.q(), rho, o.a(), o.b());
          EXPECT_LE(std::abs(t - v.t), 1e-9 * std::max(1.0, std::abs(t))) << rho;
          EXPECT_LE(v.t, -2.0 + 1e-9);
          break;
        }
        case VerdictKind::NondiscreteEvidence: {
          double j = jorgensen_value(v.word_a.evaluate(rho, o), v.word_b.evaluate(rho, o));
          EXPECT_NEAR(j, v.jorgensen, 1e-9 * std::max(1.0, j)) << rho;
          EXPECT_LT(v.jorgensen, 1.0);
          break;
        }
        case VerdictKind::OutsideNecessaryBound:
          EXPECT_TRUE(o.is_parabolic());
          EXPECT_LT(std::abs(rho), 1.0);
          break;
        default:
          break;
      }
      if (v.kind == VerdictKind::InteriorCertified && o.is_parabolic()) {
        EXPECT_GE(std::abs(rho), 1.0);
      }
    }
  }
}

TEST(CuspCloud, SmallBudgets) {
  CuspCloud c1 = cusp_cloud(1, kPar);
  EXPECT_TRUE(c1.failures.empty());
  ASSERT_EQ(c1.points.size(), 2u);
  EXPECT_TRUE(has_point(c1.points, -4.0));
  EXPECT_TRUE(has_point(c1.points, 4.0));

  CuspCloud c2 = cusp_cloud(2, kPar);
  ASSERT_EQ(c2.points.size(), 4u);
  for (Complex z : {Complex(-4, 0), Complex(4, 0), Complex(0, 2), Complex(0, -2)})
    EXPECT_TRUE(has_point(c2.points, z)) << z;
  EXPECT_THROW(cusp_cloud(0, kPar), ValidationError);
}

TEST(CuspCloud, SymmetricAndBounded) {
  CuspCloud c = cusp_cloud(15, kPar);
  EXPECT_TRUE(c.failures.empty());
  for (const CuspPoint& p : c.points) {
    EXPECT_TRUE(has_point(c.points, std::conj(p.rho), 1e-8));
    EXPECT_TRUE(has_point(c.points, -p.rho, 1e-8));
    EXPECT_GE(std::abs(p.rho), 1.0);
    EXPECT_LE(std::abs(p.rho), 4.0 + 1e-8);
    EXPECT_LE(cjr_disk_distance(p.rho), 1e-8);
    EXPECT_GE(lu_hull_depth(p.rho), -1e-8);
  }
}

TEST(CuspCloud, NegationOnlyForEqualOrders) {
  CuspCloud c = cusp_cloud(6, ConeOrders::make(2, 4));
  EXPECT_TRUE(c.failures.empty());
  for (const CuspPoint& p : c.points) EXPECT_TRUE(has_point(c.points, std::conj(p.rho), 1e-8));
  bool asymmetric = false;
  for (const CuspPoint& p : c.points) asymmetric |= !has_point(c.points, -p.rho, 1e-6);
  EXPECT_TRUE(asymmetric);
}

TEST(CuspCloud, ParallelMatchesSerial) {
  CuspCloud a = cusp_cloud(12, ConeOrders::make(3, 3), 1);
  CuspCloud b = cusp_cloud(12, ConeOrders::make(3, 3), 4);
  ASSERT_EQ(a.points.size(), b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    EXPECT_EQ(a.points[i].slope, b.points[i].slope);
    EXPECT_EQ(a.points[i].rho, b.points[i].rho);
  }
}

bool marked(const Raster& r, int x, int y) { return r.pixel(x, y) != palette::kBackground; }

bool marked_near(const Raster& r, int x, int y) {
  for (int dy = -1; dy <= 1; ++dy)
    for (int dx = -1; dx <= 1; ++dx) {
      int u = x + dx, v = y + dy;
      if (u >= 0 && v >= 0 && u < r.width() && v < r.height() && marked(r, u, v)) return true;
    }
  return false;
}

TEST(RenderSlice, MirrorSymmetricWithinOnePixel) {
  SliceRender s = render_slice(kPar, 20, Viewport{-5, 5, -5, 5}, 800, 800);
  EXPECT_TRUE(s.failures.empty());
  const Raster& r = s.raster;
  int count = 0;
  for (int y = 0; y < r.height(); ++y)
    for (int x = 0; x < r.width(); ++x) {
      if (!marked(r, x, y)) continue;
      ++count;
      ASSERT_TRUE(marked_near(r, r.width() - 1 - x, y)) << x << "," << y;
      ASSERT_TRUE(marked_near(r, x, r.height() - 1 - y)) << x << "," << y;
    }
  EXPECT_GT(count, 1000);
}

TEST(RenderSlice, DegenerateOrders) {
  SliceRender s = render_slice(ConeOrders::make(2, 2, true), 10, Viewport{}, 64, 64);
  EXPECT_TRUE(s.degenerate);
  EXPECT_EQ(s.raster.pixel(10, 30), palette::kWarning);
  EXPECT_EQ(s.cusp_count, 0u);
}

TEST(RenderSlice, ZeroBudgetDrawsBoundsOnly) {
  SliceRender s = render_slice(kPar, 0, Viewport{}, 200, 200);
  EXPECT_EQ(s.cusp_count, 0u);
  bool any_bound = false;
  for (int y = 0; y < 200; ++y)
    for (int x = 0; x < 200; ++x) {
      Rgb p = s.raster.pixel(x, y);
      EXPECT_NE(p, palette::kCusp);
      EXPECT_NE(p, palette::kRay);
      any_bound |= p == palette::kUnitCircle || p == palette::kCjrCircle || p == palette::kHull;
    }
  EXPECT_TRUE(any_bound);
}

TEST(RenderSlice, DeterministicAcrossThreadCounts) {
  Viewport v{-4, 4, -4, 4};
  SliceRender a = render_slice(ConeOrders::make(3, 0), 10, v, 160, 120, 1);
  SliceRender b = render_slice(ConeOrders::make(3, 0), 10, v, 160, 120, 3);
  EXPECT_EQ(a.raster, b.raster);
  EXPECT_EQ(a.cusp_count, b.cusp_count);
}

}  // namespace
}  // namespace riley
