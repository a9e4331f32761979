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

#include "riley/traces.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "riley/error.hpp"

namespace riley {
namespace {

std::vector<long> as_longs(const TracePolynomial& P) {
  std::vector<long> out;
  for (const mpz_class& c : P.exact_coefficients()) {
    EXPECT_TRUE(c.fits_slong_p());
    out.push_back(c.get_si());
  }
  return out;
}

const std::vector<ConeOrders>& sample_orders() {
  static const std::vector<ConeOrders> orders{ConeOrders::parabolic(), ConeOrders::make(2, 3),
                                              ConeOrders::make(3, 3), ConeOrders::make(4, 0),
                                              ConeOrders::make(0, 5), ConeOrders::make(2, 7)};
  return orders;
}

TEST(Traces, SmallParabolicPolynomials) {
  auto poly = [](std::int64_t p, std::int64_t q) {
    return as_longs(farey_polynomial_direct(make_slope(p, q), ConeOrders::parabolic()));
  };
  EXPECT_EQ(poly(0, 1), (std::vector<long>{2, 1}));
  EXPECT_EQ(poly(1, 1), (std::vector<long>{2, -1}));
  EXPECT_EQ(poly(1, 2), (std::vector<long>{2, 0, 1}));
  EXPECT_EQ(poly(2, 5), (std::vector<long>{2, 1, 2, 3, 2, 1}));
}

TEST(Traces, ExactCoefficientsMatchMatrixExpansion) {
  for (const Slope& s : farey_sequence(25)) {
    auto expected = oracle::parabolic_trace_poly(s.p(), s.q());
    auto got = as_longs(farey_polynomial_direct(s, ConeOrders::parabolic()));
    ASSERT_EQ(got.size(), expected.size()) << s.to_string();
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i], expected[i]) << s.to_string();
  }
}

TEST(Traces, RecursiveEqualsDirect) {
  for (const ConeOrders& orders : sample_orders()) {
    for (const Slope& s : farey_sequence(12)) {
      TracePolynomial d = farey_polynomial_direct(s, orders);
      TracePolynomial r = farey_polynomial_recursive(s, orders);
      ASSERT_EQ(d.degree(), r.degree()) << s.to_string() << " " << orders.to_string();
      if (orders.is_parabolic()) {
        EXPECT_TRUE(d.is_exact() && r.is_exact());
        EXPECT_EQ(d.exact_coefficients(), r.exact_coefficients()) << s.to_string();
        continue;
      }
      for (std::size_t i = 0; i <= d.degree(); ++i) {
        double scale = std::max(1.0, std::abs(d.coefficients()[i]));
        EXPECT_LE(std::abs(d.coefficients()[i] - r.coefficients()[i]), 1e-9 * scale)
            << s.to_string() << " " << orders.to_string() << " i=" << i;
      }
    }
  }
}

TEST(Traces, RecursiveExactForLargeDenominators) {
  for (auto [p, q] : {std::pair{17, 40}, {1, 40}, {39, 40}, {21, 34}}) {
    Slope s = make_slope(p, q);
    EXPECT_EQ(farey_polynomial_recursive(s, ConeOrders::parabolic()).exact_coefficients(),
              farey_polynomial_direct(s, ConeOrders::parabolic()).exact_coefficients());
  }
}

TEST(Traces, DegreeAndLeadingCoefficient) {
  for (const ConeOrders& orders : sample_orders()) {
    for (const Slope& s : farey_sequence(40)) {
      TracePolynomial P = farey_polynomial_recursive(s, orders);
      ASSERT_EQ(static_cast<std::int64_t>(P.degree()), s.q()) << s.to_string();
      EXPECT_NEAR(std::abs(P.coefficients().back()), 1.0, 1e-9) << s.to_string();
    }
  }
}

TEST(Traces, PolynomialEvaluatesToWordTrace) {
  auto pts = oracle::random_points(10, 2.5, 41);
  for (const ConeOrders& orders : sample_orders()) {
    for (const Slope& s : farey_sequence(8)) {
      TracePolynomial P = farey_polynomial_direct(s, orders);
      for (Complex rho : pts) {
        Complex expected = oracle::word_trace(s.p(), s.q(), rho, orders.a(), orders.b());
        Complex got = poly_eval(P, rho).value;
        EXPECT_LE(std::abs(got - expected), 1e-9 * std::max(1.0, std::abs(expected)))
            << s.to_string() << " " << orders.to_string();
      }
    }
  }
}

TEST(Traces, FigureEightPoint) {
  for (double sign : {1.0, -1.0}) {
    Complex rho8(0.5, sign * std::sqrt(3.0) / 2);
    auto P35 = farey_polynomial_direct(make_slope(3, 5), ConeOrders::parabolic());
    auto P25 = farey_polynomial_direct(make_slope(2, 5), ConeOrders::parabolic());
    EXPECT_LE(std::abs(poly_eval(P35, rho8).value - 2.0), 1e-12);
    EXPECT_LE(std::abs(poly_eval(P25, rho8).value + 2.0), 1e-12);
    EXPECT_TRUE(word_matrix(farey_word(make_slope(3, 5)), rho8, ConeOrders::parabolic())
                    .is_identity(1e-12));
  }
}

TEST(Traces, TraceInvariantUnderRotationAndInversion) {
  auto pts = oracle::random_points(5, 3.0, 43);
  for (const Slope& s : farey_sequence(10)) {
    auto w = oracle::cutting_word(s.p(), s.q());
    for (Complex rho : pts) {
      Complex t = oracle::word_trace(s.p(), s.q(), rho);
      double tol = 1e-10 * std::max(1.0, std::abs(t));
      for (std::size_t k = 1; k < w.size(); ++k) {
        auto r = w;
        std::rotate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k), r.end());
        auto m = oracle::word_product(r, rho);
        EXPECT_LE(std::abs(m[0] + m[3] - t), tol);
      }
      auto inv = w;
      std::reverse(inv.begin(), inv.end());
      for (auto& letter : inv) letter.second = -letter.second;
      auto m = oracle::word_product(inv, rho);
      EXPECT_LE(std::abs(m[0] + m[3] - t), tol);
    }
  }
}

TEST(Traces, WordMatrixExamples) {
  Complex rho(0.3, 1.2);
  MoebiusMap m = word_matrix(farey_word(make_slope(0, 1)), rho, ConeOrders::parabolic());
  // Y X = [[1, 1], [rho, rho + 1]]
  EXPECT_LE(std::abs(m.a() - 1.0) + std::abs(m.b() - 1.0) + std::abs(m.c() - rho) +
                std::abs(m.d() - (rho + 1.0)),
            1e-14);
  for (const ConeOrders& orders : sample_orders()) {
    for (const Slope& s : farey_sequence(6)) {
      auto ref = oracle::word_product(oracle::cutting_word(s.p(), s.q()), rho, orders.a(), orders.b());
      MoebiusMap w = word_matrix(farey_word(s), rho, orders);
      double err = std::abs(w.a() - ref[0]) + std::abs(w.b() - ref[1]) + std::abs(w.c() - ref[2]) +
                   std::abs(w.d() - ref[3]);
      EXPECT_LE(err, 1e-10);
    }
  }
}

TEST(Traces, WordTraceFunctionMatchesOracle) {
  auto pts = oracle::random_points(8, 4.0, 47);
  for (const ConeOrders& orders : sample_orders()) {
    for (const Slope& s : farey_sequence(15)) {
      TraceFunction f = word_trace_function(s, orders);
      for (Complex rho : pts) {
        Complex expected = oracle::word_trace(s.p(), s.q(), rho, orders.a(), orders.b());
        TraceValue v = f(rho);
        double tol = 1e-9 * std::max(1.0, std::abs(expected)) + 8 * v.error;
        EXPECT_LE(std::abs(v.value - expected), tol) << s.to_string();
        // Central difference for the derivative.
        const double h = 1e-6;
        Complex fd = (oracle::word_trace(s.p(), s.q(), rho + h, orders.a(), orders.b()) -
                      oracle::word_trace(s.p(), s.q(), rho - h, orders.a(), orders.b())) /
                     (2 * h);
        EXPECT_LE(std::abs(v.derivative - fd), 1e-5 * std::max(1.0, std::abs(fd)))
            << s.to_string();
      }
    }
  }
}

TEST(Traces, WordTraceFunctionStableWhereHornerIsNot) {
  Slope s = make_slope(1, 40);
  Complex rho(-3.9, 0.01);
  TraceValue v = word_trace_function(s, ConeOrders::parabolic())(rho);
  Complex expected = oracle::word_trace(1, 40, rho);
  EXPECT_LE(std::abs(v.value - expected), 1e-9 * std::abs(expected));
  EXPECT_LT(std::abs(v.value), 1e4);
}

TEST(Traces, PolynomialTraceFunction) {
  TraceFunction f = polynomial_trace_function({2.0, 0.0, 1.0});
  TraceValue v = f(Complex(1.0, 1.0));
  EXPECT_LE(std::abs(v.value - Complex(2.0, 2.0)), 1e-15);
  EXPECT_LE(std::abs(v.derivative - Complex(2.0, 2.0)), 1e-15);
}

TEST(Traces, PolyRootsExamples) {
  auto sorted = [](std::vector<Complex> r) {
    std::sort(r.begin(), r.end(), [](Complex a, Complex b) {
      return std::pair(a.real(), a.imag()) < std::pair(b.real(), b.imag());
    });
    return r;
  };
  auto P12 = farey_polynomial_direct(make_slope(1, 2), ConeOrders::parabolic());
  auto r = sorted(poly_roots(P12, -2.0));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_LE(std::abs(r[0] - Complex(0, -2)), 1e-12);
  EXPECT_LE(std::abs(r[1] - Complex(0, 2)), 1e-12);
  auto P01 = farey_polynomial_direct(make_slope(0, 1), ConeOrders::parabolic());
  r = poly_roots(P01, -2.0);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_LE(std::abs(r[0] + 4.0), 1e-12);
}

TEST(Traces, PolyRootsSatisfyPolynomial) {
  for (const Slope& s : farey_sequence(12)) {
    auto P = farey_polynomial_direct(s, ConeOrders::parabolic());
    auto roots = poly_roots(P, -2.0);
    ASSERT_EQ(roots.size(), P.degree());
    for (Complex z : roots) {
      TraceValue v = word_trace_function(s, ConeOrders::parabolic())(z);
      EXPECT_LE(std::abs(v.value + 2.0), 1e-7 * std::max(1.0, std::abs(v.derivative)))
          << s.to_string();
    }
  }
}

TEST(Traces, PolyRootsHighDegree) {
  // Expanded coefficients reach ~1e15 here; all 40 roots stay in |rho| <= 4.
  auto P = farey_polynomial_direct(make_slope(1, 40), ConeOrders::parabolic());
  auto roots = poly_roots(P, -2.0);
  ASSERT_EQ(roots.size(), 40u);
  auto trace = word_trace_function(make_slope(1, 40), ConeOrders::parabolic());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    EXPECT_LE(std::abs(roots[i]), 4.0 + 1e-9);
    EXPECT_LE(std::abs(trace(roots[i]).value + 2.0), 1e-6);
    for (std::size_t j = i + 1; j < roots.size(); ++j) EXPECT_GT(std::abs(roots[i] - roots[j]), 1e-6);
  }
}

TEST(Traces, RecursionSeeds) {
  RecursionSeeds seeds = recursion_seeds(ConeOrders::parabolic());
  EXPECT_TRUE(std::isfinite(seeds.apex.real()));
  // At rho = 0 both parents of 1/2 equal 2 and p_{1/2} = 2.
  Complex check = -(Complex(2, 0) * Complex(2, 0)) - seeds.apex + seeds.even_constant;
  EXPECT_LE(std::abs(check - 2.0), 1e-12);
}

TEST(Traces, RejectsBadInput) {
  EXPECT_THROW(farey_polynomial_direct(make_slope(1, 0), ConeOrders::parabolic()), ValidationError);
  EXPECT_THROW(farey_polynomial_recursive(make_slope(1, kMaxPolynomialDenominator + 1),
                                          ConeOrders::parabolic()),
               ValidationError);
}

}  // namespace
}  // namespace riley
