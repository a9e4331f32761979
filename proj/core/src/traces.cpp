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

#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>

#include <fmt/format.h>

#include "riley/error.hpp"
#include "riley/roots.hpp"

namespace riley {
namespace {

// A generator matrix [[c00, c01], [c10 * rho, c11]] with constant c_ij.
template <typename T>
struct LinearGenerator {
  T c00, c01, c10, c11;
};

template <typename T>
using PolyMatrix = std::array<std::vector<T>, 4>;  // row-major 2x2

template <typename T>
void multiply_right(PolyMatrix<T>& m, const LinearGenerator<T>& g) {
  for (int row = 0; row < 2; ++row) {
    std::vector<T>& left = m[2 * row];
    std::vector<T>& right = m[2 * row + 1];
    std::vector<T> new_left(std::max(left.size(), right.size() + 1), T(0));
    std::vector<T> new_right(std::max(left.size(), right.size()), T(0));
    for (std::size_t i = 0; i < left.size(); ++i) {
      new_left[i] += left[i] * g.c00;
      new_right[i] += left[i] * g.c01;
    }
    for (std::size_t i = 0; i < right.size(); ++i) {
      new_left[i + 1] += right[i] * g.c10;
      new_right[i] += right[i] * g.c11;
    }
    left = std::move(new_left);
    right = std::move(new_right);
  }
}

template <typename T>
std::vector<T> symbolic_trace(const FareyWord& word, const LinearGenerator<T> (&gens)[2][2]) {
  PolyMatrix<T> m{std::vector<T>{T(1)}, std::vector<T>{T(0)}, std::vector<T>{T(0)},
                  std::vector<T>{T(1)}};
  for (const Letter& letter : word.letters) {
    int g = letter.generator == Generator::X ? 0 : 1;
    int e = letter.exponent > 0 ? 0 : 1;
    multiply_right(m, gens[g][e]);
  }
  std::vector<T> trace(std::max(m[0].size(), m[3].size()), T(0));
  for (std::size_t i = 0; i < m[0].size(); ++i) trace[i] += m[0][i];
  for (std::size_t i = 0; i < m[3].size(); ++i) trace[i] += m[3][i];
  return trace;
}

void check_denominator(const Slope& s) {
  if (s.is_apex()) throw ValidationError("the apex 1/0 has no Farey polynomial of its own");
  if (s.q() > kMaxPolynomialDenominator)
    throw ValidationError(
        fmt::format("denominator {} exceeds the limit {}", s.q(), kMaxPolynomialDenominator));
}

// ---- recursion ------------------------------------------------------------

template <typename T>
struct Recursion {
  T apex;
  T odd_constant;
  T even_constant;
};

template <typename T>
std::vector<T> combine(const std::vector<T>& left, const std::vector<T>& right,
                       const std::vector<T>& diff, const T& constant) {
  std::vector<T> out(left.size() + right.size() - 1, T(0));
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j) out[i + j] -= left[i] * right[j];
  for (std::size_t i = 0; i < diff.size(); ++i) out[i] -= diff[i];
  out[0] += constant;
  return out;
}

Slope difference_parent(const Slope& left, const Slope& right) {
  if (left.q() == right.q()) return make_slope(1, 0);  // 0/1 and 1/1
  const Slope& big = left.q() >= right.q() ? left : right;
  const Slope& small = left.q() >= right.q() ? right : left;
  return make_slope(big.p() - small.p(), big.q() - small.q());
}

template <typename T>
class RecursiveBuilder {
 public:
  RecursiveBuilder(ConeOrders orders, Recursion<T> seeds,
                   std::vector<T> (*direct)(const Slope&, const ConeOrders&))
      : orders_(orders), seeds_(std::move(seeds)) {
    memo_.emplace(make_slope(1, 0), std::vector<T>{seeds_.apex});
    memo_.emplace(make_slope(0, 1), direct(make_slope(0, 1), orders_));
    memo_.emplace(make_slope(1, 1), direct(make_slope(1, 1), orders_));
  }

  const std::vector<T>& get(const Slope& s) {
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    auto [left, right] = farey_neighbors(s);
    Slope diff = difference_parent(left, right);
    const T& k = s.q() % 2 == 0 ? seeds_.even_constant : seeds_.odd_constant;
    // std::map keeps references stable across the recursive inserts.
    const std::vector<T>& l = get(left);
    const std::vector<T>& r = get(right);
    const std::vector<T>& d = get(diff);
    return memo_.emplace(s, combine(l, r, d, k)).first->second;
  }

 private:
  ConeOrders orders_;
  Recursion<T> seeds_;
  std::map<Slope, std::vector<T>> memo_;
};

IntegerCoefficients direct_exact(const Slope& s, const ConeOrders&) {
  const LinearGenerator<mpz_class> gens[2][2] = {
      {{1, 1, 0, 1}, {1, -1, 0, 1}},  // X, X^-1
      {{1, 0, 1, 1}, {1, 0, -1, 1}},  // Y, Y^-1
  };
  IntegerCoefficients trace = symbolic_trace(farey_word(s), gens);
  trim(trace);
  return trace;
}

ComplexCoefficients direct_complex(const Slope& s, const ConeOrders& orders) {
  Complex a = orders.alpha();
  Complex b = orders.beta();
  const LinearGenerator<Complex> gens[2][2] = {
      {{a, 1.0, 0.0, std::conj(a)}, {std::conj(a), -1.0, 0.0, a}},
      {{b, 0.0, 1.0, std::conj(b)}, {std::conj(b), 0.0, -1.0, b}},
  };
  ComplexCoefficients trace = symbolic_trace(farey_word(s), gens);
  while (trace.size() > 1 && trace.back() == Complex{}) trace.pop_back();
  return trace;
}

// Solves the apex value and both constants from the direct polynomials of
// 1/2, 1/3 and 1/4, then checks the recursion on further slopes.
template <typename T>
Recursion<T> calibrate(const ConeOrders& orders,
                       std::vector<T> (*direct)(const Slope&, const ConeOrders&),
                       bool (*agree)(const std::vector<T>&, const std::vector<T>&)) {
  auto p = [&](std::int64_t num, std::int64_t den) { return direct(make_slope(num, den), orders); };
  auto solve_constant = [&](const std::vector<T>& target, const std::vector<T>& left,
                            const std::vector<T>& right, const std::vector<T>& diff,
                            bool diff_is_unknown) {
    // target = -left*right - diff + k   => residue must be a constant.
    std::vector<T> residue = target;
    residue.resize(std::max(residue.size(), left.size() + right.size() - 1), T(0));
    for (std::size_t i = 0; i < left.size(); ++i)
      for (std::size_t j = 0; j < right.size(); ++j) residue[i + j] += left[i] * right[j];
    if (!diff_is_unknown)
      for (std::size_t i = 0; i < diff.size(); ++i) residue[i] += diff[i];
    std::vector<T> constant_only(residue.size(), T(0));
    constant_only[0] = residue[0];
    if (!agree(residue, constant_only))
      throw InternalConsistencyError("Farey recursion residue is not constant for orders " +
                                     orders.to_string());
    return residue[0];
  };

  auto p01 = p(0, 1), p11 = p(1, 1), p12 = p(1, 2), p13 = p(1, 3), p14 = p(1, 4);
  Recursion<T> seeds;
  // 1/4 = (0/1 (+) 1/3), difference parent 1/2; even denominator.
  seeds.even_constant = solve_constant(p14, p01, p13, p12, false);
  // 1/3 = (0/1 (+) 1/2), difference parent 1/1; odd denominator.
  seeds.odd_constant = solve_constant(p13, p01, p12, p11, false);
  // 1/2 = (0/1 (+) 1/1), difference parent is the apex: k_even - p_{1/0}.
  seeds.apex = seeds.even_constant - solve_constant(p12, p01, p11, {}, true);

  RecursiveBuilder<T> builder(orders, seeds, direct);
  constexpr std::pair<int, int> checks[] = {{1, 2}, {2, 3}, {3, 4}, {2, 5},
                                            {3, 5}, {4, 7}, {3, 8}, {5, 8}};
  for (auto [num, den] : checks) {
    Slope s = make_slope(num, den);
    if (!agree(builder.get(s), direct(s, orders)))
      throw InternalConsistencyError("Farey recursion disagrees with the direct product at " +
                                     s.to_string() + " for orders " + orders.to_string());
  }
  return seeds;
}

bool agree_exact(const IntegerCoefficients& a, const IntegerCoefficients& b) {
  IntegerCoefficients x = a, y = b;
  trim(x);
  trim(y);
  return x == y;
}

bool agree_complex(const ComplexCoefficients& a, const ComplexCoefficients& b) {
  std::size_t n = std::max(a.size(), b.size());
  double scale = 1.0;
  for (Complex c : a) scale = std::max(scale, std::abs(c));
  for (std::size_t i = 0; i < n; ++i) {
    Complex x = i < a.size() ? a[i] : Complex{};
    Complex y = i < b.size() ? b[i] : Complex{};
    if (std::abs(x - y) > 1e-9 * scale) return false;
  }
  return true;
}

std::mutex& seeds_mutex() {
  static std::mutex m;
  return m;
}

const Recursion<mpz_class>& exact_seeds() {
  static const Recursion<mpz_class> seeds =
      calibrate<mpz_class>(ConeOrders::parabolic(), direct_exact, agree_exact);
  return seeds;
}

Recursion<Complex> complex_seeds(const ConeOrders& orders) {
  static std::map<ConeOrders, Recursion<Complex>> cache;
  {
    std::lock_guard lock(seeds_mutex());
    if (auto it = cache.find(orders); it != cache.end()) return it->second;
  }
  Recursion<Complex> seeds = calibrate<Complex>(orders, direct_complex, agree_complex);
  std::lock_guard lock(seeds_mutex());
  return cache.emplace(orders, seeds).first->second;
}

}  // namespace

TracePolynomial::TracePolynomial(Slope slope, ConeOrders orders, IntegerCoefficients exact)
    : slope_(slope), orders_(orders) {
  trim(exact);
  if (exact.size() != static_cast<std::size_t>(slope.q()) + 1 || abs(exact.back()) != 1)
    throw InternalConsistencyError("Farey polynomial " + slope.to_string() +
                                   " must have degree q and leading coefficient +-1");
  exact_ = std::move(exact);
  coefficients_ = to_complex(*exact_);
}

TracePolynomial::TracePolynomial(Slope slope, ConeOrders orders, ComplexCoefficients coefficients)
    : slope_(slope), orders_(orders), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != static_cast<std::size_t>(slope.q()) + 1 ||
      std::abs(std::abs(coefficients_.back()) - 1.0) > 1e-9)
    throw InternalConsistencyError("Farey polynomial " + slope.to_string() +
                                   " must have degree q and unit leading coefficient");
}

MoebiusMap word_matrix(const FareyWord& word, Complex rho, const ConeOrders& orders) {
  auto [x, y] = generator_pair(rho, orders);
  MoebiusMap xi = inverse(x);
  MoebiusMap yi = inverse(y);
  MoebiusMap m;
  for (const Letter& letter : word.letters) {
    const MoebiusMap& g = letter.generator == Generator::X ? (letter.exponent > 0 ? x : xi)
                                                            : (letter.exponent > 0 ? y : yi);
    m = compose(m, g);
  }
  return m;
}

TracePolynomial farey_polynomial_direct(const Slope& s, const ConeOrders& orders) {
  check_denominator(s);
  if (orders.is_parabolic()) return TracePolynomial(s, orders, direct_exact(s, orders));
  return TracePolynomial(s, orders, direct_complex(s, orders));
}

TracePolynomial farey_polynomial_recursive(const Slope& s, const ConeOrders& orders) {
  check_denominator(s);
  if (orders.is_parabolic()) {
    RecursiveBuilder<mpz_class> builder(orders, exact_seeds(), direct_exact);
    return TracePolynomial(s, orders, builder.get(s));
  }
  RecursiveBuilder<Complex> builder(orders, complex_seeds(orders), direct_complex);
  return TracePolynomial(s, orders, builder.get(s));
}

RecursionSeeds recursion_seeds(const ConeOrders& orders) {
  if (orders.is_parabolic()) {
    const auto& seeds = exact_seeds();
    return {Complex(seeds.apex.get_d(), 0.0), Complex(seeds.odd_constant.get_d(), 0.0),
            Complex(seeds.even_constant.get_d(), 0.0)};
  }
  auto seeds = complex_seeds(orders);
  return {seeds.apex, seeds.odd_constant, seeds.even_constant};
}

PolyValue poly_eval(const TracePolynomial& P, Complex rho) noexcept {
  return horner(P.coefficients(), rho);
}

TraceFunction word_trace_function(const Slope& s, const ConeOrders& orders) {
  check_denominator(s);
  // X^{+-1} = [[a, sign], [0, conj a]],  Y^{+-1} = [[b, 0], [sign rho, conj b]].
  struct Step {
    bool is_x;
    Complex diag;
    double sign;
  };
  FareyWord word = farey_word(s);
  std::vector<Step> steps;
  steps.reserve(word.letters.size());
  for (const Letter& l : word.letters) {
    bool is_x = l.generator == Generator::X;
    Complex d = is_x ? orders.alpha() : orders.beta();
    if (l.exponent < 0) d = std::conj(d);
    steps.push_back({is_x, d, l.exponent > 0 ? 1.0 : -1.0});
  }
  return [steps = std::move(steps)](Complex rho) {
    Complex m0 = 1.0, m1 = 0.0, m2 = 0.0, m3 = 1.0;
    Complex d0 = 0.0, d1 = 0.0, d2 = 0.0, d3 = 0.0;
    double largest = 1.0;
    auto size = [](Complex z) { return std::abs(z.real()) + std::abs(z.imag()); };
    for (const Step& st : steps) {
      const Complex a = st.diag;
      const Complex ac = std::conj(a);
      if (st.is_x) {
        m1 = m0 * st.sign + m1 * ac;
        m0 *= a;
        m3 = m2 * st.sign + m3 * ac;
        m2 *= a;
        d1 = d0 * st.sign + d1 * ac;
        d0 *= a;
        d3 = d2 * st.sign + d3 * ac;
        d2 *= a;
      } else {
        const Complex c = st.sign * rho;
        // d(MY) = dM Y + M dY with dY = [[0, 0], [sign, 0]].
        d0 = d0 * a + d1 * c + m1 * st.sign;
        d1 *= ac;
        d2 = d2 * a + d3 * c + m3 * st.sign;
        d3 *= ac;
        m0 = m0 * a + m1 * c;
        m1 *= ac;
        m2 = m2 * a + m3 * c;
        m3 *= ac;
      }
      largest = std::max({largest, size(m0), size(m1), size(m2), size(m3)});
    }
    double gmax = std::max(1.0, std::abs(rho));
    double error = 4.0 * std::numeric_limits<double>::epsilon() *
                   static_cast<double>(steps.size()) * largest * gmax;
    return TraceValue{m0 + m3, d0 + d3, error};
  };
}

TraceFunction polynomial_trace_function(ComplexCoefficients coefficients) {
  return [c = std::move(coefficients)](Complex rho) {
    PolyValue pv = horner(c, rho);
    double error = 4.0 * std::numeric_limits<double>::epsilon() *
                   static_cast<double>(c.size()) * magnitude_bound(c, std::abs(rho));
    return TraceValue{pv.value, pv.derivative, error};
  };
}

std::vector<Complex> poly_roots(const TracePolynomial& P, Complex target) {
  ComplexCoefficients shifted = P.coefficients();
  shifted[0] -= target;
  if (P.degree() <= 1) return aberth_roots(shifted);
  // Horner on the expanded coefficients cannot resolve roots past q ~ 15;
  // the word product can.
  TraceFunction trace = word_trace_function(P.slope(), P.orders());
  return aberth_roots(P.degree(), cauchy_bound(shifted), [&](Complex rho) {
    TraceValue tv = trace(rho);
    return RootEvaluation{tv.value - target, tv.derivative, tv.error};
  });
}

}  // namespace riley
