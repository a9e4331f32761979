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

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "riley/farey.hpp"
#include "riley/moebius.hpp"
#include "riley/polynomial.hpp"

namespace riley {

/// The Farey polynomial p_{p/q}(rho) = tr w_{p/q}(X, Y_rho).
///
/// Parabolic orders carry exact integer coefficients; the complex list is
/// always populated so evaluation never has to branch on the kind.
class TracePolynomial {
 public:
  TracePolynomial(Slope slope, ConeOrders orders, IntegerCoefficients exact);
  TracePolynomial(Slope slope, ConeOrders orders, ComplexCoefficients coefficients);

  const Slope& slope() const noexcept { return slope_; }
  const ConeOrders& orders() const noexcept { return orders_; }
  std::size_t degree() const noexcept { return coefficients_.size() - 1; }

  bool is_exact() const noexcept { return exact_.has_value(); }
  /// Throws std::bad_optional_access when the polynomial is not exact.
  const IntegerCoefficients& exact_coefficients() const { return exact_.value(); }
  const ComplexCoefficients& coefficients() const noexcept { return coefficients_; }

 private:
  Slope slope_;
  ConeOrders orders_;
  std::optional<IntegerCoefficients> exact_;
  ComplexCoefficients coefficients_;
};

/// Largest denominator accepted by the polynomial builders.
inline constexpr std::int64_t kMaxPolynomialDenominator = 2000;

/// Left-to-right product of the generator matrices spelled by `word`.
MoebiusMap word_matrix(const FareyWord& word, Complex rho, const ConeOrders& orders);

/// Trace of the Farey word expanded symbolically over the ring of
/// polynomials in rho. This is the reference construction.
TracePolynomial farey_polynomial_direct(const Slope& s, const ConeOrders& orders);

/// Same polynomial through the three-term recursion over the Stern-Brocot
/// tree:  p_m = -p_l p_r - p_d + k(q_m mod 2), with p_{1/0} constant.
/// The seed and the two constants are solved from the direct construction
/// once per cone-order pair and checked on further slopes; a mismatch
/// throws InternalConsistencyError.
TracePolynomial farey_polynomial_recursive(const Slope& s, const ConeOrders& orders);

/// Recursion data solved against the direct product.
struct RecursionSeeds {
  Complex apex;           // p_{1/0}
  Complex odd_constant;   // k for odd mediant denominators
  Complex even_constant;  // k for even mediant denominators
};

RecursionSeeds recursion_seeds(const ConeOrders& orders);

PolyValue poly_eval(const TracePolynomial& P, Complex rho) noexcept;

/// A trace value with its rho-derivative and an estimate of the rounding
/// error in `value`.
struct TraceValue {
  Complex value;
  Complex derivative;
  double error = 0.0;
};

using TraceFunction = std::function<TraceValue(Complex)>;

/// Evaluates p_{p/q} as the trace of the word's matrix product. The
/// expanded coefficients cancel badly once q grows past ~15; the partial
/// products stay comparable to the final trace, so this is the evaluator
/// used for path-lifting.
TraceFunction word_trace_function(const Slope& s, const ConeOrders& orders);

/// Horner evaluation of a coefficient list.
TraceFunction polynomial_trace_function(ComplexCoefficients coefficients);

/// Every root of P(rho) - target, with multiplicity.
std::vector<Complex> poly_roots(const TracePolynomial& P, Complex target);

}  // namespace riley
