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

#include <span>
#include <vector>

#include <gmpxx.h>

#include "riley/orders.hpp"

namespace riley {

/// Dense coefficient lists, lowest degree first.
using IntegerCoefficients = std::vector<mpz_class>;
using ComplexCoefficients = std::vector<Complex>;

struct PolyValue {
  Complex value;
  Complex derivative;
};

/// Horner's rule with the derivative carried alongside.
PolyValue horner(std::span<const Complex> coefficients, Complex z) noexcept;

/// Horner in extended precision; used where residuals are compared
/// against tight tolerances.
PolyValue horner_extended(std::span<const Complex> coefficients, Complex z) noexcept;

/// sum |c_i| r^i: scale of the rounding error of Horner at |z| = r.
double magnitude_bound(std::span<const Complex> coefficients, double r) noexcept;

ComplexCoefficients to_complex(std::span<const mpz_class> coefficients);

/// Strips trailing zero coefficients (keeps at least one entry).
void trim(IntegerCoefficients& coefficients);

IntegerCoefficients multiply(std::span<const mpz_class> lhs, std::span<const mpz_class> rhs);
ComplexCoefficients multiply(std::span<const Complex> lhs, std::span<const Complex> rhs);

/// Sum of |c_i|.
double l1_norm(std::span<const Complex> coefficients) noexcept;

}  // namespace riley
