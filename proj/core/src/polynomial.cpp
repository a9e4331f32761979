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

#include "riley/polynomial.hpp"

#include <cmath>

namespace riley {

PolyValue horner(std::span<const Complex> coefficients, Complex z) noexcept {
  Complex value{};
  Complex derivative{};
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    derivative = derivative * z + value;
    value = value * z + *it;
  }
  return {value, derivative};
}

PolyValue horner_extended(std::span<const Complex> coefficients, Complex z) noexcept {
  using Wide = std::complex<long double>;
  Wide w(z.real(), z.imag());
  Wide value{};
  Wide derivative{};
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    derivative = derivative * w + value;
    value = value * w + Wide(it->real(), it->imag());
  }
  auto narrow = [](Wide x) {
    return Complex(static_cast<double>(x.real()), static_cast<double>(x.imag()));
  };
  return {narrow(value), narrow(derivative)};
}

double magnitude_bound(std::span<const Complex> coefficients, double r) noexcept {
  double sum = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) sum = sum * r + std::abs(*it);
  return sum;
}

ComplexCoefficients to_complex(std::span<const mpz_class> coefficients) {
  ComplexCoefficients out;
  out.reserve(coefficients.size());
  for (const mpz_class& c : coefficients) out.emplace_back(c.get_d(), 0.0);
  return out;
}

void trim(IntegerCoefficients& coefficients) {
  while (coefficients.size() > 1 && coefficients.back() == 0) coefficients.pop_back();
}

IntegerCoefficients multiply(std::span<const mpz_class> lhs, std::span<const mpz_class> rhs) {
  if (lhs.empty() || rhs.empty()) return {};
  IntegerCoefficients out(lhs.size() + rhs.size() - 1);
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.size(); ++j) out[i + j] += lhs[i] * rhs[j];
  }
  return out;
}

ComplexCoefficients multiply(std::span<const Complex> lhs, std::span<const Complex> rhs) {
  if (lhs.empty() || rhs.empty()) return {};
  ComplexCoefficients out(lhs.size() + rhs.size() - 1);
  for (std::size_t i = 0; i < lhs.size(); ++i)
    for (std::size_t j = 0; j < rhs.size(); ++j) out[i + j] += lhs[i] * rhs[j];
  return out;
}

double l1_norm(std::span<const Complex> coefficients) noexcept {
  double sum = 0.0;
  for (Complex c : coefficients) sum += std::abs(c);
  return sum;
}

}  // namespace riley
