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

#include <complex>
#include <optional>
#include <string>
#include <string_view>

namespace riley {

using Complex = std::complex<double>;

/// Cone-point orders (a, b) of the two generators. An order of
/// `ConeOrders::kInfinity` means the generator is parabolic.
class ConeOrders {
 public:
  static constexpr int kInfinity = 0;

  /// The classical parabolic slice (inf, inf).
  constexpr ConeOrders() = default;

  /// Throws ValidationError unless each order is >= 2 (or infinite) and
  /// max(a, b) >= 3. The pair (2, 2) is accepted only when
  /// `allow_degenerate` is set; its slice collapses to an interval.
  static ConeOrders make(int a, int b, bool allow_degenerate = false);
  static ConeOrders parabolic() { return ConeOrders{}; }

  /// Parses "a,b" where each entry is an integer or `inf`.
  static ConeOrders parse(std::string_view text, bool allow_degenerate = false);

  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }
  bool a_infinite() const noexcept { return a_ == kInfinity; }
  bool b_infinite() const noexcept { return b_ == kInfinity; }
  bool is_parabolic() const noexcept { return a_infinite() && b_infinite(); }
  bool is_degenerate() const noexcept { return a_ == 2 && b_ == 2; }
  bool symmetric() const noexcept { return a_ == b_; }

  /// exp(pi i / a), with pi i / inf := 0.
  Complex alpha() const;
  Complex beta() const;
  /// 2 cos(pi / a), the trace of X.
  double trace_x() const;
  double trace_y() const;

  std::string to_string() const;

  friend bool operator==(const ConeOrders&, const ConeOrders&) = default;
  friend auto operator<=>(const ConeOrders&, const ConeOrders&) = default;

 private:
  constexpr ConeOrders(int a, int b) : a_(a), b_(b) {}

  int a_ = kInfinity;
  int b_ = kInfinity;
};

}  // namespace riley
