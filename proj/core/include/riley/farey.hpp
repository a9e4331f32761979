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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace riley {

/// A reduced slope p/q in [0, 1], or the apex 1/0 of the Farey triangle.
class Slope {
 public:
  constexpr Slope() = default;

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }
  bool is_apex() const noexcept { return q_ == 0; }
  double value() const noexcept { return static_cast<double>(p_) / static_cast<double>(q_); }

  /// The mirror slope (q - p)/q.
  Slope reflected() const noexcept { return Slope(q_ - p_, q_); }

  std::string to_string() const;

  friend bool operator==(const Slope&, const Slope&) = default;
  /// Orders by value; the apex sorts last.
  friend std::strong_ordering operator<=>(const Slope& l, const Slope& r) noexcept {
    return l.p_ * r.q_ <=> r.p_ * l.q_;
  }

 private:
  friend Slope make_slope(std::int64_t p, std::int64_t q);
  friend Slope mediant(const Slope& l, const Slope& r);
  constexpr Slope(std::int64_t p, std::int64_t q) : p_(p), q_(q) {}

  std::int64_t p_ = 0;
  std::int64_t q_ = 1;
};

/// Reduces and validates. Accepts 0 <= p/q <= 1 and 1/0; throws
/// ValidationError otherwise.
Slope make_slope(std::int64_t p, std::int64_t q);

/// Parses "p/q".
Slope parse_slope(std::string_view text);

Slope mediant(const Slope& l, const Slope& r);

/// The Stern-Brocot parents (left < s < right) of a slope with q >= 2.
std::pair<Slope, Slope> farey_neighbors(const Slope& s);

/// Every reduced p/q in [0, 1] with q <= max_denominator, ascending.
std::vector<Slope> farey_sequence(std::int64_t max_denominator);

/// Same set as farey_sequence, breadth-first through the Stern-Brocot tree:
/// 0/1, 1/1, 1/2, 1/3, 2/3, 1/4, 2/5, 3/5, 3/4, ...
std::vector<Slope> stern_brocot_order(std::int64_t max_denominator);

enum class Generator : std::uint8_t { X, Y };

struct Letter {
  Generator generator;
  int exponent;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Alternating word Y X Y X ... of length 2q with exponents
/// (-1)^floor(i p / q), i = 1..2q.
struct FareyWord {
  Slope slope;
  std::vector<Letter> letters;

  std::string to_string() const;
};

FareyWord farey_word(const Slope& s);

}  // namespace riley
