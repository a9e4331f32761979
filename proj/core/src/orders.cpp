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

#include "riley/orders.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "riley/error.hpp"

namespace riley {
namespace {

int parse_order(std::string_view token) {
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  if (token == "inf" || token == "infinity" || token == "oo") return ConeOrders::kInfinity;
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ValidationError("cannot parse cone order '" + std::string(token) + "'");
  return value;
}

Complex rotation(int order) {
  if (order == ConeOrders::kInfinity) return {1.0, 0.0};
  return std::polar(1.0, std::numbers::pi / order);
}

}  // namespace

ConeOrders ConeOrders::make(int a, int b, bool allow_degenerate) {
  auto valid = [](int n) { return n == kInfinity || n >= 2; };
  if (!valid(a) || !valid(b))
    throw ValidationError("cone orders must be integers >= 2 or inf");
  auto big = [](int n) { return n == kInfinity || n >= 3; };
  if (!big(a) && !big(b) && !allow_degenerate)
    throw ValidationError("cone orders (2,2) give a degenerate slice; max(a,b) must be >= 3");
  return ConeOrders(a, b);
}

ConeOrders ConeOrders::parse(std::string_view text, bool allow_degenerate) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos)
    throw ValidationError("orders must look like 'a,b'");
  return make(parse_order(text.substr(0, comma)), parse_order(text.substr(comma + 1)),
              allow_degenerate);
}

Complex ConeOrders::alpha() const { return rotation(a_); }
Complex ConeOrders::beta() const { return rotation(b_); }

double ConeOrders::trace_x() const {
  return a_infinite() ? 2.0 : 2.0 * std::cos(std::numbers::pi / a_);
}

double ConeOrders::trace_y() const {
  return b_infinite() ? 2.0 : 2.0 * std::cos(std::numbers::pi / b_);
}

std::string ConeOrders::to_string() const {
  auto one = [](int n) { return n == kInfinity ? std::string("inf") : std::to_string(n); };
  return one(a_) + "," + one(b_);
}

}  // namespace riley
