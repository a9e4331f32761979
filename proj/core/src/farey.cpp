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

#include "riley/farey.hpp"

#include <charconv>
#include <deque>
#include <numeric>
#include <tuple>

#include "riley/error.hpp"

namespace riley {

std::string Slope::to_string() const { return std::to_string(p_) + "/" + std::to_string(q_); }

Slope make_slope(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw ValidationError("0/0 is not a slope");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  std::int64_t g = std::gcd(p, q);
  p /= g;
  q /= g;
  if (q == 0) {
    if (p != 1) throw ValidationError("apex slope must be 1/0");
    return Slope(1, 0);
  }
  if (p < 0 || p > q)
    throw ValidationError("slope " + std::to_string(p) + "/" + std::to_string(q) +
                          " outside [0,1]");
  return Slope(p, q);
}

Slope parse_slope(std::string_view text) {
  auto slash = text.find('/');
  std::int64_t p = 0;
  std::int64_t q = 1;
  auto parse = [](std::string_view t, std::int64_t& out) {
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
    return ec == std::errc() && ptr == t.data() + t.size() && !t.empty();
  };
  bool ok = slash == std::string_view::npos
                ? parse(text, p)
                : parse(text.substr(0, slash), p) && parse(text.substr(slash + 1), q);
  if (!ok) throw ValidationError("cannot parse slope '" + std::string(text) + "'");
  return make_slope(p, q);
}

Slope mediant(const Slope& l, const Slope& r) { return Slope(l.p_ + r.p_, l.q_ + r.q_); }

std::pair<Slope, Slope> farey_neighbors(const Slope& s) {
  if (s.q() < 2) throw ValidationError("slope " + s.to_string() + " has no Farey parents");
  // Left parent a/b solves b p - a q = 1 with 0 < b < q.
  std::int64_t p = s.p();
  std::int64_t q = s.q();
  std::int64_t old_r = p, r = q, old_x = 1, x = 0;
  while (r != 0) {
    std::int64_t k = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - k * r};
    std::tie(old_x, x) = std::pair{x, old_x - k * x};
  }
  std::int64_t b = ((old_x % q) + q) % q;  // p^-1 mod q
  std::int64_t a = (b * p - 1) / q;
  return {make_slope(a, b), make_slope(p - a, q - b)};
}

std::vector<Slope> farey_sequence(std::int64_t max_denominator) {
  if (max_denominator < 1) throw ValidationError("Farey order must be >= 1");
  std::vector<Slope> out;
  std::int64_t a = 0, b = 1, c = 1, d = max_denominator;
  out.push_back(make_slope(a, b));
  while (c <= max_denominator) {
    std::int64_t k = (max_denominator + b) / d;
    std::tie(a, b, c, d) = std::tuple{c, d, k * c - a, k * d - b};
    out.push_back(make_slope(a, b));
  }
  return out;
}

std::vector<Slope> stern_brocot_order(std::int64_t max_denominator) {
  if (max_denominator < 1) throw ValidationError("Farey order must be >= 1");
  std::vector<Slope> out{make_slope(0, 1), make_slope(1, 1)};
  std::deque<std::pair<Slope, Slope>> queue{{out[0], out[1]}};
  while (!queue.empty()) {
    auto [l, r] = queue.front();
    queue.pop_front();
    Slope m = mediant(l, r);
    if (m.q() > max_denominator) continue;
    out.push_back(m);
    queue.emplace_back(l, m);
    queue.emplace_back(m, r);
  }
  return out;
}

std::string FareyWord::to_string() const {
  std::string out;
  for (const Letter& letter : letters) {
    if (!out.empty()) out += ' ';
    out += letter.generator == Generator::X ? 'X' : 'Y';
    if (letter.exponent != 1) out += "^" + std::to_string(letter.exponent);
  }
  return out;
}

FareyWord farey_word(const Slope& s) {
  if (s.is_apex()) throw ValidationError("the apex 1/0 has no Farey word");
  FareyWord word{s, {}};
  word.letters.reserve(static_cast<std::size_t>(2 * s.q()));
  for (std::int64_t i = 1; i <= 2 * s.q(); ++i) {
    Generator g = i % 2 == 1 ? Generator::Y : Generator::X;
    std::int64_t floor_value = (i * s.p()) / s.q();
    word.letters.push_back({g, floor_value % 2 == 0 ? 1 : -1});
  }
  return word;
}

}  // namespace riley
