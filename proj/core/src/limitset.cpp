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

#include "riley/limitset.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "riley/error.hpp"
#include "riley/parallel.hpp"

namespace riley {
namespace {

int order_of(Generator g, const ConeOrders& orders) {
  return g == Generator::X ? orders.a() : orders.b();
}

struct Step {
  Generator generator;
  int exponent;
  MoebiusMap matrix;
};

// All one-step extensions, with matrices for the given parameter.
std::vector<Step> steps_for(const ConeOrders& orders, Complex rho) {
  auto [x, y] = generator_pair(rho, orders);
  std::vector<Step> steps;
  for (Generator g : {Generator::X, Generator::Y}) {
    const MoebiusMap& m = g == Generator::X ? x : y;
    int n = order_of(g, orders);
    if (n == ConeOrders::kInfinity) {
      steps.push_back({g, 1, m});
      steps.push_back({g, -1, inverse(m)});
    } else {
      MoebiusMap power = m;
      for (int e = 1; e < n; ++e) {
        steps.push_back({g, e, power});
        power = compose(power, m);
      }
    }
  }
  return steps;
}

// Whether `step` may follow a word whose last syllable is `last`.
bool allowed(const Syllable* last, const Step& step, const ConeOrders& orders) {
  if (!last || last->generator != step.generator) return true;
  if (order_of(step.generator, orders) != ConeOrders::kInfinity) return false;
  return (last->exponent > 0) == (step.exponent > 0);
}

void push_step(GroupWord& w, const Step& step) {
  if (!w.syllables.empty() && w.syllables.back().generator == step.generator)
    w.syllables.back().exponent += step.exponent;
  else
    w.syllables.push_back({step.generator, step.exponent});
}

void pop_step(GroupWord& w, const Step& step) {
  Syllable& last = w.syllables.back();
  if (last.exponent == step.exponent)
    w.syllables.pop_back();
  else
    last.exponent -= step.exponent;
}

void enumerate(const ConeOrders& orders, const std::vector<Step>& steps, GroupWord& word,
               int remaining, const std::function<void(const GroupWord&)>& visit) {
  if (remaining == 0) return;
  for (const Step& step : steps) {
    const Syllable* last = word.syllables.empty() ? nullptr : &word.syllables.back();
    if (!allowed(last, step, orders)) continue;
    push_step(word, step);
    visit(word);
    enumerate(orders, steps, word, remaining - 1, visit);
    pop_step(word, step);
  }
}

double diameter(const std::vector<SpherePoint>& pts) {
  double d = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, chordal_distance(pts[i], pts[j]));
  return d;
}

struct Search {
  const ConeOrders& orders;
  const std::vector<Step>& steps;
  const std::vector<SpherePoint>& seeds;
  double epsilon;
  int depth;
  std::size_t cap;
  std::vector<Complex> points;
  bool truncated = false;

  void emit(const std::vector<SpherePoint>& images) {
    for (const SpherePoint& p : images) {
      if (p.is_infinity()) continue;
      if (points.size() >= cap) {
        truncated = true;
        return;
      }
      points.push_back(p.value());
    }
  }

  void visit(const MoebiusMap& m, const Step& last_step, int level) {
    const Syllable last{last_step.generator, last_step.exponent};
    for (const Step& step : steps) {
      if (truncated) return;
      if (!allowed(&last, step, orders)) continue;
      MoebiusMap n = compose(m, step.matrix);
      std::vector<SpherePoint> images;
      images.reserve(seeds.size());
      for (const SpherePoint& s : seeds) images.push_back(apply(n, s));
      if (level + 1 >= depth || diameter(images) < epsilon)
        emit(images);
      else
        visit(n, step, level + 1);
    }
  }
};

}  // namespace

int GroupWord::length(const ConeOrders& orders) const {
  int n = 0;
  for (const Syllable& s : syllables)
    n += order_of(s.generator, orders) == ConeOrders::kInfinity ? std::abs(s.exponent) : 1;
  return n;
}

std::string GroupWord::to_string() const {
  if (syllables.empty()) return "1";
  std::string out;
  for (const Syllable& s : syllables) {
    if (!out.empty()) out += ' ';
    out += s.generator == Generator::X ? 'X' : 'Y';
    if (s.exponent != 1) out += fmt::format("^{}", s.exponent);
  }
  return out;
}

MoebiusMap GroupWord::evaluate(Complex rho, const ConeOrders& orders) const {
  auto [x, y] = generator_pair(rho, orders);
  MoebiusMap xi = inverse(x);
  MoebiusMap yi = inverse(y);
  MoebiusMap m;
  for (const Syllable& s : syllables) {
    bool is_x = s.generator == Generator::X;
    const MoebiusMap& g = s.exponent > 0 ? (is_x ? x : y) : (is_x ? xi : yi);
    for (int k = 0; k < std::abs(s.exponent); ++k) m = compose(m, g);
  }
  return m;
}

void for_each_reduced(const ConeOrders& orders, int depth,
                      const std::function<void(const GroupWord&)>& visit) {
  if (depth < 0) throw ValidationError("word depth must be >= 0");
  std::vector<Step> steps = steps_for(orders, 0.0);
  GroupWord word;
  enumerate(orders, steps, word, depth, visit);
}

std::vector<GroupWord> enumerate_reduced(const ConeOrders& orders, int depth) {
  std::vector<GroupWord> out;
  for_each_reduced(orders, depth, [&](const GroupWord& w) { out.push_back(w); });
  return out;
}

std::vector<SpherePoint> limit_set_seeds(const SlicePoint& pt) {
  std::vector<MoebiusMap> words;
  auto [x, y] = generator_pair(pt.rho, pt.orders);
  words.push_back(x);
  words.push_back(y);
  for (const GroupWord& w : enumerate_reduced(pt.orders, 2)) {
    if (w.syllables.size() == 2) words.push_back(w.evaluate(pt.rho, pt.orders));
  }
  std::vector<SpherePoint> seeds;
  for (const MoebiusMap& m : words) {
    if (m.is_identity(1e-12)) continue;
    for (const SpherePoint& p : fixed_points(m)) {
      bool fresh = std::none_of(seeds.begin(), seeds.end(), [&](const SpherePoint& s) {
        return chordal_distance(s, p) < 1e-12;
      });
      if (fresh) seeds.push_back(p);
    }
  }
  return seeds;
}

LimitSetCloud limit_set(const SlicePoint& pt, const LimitSetOptions& options) {
  if (options.depth < 0) throw ValidationError("limit-set depth must be >= 0");
  if (!(options.epsilon > 0.0)) throw ValidationError("limit-set epsilon must be > 0");
  if (options.cap < 1) throw ValidationError("limit-set point cap must be >= 1");

  LimitSetCloud cloud{{}, pt.rho, pt.orders, options.depth, options.epsilon, false};
  std::vector<SpherePoint> seeds = limit_set_seeds(pt);
  if (options.depth == 0) {
    for (const SpherePoint& s : seeds) {
      if (s.is_infinity()) continue;
      if (cloud.points.size() >= options.cap) {
        cloud.truncated = true;
        break;
      }
      cloud.points.push_back(s.value());
    }
    return cloud;
  }

  std::vector<Step> steps = steps_for(pt.orders, pt.rho);
  std::vector<Search> subtrees;
  subtrees.reserve(steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i)
    subtrees.push_back(
        Search{pt.orders, steps, seeds, options.epsilon, options.depth, options.cap, {}, false});

  parallel_for(steps.size(), options.threads, [&](std::size_t i) {
    Search& search = subtrees[i];
    const Step& first = steps[i];
    std::vector<SpherePoint> images;
    for (const SpherePoint& s : seeds) images.push_back(apply(first.matrix, s));
    if (options.depth == 1 || diameter(images) < options.epsilon)
      search.emit(images);
    else
      search.visit(first.matrix, first, 1);
  });

  for (Search& search : subtrees) {
    cloud.truncated = cloud.truncated || search.truncated;
    std::size_t room = options.cap - cloud.points.size();
    if (search.points.size() > room) cloud.truncated = true;
    std::size_t take = std::min(room, search.points.size());
    cloud.points.insert(cloud.points.end(), search.points.begin(),
                        search.points.begin() + static_cast<std::ptrdiff_t>(take));
  }
  return cloud;
}

Raster rasterize(const LimitSetCloud& cloud, const Viewport& view, int width, int height) {
  view.validate();
  Raster raster(width, height);
  std::vector<std::uint32_t> hits(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
  std::uint32_t most = 0;
  for (Complex z : cloud.points) {
    auto [x, y] = to_pixel(view, width, height, z);
    if (x < 0) continue;
    std::uint32_t& h = hits[static_cast<std::size_t>(y) * width + x];
    most = std::max(most, ++h);
  }
  if (most == 0) return raster;
  const double scale = 255.0 / std::log1p(static_cast<double>(most));
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      std::uint32_t h = hits[static_cast<std::size_t>(y) * width + x];
      if (h == 0) continue;
      auto v = static_cast<std::uint8_t>(std::lround(scale * std::log1p(static_cast<double>(h))));
      raster.set(x, y, {v, v, v});
    }
  }
  return raster;
}

}  // namespace riley
