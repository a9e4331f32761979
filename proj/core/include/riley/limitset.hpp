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

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "riley/farey.hpp"
#include "riley/moebius.hpp"
#include "riley/raster.hpp"

namespace riley {

/// A point of the slice: the parameter together with the cone orders.
struct SlicePoint {
  Complex rho;
  ConeOrders orders;
};

struct Syllable {
  Generator generator;
  int exponent;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Reduced word in Z_a * Z_b. Adjacent syllables use different generators;
/// finite-order exponents lie in 1..order-1.
struct GroupWord {
  std::vector<Syllable> syllables;

  /// Word length: one per finite-order syllable, |e| per infinite-order one.
  int length(const ConeOrders& orders) const;
  std::string to_string() const;
  MoebiusMap evaluate(Complex rho, const ConeOrders& orders) const;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
};

/// Visits every reduced word of length 1..depth exactly once, depth-first,
/// each before its extensions. A step appends a syllable of a finite-order
/// generator, or a single letter X^{+-1} / Y^{+-1} of an infinite-order one.
void for_each_reduced(const ConeOrders& orders, int depth,
                      const std::function<void(const GroupWord&)>& visit);
std::vector<GroupWord> enumerate_reduced(const ConeOrders& orders, int depth);

struct LimitSetOptions {
  int depth = 40;
  double epsilon = 1e-3;
  std::size_t cap = 5'000'000;
  /// 0 resolves through resolve_threads.
  int threads = 0;
};

struct LimitSetCloud {
  std::vector<Complex> points;  // infinity dropped
  Complex rho;
  ConeOrders orders;
  int depth = 0;
  double epsilon = 0.0;
  bool truncated = false;
};

/// Seed points for the search: the fixed points of X, Y and of every
/// two-syllable word.
std::vector<SpherePoint> limit_set_seeds(const SlicePoint& pt);

/// Depth-first search over reduced words; a branch is emitted (images of
/// every seed) and pruned once the seed images have chordal diameter
/// below epsilon, or at the depth limit. Depth 0 yields the seeds.
LimitSetCloud limit_set(const SlicePoint& pt, const LimitSetOptions& options = {});

/// Hit counts per pixel, log-scaled to 8-bit gray.
Raster rasterize(const LimitSetCloud& cloud, const Viewport& view, int width, int height);

}  // namespace riley
