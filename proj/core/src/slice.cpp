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

#include "riley/slice.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "riley/error.hpp"
#include "riley/parallel.hpp"

namespace riley {
namespace {

constexpr std::int64_t kMaxRayDenominator = 12;
constexpr double kDuplicateTolerance = 1e-8;

bool on_real_axis(Complex w) { return std::abs(w.imag()) <= 1e-12 * (1.0 + std::abs(w)); }

std::shared_ptr<const RayData> try_ray(const Slope& s, const ConeOrders& orders) {
  try {
    return default_ray_cache().get(s, orders);
  } catch (const NumericError&) {
    return nullptr;
  }
}

// Cusp of s and its mirror images as they appear in the cloud.
std::vector<Complex> cusp_images(Complex c, const ConeOrders& orders) {
  std::vector<Complex> out{c, std::conj(c)};
  if (orders.symmetric()) {
    out.push_back(-std::conj(c));
    out.push_back(-c);
  }
  return out;
}

std::optional<Verdict> neighborhood_verdict(const SlicePoint& pt,
                                            const std::vector<Slope>& slopes) {
  for (const Slope& s : slopes) {
    if (!try_ray(s, pt.orders)) continue;
    NeighborhoodResult r = neighborhood_test(pt.rho, s, pt.orders);
    if (!r.inside) continue;
    Verdict v;
    v.slope = s;
    v.trace = r.trace;
    if (on_real_axis(r.trace)) {
      v.kind = VerdictKind::OnRay;
      v.t = r.trace.real();
    } else {
      v.kind = VerdictKind::InteriorCertified;
    }
    return v;
  }
  return std::nullopt;
}

std::optional<Verdict> cusp_verdict(const SlicePoint& pt, const std::vector<Slope>& slopes,
                                    double tol) {
  std::optional<Verdict> best;
  for (const Slope& s : slopes) {
    auto ray = try_ray(s, pt.orders);
    if (!ray) continue;
    for (Complex c : cusp_images(ray->cusp.rho, pt.orders)) {
      double d = std::abs(pt.rho - c);
      if (d <= tol && (!best || d < best->distance)) {
        best = Verdict{};
        best->kind = VerdictKind::CuspNear;
        best->slope = s;
        best->distance = d;
        best->cusp = c;
      }
    }
  }
  return best;
}

// Words that are the identity come first, then accidental parabolics
// (trace +-2), then elliptic points on extended rays.
std::optional<Verdict> relator_verdict(const SlicePoint& pt, const std::vector<Slope>& slopes,
                                       double tol) {
  std::vector<Complex> traces;
  traces.reserve(slopes.size());
  for (const Slope& s : slopes) traces.push_back(word_trace_function(s, pt.orders)(pt.rho).value);
  auto verdict = [&](std::size_t i) {
    Verdict v;
    v.kind = VerdictKind::ExteriorRelator;
    v.slope = slopes[i];
    v.trace = traces[i];
    return v;
  };
  auto near_two = [&](Complex w) { return std::abs(w - 2.0) <= tol || std::abs(w + 2.0) <= tol; };

  for (std::size_t i = 0; i < slopes.size(); ++i) {
    if (near_two(traces[i]) &&
        word_matrix(farey_word(slopes[i]), pt.rho, pt.orders).is_identity(std::max(tol, 1e-12)))
      return verdict(i);
  }
  for (std::size_t i = 0; i < slopes.size(); ++i)
    if (near_two(traces[i])) return verdict(i);
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    Complex w = traces[i];
    if (std::abs(w.imag()) > tol || w.real() <= -2.0 || w.real() >= 2.0) continue;
    if (try_ray(slopes[i], pt.orders) && on_extended_ray(pt.rho, slopes[i], pt.orders, tol))
      return verdict(i);
  }
  return std::nullopt;
}

bool share_fixed_point(const std::vector<SpherePoint>& a, const std::vector<SpherePoint>& b) {
  for (const SpherePoint& u : a)
    for (const SpherePoint& v : b)
      if (chordal_distance(u, v) < 1e-6) return true;
  return false;
}

std::optional<Verdict> jorgensen_verdict(const SlicePoint& pt, int depth) {
  struct Entry {
    GroupWord word;
    MoebiusMap matrix;
    std::optional<std::vector<SpherePoint>> fixed;
  };
  std::vector<Entry> entries;
  try {
    for_each_reduced(pt.orders, depth, [&](const GroupWord& w) {
      MoebiusMap m = w.evaluate(pt.rho, pt.orders);
      if (!m.is_identity(1e-9)) entries.push_back({w, m, std::nullopt});
    });
  } catch (const NumericRangeError&) {
    return std::nullopt;
  }

  auto fixed = [](Entry& e) -> const std::vector<SpherePoint>& {
    if (!e.fixed) e.fixed = fixed_points(e.matrix);
    return *e.fixed;
  };

  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      double ab = jorgensen_value(entries[i].matrix, entries[j].matrix);
      double ba = jorgensen_value(entries[j].matrix, entries[i].matrix);
      double value = std::min(ab, ba);
      if (!(value < 1.0)) continue;
      if (share_fixed_point(fixed(entries[i]), fixed(entries[j]))) continue;
      Verdict v;
      v.kind = VerdictKind::NondiscreteEvidence;
      v.word_a = ab <= ba ? entries[i].word : entries[j].word;
      v.word_b = ab <= ba ? entries[j].word : entries[i].word;
      v.jorgensen = value;
      return v;
    }
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::InteriorCertified: return "InteriorCertified";
    case VerdictKind::OnRay: return "OnRay";
    case VerdictKind::CuspNear: return "CuspNear";
    case VerdictKind::ExteriorRelator: return "ExteriorRelator";
    case VerdictKind::NondiscreteEvidence: return "NondiscreteEvidence";
    case VerdictKind::OutsideNecessaryBound: return "OutsideNecessaryBound";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "Unknown";
}

Verdict classify_point(const SlicePoint& pt, const ClassifyOptions& options) {
  if (options.max_denominator < 1 || options.word_depth < 1)
    throw ValidationError("classification budgets must be >= 1");
  if (!(options.tol >= 0.0)) throw ValidationError("tolerance must be >= 0");
  if (!std::isfinite(pt.rho.real()) || !std::isfinite(pt.rho.imag()))
    throw ValidationError("rho must be finite");

  if (pt.orders.is_parabolic() && std::abs(pt.rho) < 1.0) {
    Verdict v;
    v.kind = VerdictKind::OutsideNecessaryBound;
    v.bound_name = "shimizu-leutbecher";
    return v;
  }

  const std::vector<Slope> slopes = stern_brocot_order(options.max_denominator);
  if (auto v = neighborhood_verdict(pt, slopes)) return *v;
  if (auto v = cusp_verdict(pt, slopes, options.tol)) return *v;
  if (auto v = relator_verdict(pt, slopes, options.tol)) return *v;
  if (auto v = jorgensen_verdict(pt, options.word_depth)) return *v;
  return Verdict{};
}

CuspCloud cusp_cloud(std::int64_t max_denominator, const ConeOrders& orders, int threads) {
  if (max_denominator < 1) throw ValidationError("cusp cloud needs Q >= 1");
  const std::vector<Slope> slopes = farey_sequence(max_denominator);

  struct Slot {
    std::optional<CuspPoint> cusp;
    std::string error;
  };
  std::vector<Slot> slots(slopes.size());
  parallel_for(slopes.size(), threads, [&](std::size_t i) {
    try {
      slots[i].cusp = cusp_point(slopes[i], orders);
    } catch (const NumericError& e) {
      slots[i].error = e.what();
    }
  });

  CuspCloud cloud{orders, {}, {}};
  // Candidates: each cusp with its conjugate, plus negated mirrors labelled
  // by the reflected slope. Direct results come first so they win dedup.
  struct Candidate {
    CuspPoint point;
    bool upper;
    bool mirror;
  };
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i].cusp) {
      cloud.failures.push_back({slopes[i], slots[i].error});
      continue;
    }
    const CuspPoint& c = *slots[i].cusp;
    candidates.push_back({c, true, false});
    candidates.push_back({{c.slope, orders, std::conj(c.rho), c.residual}, false, false});
    if (orders.symmetric()) {
      Slope r = c.slope.reflected();
      candidates.push_back({{r, orders, -std::conj(c.rho), c.residual}, true, true});
      candidates.push_back({{r, orders, -c.rho, c.residual}, false, true});
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& l, const Candidate& r) {
    if (l.point.slope != r.point.slope) return l.point.slope < r.point.slope;
    if (l.upper != r.upper) return l.upper;
    return !l.mirror && r.mirror;
  });
  for (const Candidate& cand : candidates) {
    bool duplicate = false;
    for (auto it = cloud.points.rbegin(); it != cloud.points.rend() && it->slope == cand.point.slope;
         ++it) {
      if (std::abs(it->rho - cand.point.rho) <= kDuplicateTolerance) duplicate = true;
    }
    if (!duplicate) cloud.points.push_back(cand.point);
  }
  return cloud;
}

SliceRender render_slice(const ConeOrders& orders, std::int64_t max_denominator,
                         const Viewport& view, int width, int height, int threads) {
  view.validate();
  if (max_denominator < 0) throw ValidationError("Q must be >= 0");
  SliceRender out{Raster(width, height, palette::kBackground), {}, false, 0};
  Raster& raster = out.raster;

  if (orders.is_degenerate()) {
    out.degenerate = true;
    raster = Raster(width, height, palette::kWarning);
    std::vector<Complex> d1{Complex(view.x_min, view.y_max), Complex(view.x_max, view.y_min)};
    std::vector<Complex> d2{Complex(view.x_min, view.y_min), Complex(view.x_max, view.y_max)};
    draw_polyline(raster, view, d1, palette::kUnitCircle);
    draw_polyline(raster, view, d2, palette::kUnitCircle);
    return out;
  }

  if (orders.is_parabolic()) {
    BoundCurves curves = bound_curves();
    for (const auto& ring : curves.cjr_circles) draw_polyline(raster, view, ring, palette::kCjrCircle);
    draw_polyline(raster, view, curves.lu_hull, palette::kHull);
    draw_polyline(raster, view, curves.unit_circle, palette::kUnitCircle);
  }
  if (max_denominator == 0) return out;

  std::vector<Slope> ray_slopes = farey_sequence(std::min(max_denominator, kMaxRayDenominator));
  std::vector<std::optional<RayTrace>> rays(ray_slopes.size());
  parallel_for(ray_slopes.size(), threads, [&](std::size_t i) {
    try {
      rays[i] = trace_ray(ray_slopes[i], orders);
    } catch (const NumericError&) {
      // The same slope fails again in the cusp cloud, which records it.
    }
  });
  for (const auto& ray : rays) {
    if (!ray) continue;
    std::vector<Complex> pts;
    for (const RaySample& s : ray->samples) pts.push_back(s.rho);
    std::vector<std::vector<Complex>> images{pts, pts};
    for (Complex& z : images[1]) z = std::conj(z);
    if (orders.symmetric()) {
      images.push_back(pts);
      images.push_back(pts);
      for (Complex& z : images[2]) z = -std::conj(z);
      for (Complex& z : images[3]) z = -z;
    }
    for (const auto& line : images) draw_polyline(raster, view, line, palette::kRay);
  }

  CuspCloud cloud = cusp_cloud(max_denominator, orders, threads);
  out.failures = cloud.failures;
  out.cusp_count = cloud.points.size();
  for (const CuspPoint& c : cloud.points) draw_marker(raster, view, c.rho, 1, palette::kCusp);
  return out;
}

}  // namespace riley
