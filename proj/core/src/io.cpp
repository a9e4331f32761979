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

#include "riley/io.hpp"

#include <fstream>

#include <fmt/format.h>

#include "riley/error.hpp"

namespace riley {
namespace {

std::string complex_json(Complex z) {
  return fmt::format("[{},{}]", format_real(z.real()), format_real(z.imag()));
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string format_real(double x) { return fmt::format("{:.17g}", x); }

void write_ray_csv(std::ostream& out, const RayTrace& ray) {
  out << "slope,t,re,im\n";
  const std::string slope = ray.slope.to_string();
  for (const RaySample& s : ray.samples)
    out << slope << ',' << format_real(s.t) << ',' << format_real(s.rho.real()) << ','
        << format_real(s.rho.imag()) << '\n';
}

void write_cusp_points_csv(std::ostream& out, const std::vector<CuspPoint>& cusps) {
  out << "slope,re,im,residual\n";
  for (const CuspPoint& c : cusps)
    out << c.slope.to_string() << ',' << format_real(c.rho.real()) << ','
        << format_real(c.rho.imag()) << ',' << format_real(c.residual) << '\n';
}

void write_cusp_cloud_csv(std::ostream& out, const CuspCloud& cloud) {
  out << "p,q,re,im,residual\n";
  for (const CuspPoint& c : cloud.points)
    out << c.slope.p() << ',' << c.slope.q() << ',' << format_real(c.rho.real()) << ','
        << format_real(c.rho.imag()) << ',' << format_real(c.residual) << '\n';
}

void write_cloud_csv(std::ostream& out, const LimitSetCloud& cloud) {
  out << "re,im\n";
  for (Complex z : cloud.points) out << format_real(z.real()) << ',' << format_real(z.imag()) << '\n';
}

std::string orders_json(const ConeOrders& orders) {
  auto one = [](int n) { return n == ConeOrders::kInfinity ? std::string("\"inf\"") : std::to_string(n); };
  return fmt::format("[{},{}]", one(orders.a()), one(orders.b()));
}

std::string polynomial_json(const TracePolynomial& p) {
  std::string coeffs;
  if (p.is_exact()) {
    for (const mpz_class& c : p.exact_coefficients()) {
      if (!coeffs.empty()) coeffs += ',';
      coeffs += c.get_str();
    }
  } else {
    for (Complex c : p.coefficients()) {
      if (!coeffs.empty()) coeffs += ',';
      coeffs += complex_json(c);
    }
  }
  return fmt::format("{{\"slope\":{},\"orders\":{},\"coefficients\":[{}]}}",
                     quoted(p.slope().to_string()), orders_json(p.orders()), coeffs);
}

std::string verdict_json(const SlicePoint& pt, const Verdict& v) {
  std::string witness;
  switch (v.kind) {
    case VerdictKind::InteriorCertified:
      witness = fmt::format("\"slope\":{},\"trace\":{}", quoted(v.slope.to_string()),
                            complex_json(v.trace));
      break;
    case VerdictKind::OnRay:
      witness = fmt::format("\"slope\":{},\"t\":{}", quoted(v.slope.to_string()), format_real(v.t));
      break;
    case VerdictKind::CuspNear:
      witness = fmt::format("\"slope\":{},\"cusp\":{},\"distance\":{}", quoted(v.slope.to_string()),
                            complex_json(v.cusp), format_real(v.distance));
      break;
    case VerdictKind::ExteriorRelator:
      witness = fmt::format("\"slope\":{},\"trace\":{}", quoted(v.slope.to_string()),
                            complex_json(v.trace));
      break;
    case VerdictKind::NondiscreteEvidence:
      witness = fmt::format("\"words\":[{},{}],\"jorgensen\":{}", quoted(v.word_a.to_string()),
                            quoted(v.word_b.to_string()), format_real(v.jorgensen));
      break;
    case VerdictKind::OutsideNecessaryBound:
      witness = fmt::format("\"bound\":{}", quoted(v.bound_name));
      break;
    case VerdictKind::Unknown:
      break;
  }
  return fmt::format("{{\"rho\":{},\"orders\":{},\"verdict\":{},\"witness\":{{{}}}}}",
                     complex_json(pt.rho), orders_json(pt.orders), quoted(to_string(v.kind)),
                     witness);
}

void write_output(const std::string& path, const std::function<void(std::ostream&)>& write) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  write(out);
  if (!out) throw Error("failed writing " + path);
}

}  // namespace riley
