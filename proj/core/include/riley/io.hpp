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

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "riley/pleating.hpp"
#include "riley/slice.hpp"
#include "riley/traces.hpp"

namespace riley {

/// Round-trip formatting with 17 significant digits.
std::string format_real(double x);

/// `slope,t,re,im`
void write_ray_csv(std::ostream& out, const RayTrace& ray);
/// `slope,re,im,residual`
void write_cusp_points_csv(std::ostream& out, const std::vector<CuspPoint>& cusps);
/// `p,q,re,im,residual`
void write_cusp_cloud_csv(std::ostream& out, const CuspCloud& cloud);
/// `re,im`
void write_cloud_csv(std::ostream& out, const LimitSetCloud& cloud);

/// Orders as a JSON array, e.g. ["inf","inf"] or [2,3].
std::string orders_json(const ConeOrders& orders);

/// {"slope":"p/q","orders":[..],"coefficients":[..]} in ascending degree.
/// Exact polynomials list integers; the others list [re,im] pairs.
std::string polynomial_json(const TracePolynomial& p);

/// {"rho":[re,im],"orders":[..],"verdict":"..","witness":{..}}
std::string verdict_json(const SlicePoint& pt, const Verdict& v);

/// Opens `path` for writing and calls `write`; throws Error on I/O failure.
void write_output(const std::string& path, const std::function<void(std::ostream&)>& write);

}  // namespace riley
