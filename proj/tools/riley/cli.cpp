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

#include "riley/cli.hpp"

#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "riley/error.hpp"
#include "riley/io.hpp"
#include "riley/limitset.hpp"
#include "riley/parallel.hpp"
#include "riley/slice.hpp"
#include "riley/traces.hpp"

namespace riley::cli {
namespace {

Complex parse_complex(const std::string& text) {
  std::istringstream in(text);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(in >> re >> comma >> im) || comma != ',' || !(in >> std::ws).eof())
    throw ValidationError("expected RE,IM but got '" + text + "'");
  return {re, im};
}

std::pair<int, int> parse_size(const std::string& text) {
  std::istringstream in(text);
  int w = 0, h = 0;
  char x = 0;
  if (!(in >> w >> x >> h) || (x != 'x' && x != 'X') || !(in >> std::ws).eof())
    throw ValidationError("expected WIDTHxHEIGHT but got '" + text + "'");
  return {w, h};
}

double parse_real(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw ValidationError("not a number: '" + text + "'");
  return value;
}

void report_failures(std::ostream& err, const std::vector<SlopeFailure>& failures) {
  for (const SlopeFailure& f : failures)
    err << "warning: slope " << f.slope.to_string() << " failed: " << f.message << '\n';
}

struct Config {
  std::string orders = "inf,inf";
  std::string out = "-";

  // word / poly / ray
  std::string slope;
  std::string method = "direct";
  int samples = 64;
  double t_start = kDefaultRayStart;

  // cusps / classify / render slice
  std::int64_t max_denominator = 20;
  int word_depth = 4;
  double tol = 1e-9;
  std::string re, im;

  // render
  std::string viewport = "-5,5,-5,5";
  std::string size = "800x800";
  std::string rho;
  int depth = 40;
  double epsilon = 1e-3;
  std::size_t cap = 5'000'000;
  std::string points_out;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Farey polynomials, pleating rays and limit sets of Riley slices", "riley"};
  app.require_subcommand(1);
  Config cfg;
  std::optional<int> threads_flag;
  app.add_option("--threads", threads_flag, "Worker threads (default: RILEY_THREADS or all cores)")
      ->check(CLI::PositiveNumber);

  auto add_orders = [&](CLI::App* cmd) {
    cmd->add_option("--orders", cfg.orders, "Cone orders a,b (integers >= 2 or inf)")
        ->capture_default_str();
  };

  CLI::App* word = app.add_subcommand("word", "Print the Farey word of a slope");
  word->add_option("slope", cfg.slope, "Slope p/q")->required();
  add_orders(word);

  CLI::App* poly = app.add_subcommand("poly", "Print a Farey polynomial as JSON");
  poly->add_option("slope", cfg.slope, "Slope p/q")->required();
  add_orders(poly);
  poly->add_option("--method", cfg.method, "direct or recursive")
      ->check(CLI::IsMember({"direct", "recursive"}))
      ->capture_default_str();

  CLI::App* cusps = app.add_subcommand("cusps", "Cusp cloud for all slopes with q <= Q (CSV)");
  cusps->add_option("--max-denominator,-Q", cfg.max_denominator, "Largest denominator Q")
      ->required()
      ->check(CLI::PositiveNumber);
  add_orders(cusps);
  cusps->add_option("--out,-o", cfg.out, "Output file ('-' for stdout)")->capture_default_str();

  CLI::App* ray = app.add_subcommand("ray", "Trace a rational pleating ray (CSV)");
  ray->add_option("slope", cfg.slope, "Slope p/q")->required();
  add_orders(ray);
  ray->add_option("--samples", cfg.samples, "Number of samples")->capture_default_str();
  ray->add_option("--t-start", cfg.t_start, "Trace value of the first sample")
      ->capture_default_str();
  ray->add_option("--out,-o", cfg.out, "Output file ('-' for stdout)")->capture_default_str();

  CLI::App* classify = app.add_subcommand("classify", "Classify a slice point (JSON)");
  classify->add_option("re", cfg.re, "Real part of rho")->required();
  classify->add_option("im", cfg.im, "Imaginary part of rho")->required();
  add_orders(classify);
  classify->add_option("--max-denominator,-Q", cfg.max_denominator, "Slope budget")
      ->capture_default_str();
  classify->add_option("--word-depth", cfg.word_depth, "Word length budget")
      ->capture_default_str();
  classify->add_option("--tol", cfg.tol, "Tolerance for relator and cusp tests")
      ->capture_default_str();

  CLI::App* render = app.add_subcommand("render", "Render images (PPM)");
  render->require_subcommand(1);

  CLI::App* slice = render->add_subcommand("slice", "Cusps, rays and bound curves");
  add_orders(slice);
  slice->add_option("--max-denominator,-Q", cfg.max_denominator, "Largest denominator Q")
      ->capture_default_str();
  slice->add_option("--viewport", cfg.viewport, "xmin,xmax,ymin,ymax")->capture_default_str();
  slice->add_option("--size", cfg.size, "WIDTHxHEIGHT")->capture_default_str();
  slice->add_option("--out,-o", cfg.out, "Output PPM file")->required();

  CLI::App* limit = render->add_subcommand("limitset", "Limit set of the group at rho");
  limit->add_option("--rho", cfg.rho, "RE,IM")->required();
  add_orders(limit);
  limit->add_option("--depth", cfg.depth, "Word depth")->capture_default_str();
  limit->add_option("--epsilon", cfg.epsilon, "Chordal pruning diameter")->capture_default_str();
  limit->add_option("--cap", cfg.cap, "Maximum number of points")->capture_default_str();
  limit->add_option("--viewport", cfg.viewport, "xmin,xmax,ymin,ymax")->capture_default_str();
  limit->add_option("--size", cfg.size, "WIDTHxHEIGHT")->capture_default_str();
  limit->add_option("--out,-o", cfg.out, "Output PPM file")->required();
  limit->add_option("--points", cfg.points_out, "Also write the point cloud as CSV");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitValidation;
  }

  auto emit = [&](const std::string& path, const std::function<void(std::ostream&)>& write) {
    if (path == "-")
      write(out);
    else
      write_output(path, write);
  };

  try {
    int threads = resolve_threads(threads_flag);

    if (*word) {
      ConeOrders::parse(cfg.orders);
      out << farey_word(parse_slope(cfg.slope)).to_string() << '\n';
    } else if (*poly) {
      ConeOrders orders = ConeOrders::parse(cfg.orders);
      Slope s = parse_slope(cfg.slope);
      TracePolynomial p = cfg.method == "recursive" ? farey_polynomial_recursive(s, orders)
                                                    : farey_polynomial_direct(s, orders);
      out << polynomial_json(p) << '\n';
    } else if (*cusps) {
      ConeOrders orders = ConeOrders::parse(cfg.orders);
      CuspCloud cloud = cusp_cloud(cfg.max_denominator, orders, threads);
      emit(cfg.out, [&](std::ostream& os) { write_cusp_cloud_csv(os, cloud); });
      report_failures(err, cloud.failures);
    } else if (*ray) {
      ConeOrders orders = ConeOrders::parse(cfg.orders);
      RayTrace trace = trace_ray(parse_slope(cfg.slope), orders, cfg.t_start, cfg.samples);
      emit(cfg.out, [&](std::ostream& os) { write_ray_csv(os, trace); });
    } else if (*classify) {
      SlicePoint pt{{parse_real(cfg.re), parse_real(cfg.im)}, ConeOrders::parse(cfg.orders)};
      Verdict v = classify_point(pt, {cfg.max_denominator, cfg.word_depth, cfg.tol});
      out << verdict_json(pt, v) << '\n';
    } else if (*slice) {
      ConeOrders orders = ConeOrders::parse(cfg.orders, true);
      auto [w, h] = parse_size(cfg.size);
      if (cfg.max_denominator < 0) throw ValidationError("Q must be >= 0");
      SliceRender r =
          render_slice(orders, cfg.max_denominator, Viewport::parse(cfg.viewport), w, h, threads);
      if (r.degenerate)
        err << "warning: the (2,2) slice is an interval; wrote a warning raster\n";
      report_failures(err, r.failures);
      save_ppm(cfg.out, r.raster);
    } else if (*limit) {
      ConeOrders orders = ConeOrders::parse(cfg.orders);
      auto [w, h] = parse_size(cfg.size);
      Viewport view = Viewport::parse(cfg.viewport);
      LimitSetOptions options{cfg.depth, cfg.epsilon, cfg.cap, threads};
      LimitSetCloud cloud = limit_set({parse_complex(cfg.rho), orders}, options);
      if (cloud.truncated)
        err << "warning: point cap " << cfg.cap << " reached; cloud truncated\n";
      save_ppm(cfg.out, rasterize(cloud, view, w, h));
      if (!cfg.points_out.empty())
        emit(cfg.points_out, [&](std::ostream& os) { write_cloud_csv(os, cloud); });
    }
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const InternalConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace riley::cli
