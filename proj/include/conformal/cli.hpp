#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "conformal/domain.hpp"
#include "conformal/error.hpp"
#include "conformal/geodesic.hpp"
#include "conformal/image.hpp"
#include "conformal/map.hpp"
#include "conformal/metrics.hpp"
#include "conformal/report_json.hpp"
#include "conformal/spec_parse.hpp"
#include "conformal/verify.hpp"

namespace conformal::cli {

enum ExitCode : int { ok = 0, bound_violated = 1, usage_error = 2 };

/// Fixed significant digits for text and CSV output.
inline std::string format_number(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

inline std::string csv_number(double v) { return format_number(v, 9); }

namespace detail {

/// Error raised while interpreting a flag's value; the message names the flag.
struct FlagError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename Fn>
auto for_flag(const std::string& flag, const std::string& value, Fn&& fn) {
  try {
    return fn(value);
  } catch (const Error& e) {
    throw FlagError(flag + ": " + e.what());
  }
}

inline SampleStrategy parse_strategy(const std::string& s) {
  if (s == "uniform_disk") return SampleStrategy::uniform_disk;
  if (s == "radial_line" || s == "radial") return SampleStrategy::radial_line;
  if (s == "near_boundary") return SampleStrategy::near_boundary;
  if (s == "near_puncture") return SampleStrategy::near_puncture;
  throw Error(Errc::invalid_parameter, "unknown strategy '" + s + "'");
}

struct Sink {
  std::string format = "text";
  std::string path;

  void emit(std::ostream& out, const std::string& payload) const {
    if (path.empty()) {
      out << payload;
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw FlagError("--out: cannot open '" + path + "'");
    file << payload;
  }
};

inline std::string scalar_payload(const Sink& sink, const std::string& name, double value) {
  if (sink.format == "json") {
    ordered_json j;
    j[name] = number(value);
    return j.dump() + "\n";
  }
  if (sink.format == "csv") return name + "\n" + csv_number(value) + "\n";
  return format_number(value, 10) + "\n";
}

}  // namespace detail

/// Runs one CLI invocation (arguments without the program name). Exit codes:
/// 0 success, 1 bound violations from verify, 2 usage or input errors.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hyperbolic and quasihyperbolic metrics of plane domains", "conformal-metrics"};
  app.require_subcommand(1);

  detail::Sink sink;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", sink.format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", sink.path, "write the result to this file");
  };

  std::string domain_spec = "disk";
  std::string map_spec;
  std::string at_spec;

  auto* density = app.add_subcommand("density", "hyperbolic density at a point");
  density->add_option("--domain", domain_spec)->required();
  density->add_option("--at", at_spec, "point re,im (preimage for image domains)")->required();
  add_output(density);

  auto* delta = app.add_subcommand("delta", "distance to the boundary");
  delta->add_option("--domain", domain_spec)->required();
  delta->add_option("--at", at_spec, "point re,im (preimage for image domains)")->required();
  add_output(delta);

  int boundary_samples = 4096;
  auto* ratio = app.add_subcommand("ratio", "|f'(z)| / dist(f(z), boundary of f(D))");
  ratio->add_option("--map", map_spec)->required();
  ratio->add_option("--domain", domain_spec)->required();
  ratio->add_option("--at", at_spec)->required();
  ratio->add_option("--boundary-samples", boundary_samples)->check(CLI::Range(64, 1 << 24));
  add_output(ratio);

  std::string metric = "qhyp";
  std::string from_spec;
  std::string to_spec;
  std::string geodesic_out;
  SolverConfig solver;
  auto* distance = app.add_subcommand("distance", "hyperbolic or quasihyperbolic distance");
  distance->add_option("--domain", domain_spec)->required();
  distance->add_option("--metric", metric)->check(CLI::IsMember({"hyp", "qhyp"}));
  distance->add_option("--from", from_spec)->required();
  distance->add_option("--to", to_spec)->required();
  distance->add_option("--geodesic-out", geodesic_out, "CSV of the geodesic (x,y)");
  distance->add_option("--grid", solver.grid_resolution)->check(CLI::PositiveNumber);
  distance->add_option("--relax-iterations", solver.relax_iterations)->check(CLI::NonNegativeNumber);
  distance->add_option("--relax-step", solver.relax_step)->check(CLI::PositiveNumber);
  distance->add_option("--path-nodes", solver.path_nodes)->check(CLI::PositiveNumber);
  distance->add_option("--panels", solver.quad_panels_per_segment)->check(CLI::PositiveNumber);
  distance->add_option("--tolerance", solver.tolerance)->check(CLI::PositiveNumber);
  add_output(distance);

  std::string kind_spec;
  SampleSet samples;
  std::string strategy = "uniform_disk";
  BoundOverrides overrides;
  auto* verify = app.add_subcommand("verify", "check a bound over a sample set");
  verify->add_option("--kind", kind_spec)->required();
  verify->add_option("--map", map_spec);
  verify->add_option("--domain", domain_spec);
  verify->add_option("--samples", samples.count)->check(CLI::PositiveNumber);
  verify->add_option("--seed", samples.seed);
  verify->add_option("--strategy", strategy);
  verify->add_option("--epsilon", samples.epsilon);
  verify->add_option("--radius", samples.radius);
  verify->add_option("--lower", overrides.lower, "override the lower constant");
  verify->add_option("--upper", overrides.upper, "override the upper constant");
  verify->add_option("--Q", overrides.uniformity, "uniformity constant for thm41");
  verify->add_option("--rtol", overrides.rtol);
  verify->add_option("--boundary-samples", overrides.boundary_samples)->check(CLI::Range(64, 1 << 24));
  add_output(verify);

  std::string quantity;
  std::string path_kind = "radial";
  int steps = 50;
  auto* sweep = app.add_subcommand("sweep", "tabulate a quantity along a segment");
  sweep->add_option("--quantity", quantity)->required()->check(CLI::IsMember({"ratio", "pdisk-ratio", "T", "S"}));
  sweep->add_option("--map", map_spec);
  sweep->add_option("--domain", domain_spec);
  sweep->add_option("--path", path_kind)->check(CLI::IsMember({"radial", "line"}));
  sweep->add_option("--from", from_spec)->required();
  sweep->add_option("--to", to_spec)->required();
  sweep->add_option("--steps", steps)->check(CLI::Range(2, 1 << 24));
  sweep->add_option("--boundary-samples", boundary_samples)->check(CLI::Range(64, 1 << 24));
  add_output(sweep);

  auto* uniformity = app.add_subcommand("uniformity", "empirical uniformity constant");
  uniformity->add_option("--domain", domain_spec)->required();
  uniformity->add_option("--samples", samples.count)->check(CLI::PositiveNumber);
  uniformity->add_option("--seed", samples.seed);
  uniformity->add_option("--strategy", strategy);
  uniformity->add_option("--epsilon", samples.epsilon);
  add_output(uniformity);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }

  try {
    const Domain domain = detail::for_flag("--domain", domain_spec, [](const std::string& s) { return parse_domain(s); });
    auto parse_map_flag = [&]() -> std::optional<AnalyticMap> {
      if (map_spec.empty()) return std::nullopt;
      return detail::for_flag("--map", map_spec, [](const std::string& s) { return parse_map(s); });
    };
    auto point = [](const std::string& flag, const std::string& s) {
      return detail::for_flag(flag, s, [](const std::string& v) { return parse_point(v); });
    };
    auto require_map = [&](const std::string& why) {
      auto m = parse_map_flag();
      if (!m) throw detail::FlagError("--map: required for " + why);
      return *m;
    };

    if (density->parsed() || delta->parsed()) {
      const complex z = point("--at", at_spec);
      const bool image = domain.kind() == DomainKind::image;
      double v;
      if (density->parsed()) {
        v = image ? image_density_at_preimage(domain, z) : hyperbolic_density(domain, z);
      } else {
        v = image ? image_delta_at_preimage(domain, z) : boundary_distance(domain, z);
      }
      sink.emit(out, detail::scalar_payload(sink, density->parsed() ? "density" : "delta", v));
      return ok;
    }

    if (ratio->parsed()) {
      const AnalyticMap f = require_map("ratio");
      const complex z = point("--at", at_spec);
      sink.emit(out, detail::scalar_payload(sink, "ratio", distortion_ratio(f, domain, z, boundary_samples)));
      return ok;
    }

    if (distance->parsed()) {
      const complex a = point("--from", from_spec);
      const complex b = point("--to", to_spec);
      double value = 0.0;
      std::optional<Geodesic> geodesic;
      if (metric == "hyp") {
        if (domain.kind() == DomainKind::image) {
          value = hyperbolic_distance_via_map(*domain.image_map(), a, b);
        } else {
          value = hyperbolic_distance(domain, a, b);
        }
      } else {
        geodesic = quasihyperbolic_distance(domain, a, b, solver);
        value = geodesic->distance;
      }
      if (!geodesic_out.empty()) {
        if (!geodesic) throw detail::FlagError("--geodesic-out: only available for --metric qhyp");
        std::ofstream file(geodesic_out, std::ios::binary);
        if (!file) throw detail::FlagError("--geodesic-out: cannot open '" + geodesic_out + "'");
        file << "x,y\n";
        for (complex p : geodesic->points) file << csv_number(p.real()) << "," << csv_number(p.imag()) << "\n";
      }
      if (sink.format == "json") {
        ordered_json j;
        j["metric"] = metric;
        j["domain"] = domain.name();
        j["from"] = to_json(a);
        j["to"] = to_json(b);
        j["distance"] = number(value);
        if (geodesic) {
          j["grid_distance"] = number(geodesic->grid_distance);
          j["nodes"] = geodesic->points.size();
          j["sweeps"] = geodesic->history.size() - 1;
        }
        sink.emit(out, j.dump() + "\n");
      } else {
        sink.emit(out, detail::scalar_payload(sink, "distance", value));
      }
      return ok;
    }

    if (verify->parsed()) {
      const auto kind = parse_kind(kind_spec);
      if (!kind) throw detail::FlagError("--kind: unknown bound '" + kind_spec + "'");
      samples.strategy = detail::for_flag("--strategy", strategy, detail::parse_strategy);
      const auto f = parse_map_flag();
      if (f && !verify->count("--domain")) domain_spec = f->base_domain().name();
      const Domain d = f && !verify->count("--domain") ? f->base_domain() : domain;
      BoundReport report;
      try {
        report = check_pointwise_bounds(f ? &*f : nullptr, d, samples, *kind, overrides);
      } catch (const Error& e) {
        throw detail::FlagError("--kind: " + std::string(e.what()));
      }
      sink.emit(out, to_json(report).dump(2) + "\n");
      return report.holds() ? ok : bound_violated;
    }

    if (sweep->parsed()) {
      const complex a = point("--from", from_spec);
      const complex b = point("--to", to_spec);
      std::optional<AnalyticMap> f;
      if (quantity != "pdisk-ratio") f = require_map(quantity + " sweeps");
      ordered_json rows = ordered_json::array();
      std::ostringstream csv;
      csv << "param,value,bound\n";
      for (int k = 0; k < steps; ++k) {
        const complex z = a + (b - a) * (static_cast<double>(k) / (steps - 1));
        double value = std::numeric_limits<double>::quiet_NaN();
        double bound = std::numeric_limits<double>::quiet_NaN();
        try {
          if (quantity == "pdisk-ratio") {
            value = punctured_disk_ratio(z);
            bound = 4.0;
          } else {
            const bool simple = domain.simply_connected();
            const double lambda = hyperbolic_density(domain, z);
            const double inv_delta = 1.0 / boundary_distance(domain, z);
            if (quantity == "ratio") {
              value = distortion_ratio(*f, domain, z, boundary_samples);
              bound = simple ? 4.0 * lambda : 4.0 * inv_delta;
            } else if (quantity == "T") {
              value = std::abs(pre_schwarzian(f->eval_jet(z)));
              bound = simple ? 8.0 * lambda : 4.0 * inv_delta;
            } else {
              value = std::abs(schwarzian(f->eval_jet(z)));
              bound = simple ? 12.0 * lambda * lambda : 6.0 * inv_delta * inv_delta;
            }
          }
        } catch (const Error& e) {
          if (e.code() == Errc::invalid_parameter || e.code() == Errc::kind_domain_mismatch) throw;
        }
        csv << csv_number(std::abs(z)) << "," << csv_number(value) << "," << csv_number(bound) << "\n";
        rows.push_back({{"param", number(std::abs(z))}, {"value", number(value)}, {"bound", number(bound)}});
      }
      sink.emit(out, sink.format == "json" ? rows.dump(2) + "\n" : csv.str());
      return ok;
    }

    if (uniformity->parsed()) {
      samples.strategy = detail::for_flag("--strategy", strategy, detail::parse_strategy);
      sink.emit(out, detail::scalar_payload(sink, "Q", estimate_uniformity_constant(domain, samples)));
      return ok;
    }
  } catch (const detail::FlagError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }
  return usage_error;
}

}  // namespace conformal::cli
