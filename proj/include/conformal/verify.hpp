#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conformal/domain.hpp"
#include "conformal/error.hpp"
#include "conformal/geodesic.hpp"
#include "conformal/image.hpp"
#include "conformal/jet.hpp"
#include "conformal/map.hpp"
#include "conformal/metrics.hpp"
#include "conformal/parallel.hpp"
#include "conformal/random.hpp"

namespace conformal {

// ---------------------------------------------------------------------------
// Sample sets
// ---------------------------------------------------------------------------

enum class SampleStrategy { uniform_disk, radial_line, near_boundary, near_puncture };

/// Seeded description of where a check evaluates. Points are generated in the
/// unit disk and carried into the target domain by transport_from_disk.
///
/// uniform_disk: area-uniform in |z| < radius.
/// radial_line: x_k = (1 - epsilon) k / (count - 1) on [0, 1).
/// near_boundary: 1 - |z| log-spaced over [epsilon, 1/2], random angles.
/// near_puncture: |z| log-spaced over [epsilon, 1/2], random angles.
struct SampleSet {
  std::uint64_t seed = 1;
  int count = 1000;
  SampleStrategy strategy = SampleStrategy::uniform_disk;
  double epsilon = 1e-2;
  double radius = 1.0;

  void validate() const {
    if (count < 1) throw Error(Errc::invalid_parameter, "sample count must be >= 1");
    if (!(epsilon > 0.0 && epsilon < 0.5)) throw Error(Errc::invalid_parameter, "epsilon must lie in (0, 1/2)");
    if (!(radius > 0.0 && radius <= 1.0)) throw Error(Errc::invalid_parameter, "radius must lie in (0, 1]");
  }
};

inline std::vector<complex> disk_points(const SampleSet& set) {
  set.validate();
  Rng rng(set.seed);
  std::vector<complex> out;
  out.reserve(static_cast<std::size_t>(set.count));
  auto log_spaced = [&](int k) {
    if (set.count == 1) return set.epsilon;
    const double u = static_cast<double>(k) / (set.count - 1);
    return set.epsilon * std::pow(0.5 / set.epsilon, u);
  };
  for (int k = 0; k < set.count; ++k) {
    switch (set.strategy) {
      case SampleStrategy::uniform_disk: out.push_back(rng.in_disk(set.radius)); break;
      case SampleStrategy::radial_line:
        out.emplace_back(set.count == 1 ? 0.0 : (1.0 - set.epsilon) * k / (set.count - 1), 0.0);
        break;
      case SampleStrategy::near_boundary:
        out.push_back(std::polar(1.0 - log_spaced(k), 2.0 * elementary::pi * rng.uniform()));
        break;
      case SampleStrategy::near_puncture:
        out.push_back(std::polar(log_spaced(k), 2.0 * elementary::pi * rng.uniform()));
        break;
    }
  }
  return out;
}

inline std::vector<complex> sample_points(const Domain& d, const SampleSet& set) {
  std::vector<complex> out = disk_points(set);
  for (complex& z : out) z = detail::transport_from_disk(d, z);
  return out;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct Violation {
  complex z;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct Skip {
  std::size_t index = 0;
  complex z;
  std::string reason;
};

using NamedValues = std::vector<std::pair<std::string, double>>;

/// Outcome of a bound check. min/max_ratio is the bounded quantity divided by
/// its density scale (e.g. ratio / lambda for thm21), so the window is the
/// bound's pair of constants.
struct BoundReport {
  std::string kind;
  NamedValues constants;
  std::size_t samples_checked = 0;
  double min_ratio = std::numeric_limits<double>::infinity();
  double max_ratio = -std::numeric_limits<double>::infinity();
  complex argmin;
  complex argmax;
  std::vector<Violation> violations;
  std::vector<Skip> skipped;
  std::string delta_route = "closed_form";
  NamedValues values;  // kind-specific extra outputs

  bool holds() const noexcept { return violations.empty(); }

  std::optional<double> constant(std::string_view name) const {
    for (const auto& [k, v] : constants) {
      if (k == name) return v;
    }
    return std::nullopt;
  }

  std::optional<double> value(std::string_view name) const {
    for (const auto& [k, v] : values) {
      if (k == name) return v;
    }
    return std::nullopt;
  }

  void observe(double q, complex z) {
    ++samples_checked;
    if (q < min_ratio) {
      min_ratio = q;
      argmin = z;
    }
    if (q > max_ratio) {
      max_ratio = q;
      argmax = z;
    }
  }
};

inline constexpr double closed_form_rtol = 1e-9;
inline constexpr double sampled_rtol = 2e-2;

// ---------------------------------------------------------------------------
// Pointwise quantities
// ---------------------------------------------------------------------------

/// |f'(z)| / delta_{f(D)}(f(z)).
inline double distortion_ratio(const AnalyticMap& f, const Domain& d, complex z, int boundary_samples = 4096) {
  const Jet3 j = f.eval_jet(z);
  if (!j.locally_univalent()) throw Error(Errc::singular_point, f.name());
  return std::abs(j.f1) / image_boundary_distance(f, d, z, boundary_samples);
}

/// lambda^{-1} |f'| / delta_{f(D)} for f(z) = 1/z on the punctured disk,
/// which equals 2 log(1/|z|) / (1 - |z|).
inline double punctured_disk_ratio(complex z) {
  const double r = std::abs(z);
  if (!(r > 0.0 && r < 1.0)) throw Error(Errc::outside_domain, "pdisk");
  const double gap = 1.0 - r;
  // log1p keeps accuracy near the circle; near the puncture 1 - r rounds to 1.
  const double log_r = r < 0.5 ? std::log(r) : std::log1p(-gap);
  return -2.0 * log_r / gap;
}

/// A point of the punctured disk where lambda < c / delta fails: the lower
/// comparison breaks once |z| < exp(-1/(2c)); the witness sits well past it.
inline complex punctured_disk_lower_bound_witness(double c) {
  if (!(c > 0.0)) throw Error(Errc::invalid_parameter, "c must be positive");
  return std::exp(-4.0 / c - 4.0);
}

// ---------------------------------------------------------------------------
// Pointwise bound checks
// ---------------------------------------------------------------------------

enum class BoundKind {
  distortion_hyperbolic,           // thm21
  distortion_quasihyperbolic,      // lemma31
  density_comparison,              // lambda_delta
  koebe_distortion,                // koebe_distortion
  pre_schwarzian_hyperbolic,       // osgood_T
  pre_schwarzian_quasihyperbolic,  // osgood_T_delta
  schwarzian_hyperbolic,           // lehto_S
  schwarzian_quasihyperbolic,      // gehring_S
  distortion_uniformly_perfect,    // thm41
  distortion_convex,               // cor43
};

constexpr std::string_view kind_id(BoundKind k) noexcept {
  switch (k) {
    case BoundKind::distortion_hyperbolic: return "thm21";
    case BoundKind::distortion_quasihyperbolic: return "lemma31";
    case BoundKind::density_comparison: return "lambda_delta";
    case BoundKind::koebe_distortion: return "koebe_distortion";
    case BoundKind::pre_schwarzian_hyperbolic: return "osgood_T";
    case BoundKind::pre_schwarzian_quasihyperbolic: return "osgood_T_delta";
    case BoundKind::schwarzian_hyperbolic: return "lehto_S";
    case BoundKind::schwarzian_quasihyperbolic: return "gehring_S";
    case BoundKind::distortion_uniformly_perfect: return "thm41";
    case BoundKind::distortion_convex: return "cor43";
  }
  return "unknown";
}

inline std::optional<BoundKind> parse_kind(std::string_view id) {
  for (int k = 0; k <= static_cast<int>(BoundKind::distortion_convex); ++k) {
    if (kind_id(static_cast<BoundKind>(k)) == id) return static_cast<BoundKind>(k);
  }
  return std::nullopt;
}

/// Replacements for a kind's constants; used to probe the exit-code contract
/// and to supply Q for thm41.
struct BoundOverrides {
  std::optional<double> lower;
  std::optional<double> upper;
  std::optional<double> uniformity;  // Q
  std::optional<double> rtol;
  int boundary_samples = 4096;
};

inline double estimate_uniformity_constant(const Domain& d, const SampleSet& samples);

namespace detail {

struct Window {
  double lower;
  double upper;
};

struct PointEval {
  double value = 0.0;  // bounded quantity
  double scale = 1.0;  // density factor; q = value / scale
  // cor43 also bounds |T_f| by 8 lambda.
  double extra_value = 0.0;
  double extra_bound = std::numeric_limits<double>::infinity();
};

inline bool needs_map(BoundKind k) { return k != BoundKind::density_comparison; }

inline bool uses_image_delta(BoundKind k) {
  switch (k) {
    case BoundKind::distortion_hyperbolic:
    case BoundKind::distortion_quasihyperbolic:
    case BoundKind::koebe_distortion:
    case BoundKind::distortion_uniformly_perfect:
    case BoundKind::distortion_convex: return true;
    default: return false;
  }
}

inline void require(bool ok, BoundKind k, const Domain& d, std::string_view why) {
  if (!ok) {
    throw Error(Errc::kind_domain_mismatch,
                std::string(kind_id(k)) + " on " + d.name() + " (" + std::string(why) + ")");
  }
}

inline void check_admissible(const AnalyticMap* f, const Domain& d, BoundKind k) {
  if (!d.has_closed_form()) throw Error(Errc::kind_domain_mismatch, "checks need a closed-form domain");
  if (needs_map(k)) {
    if (!f) throw Error(Errc::invalid_parameter, std::string(kind_id(k)) + " needs a map");
    require(f->base_domain() == d, k, d, "map " + f->name() + " is based on " + f->base_domain().name());
    require(f->univalent(), k, d, "map must be conformal");
  }
  switch (k) {
    case BoundKind::distortion_hyperbolic:
    case BoundKind::pre_schwarzian_hyperbolic:
    case BoundKind::schwarzian_hyperbolic: require(d.simply_connected(), k, d, "needs a simply connected domain"); break;
    case BoundKind::koebe_distortion: require(d == Domain::unit_disk(), k, d, "needs the unit disk"); break;
    case BoundKind::distortion_uniformly_perfect:
      require(d.kind() != DomainKind::punctured_disk, k, d, "domain is not uniformly perfect");
      break;
    case BoundKind::distortion_convex: require(d.convex(), k, d, "needs a convex domain"); break;
    default: break;
  }
}

inline Window default_window(BoundKind k, const Domain& d, double q) {
  switch (k) {
    case BoundKind::distortion_hyperbolic: return {1.0, 4.0};
    case BoundKind::distortion_quasihyperbolic: return {0.25, 4.0};
    case BoundKind::density_comparison: return {d.simply_connected() ? 0.25 : 0.0, 1.0};
    case BoundKind::koebe_distortion: return {0.25, 1.0};
    case BoundKind::pre_schwarzian_hyperbolic: return {0.0, 8.0};
    case BoundKind::pre_schwarzian_quasihyperbolic: return {0.0, 4.0};
    case BoundKind::schwarzian_hyperbolic: return {0.0, 12.0};
    case BoundKind::schwarzian_quasihyperbolic: return {0.0, 6.0};
    case BoundKind::distortion_uniformly_perfect: return {0.25, 4.0 * q};
    case BoundKind::distortion_convex: return {0.125, 8.0};
  }
  return {0.0, 0.0};
}

inline PointEval evaluate(BoundKind k, const AnalyticMap* f, const Domain& d, complex z, int samples) {
  PointEval e;
  switch (k) {
    case BoundKind::distortion_hyperbolic:
    case BoundKind::distortion_uniformly_perfect:
      e.value = distortion_ratio(*f, d, z, samples);
      e.scale = hyperbolic_density(d, z);
      break;
    case BoundKind::distortion_convex: {
      e.value = distortion_ratio(*f, d, z, samples);
      e.scale = hyperbolic_density(d, z);
      e.extra_value = std::abs(pre_schwarzian(f->eval_jet(z)));
      e.extra_bound = 8.0 * e.scale;
      break;
    }
    case BoundKind::distortion_quasihyperbolic:
      e.value = distortion_ratio(*f, d, z, samples);
      e.scale = 1.0 / boundary_distance(d, z);
      break;
    case BoundKind::density_comparison:
      e.value = hyperbolic_density(d, z);
      e.scale = 1.0 / boundary_distance(d, z);
      break;
    case BoundKind::koebe_distortion: {
      const Jet3 j = f->eval_jet(z);
      e.value = image_boundary_distance(*f, d, z, samples);
      e.scale = (1.0 - std::norm(z)) * std::abs(j.f1);
      break;
    }
    case BoundKind::pre_schwarzian_hyperbolic:
      e.value = std::abs(pre_schwarzian(f->eval_jet(z)));
      e.scale = hyperbolic_density(d, z);
      break;
    case BoundKind::pre_schwarzian_quasihyperbolic:
      e.value = std::abs(pre_schwarzian(f->eval_jet(z)));
      e.scale = 1.0 / boundary_distance(d, z);
      break;
    case BoundKind::schwarzian_hyperbolic: {
      const double lambda = hyperbolic_density(d, z);
      e.value = std::abs(schwarzian(f->eval_jet(z)));
      e.scale = lambda * lambda;
      break;
    }
    case BoundKind::schwarzian_quasihyperbolic: {
      const double inv = 1.0 / boundary_distance(d, z);
      e.value = std::abs(schwarzian(f->eval_jet(z)));
      e.scale = inv * inv;
      break;
    }
  }
  return e;
}

struct SampleOutcome {
  std::optional<PointEval> eval;
  std::string skip_reason;
};

template <typename Fn>
std::vector<SampleOutcome> evaluate_all(const std::vector<complex>& points, Fn&& fn) {
  std::vector<SampleOutcome> out(points.size());
  parallel_for(points.size(), [&](std::size_t i) {
    try {
      out[i].eval = fn(points[i]);
    } catch (const Error& e) {
      // Singular or non-univalent sample points are recoverable skips.
      switch (e.code()) {
        case Errc::outside_domain:
        case Errc::singular_point:
        case Errc::not_locally_univalent:
        case Errc::branch_cut: out[i].skip_reason = e.what(); break;
        default: throw;
      }
    }
  });
  return out;
}

}  // namespace detail

/// Evaluates one bound over a sample set carried into d. f is the map whose
/// distortion is bounded (unused by lambda_delta).
inline BoundReport check_pointwise_bounds(const AnalyticMap* f, const Domain& d, const SampleSet& samples,
                                          BoundKind kind, const BoundOverrides& overrides = {}) {
  detail::check_admissible(f, d, kind);
  double q = 0.0;
  if (kind == BoundKind::distortion_uniformly_perfect) {
    q = overrides.uniformity ? *overrides.uniformity : estimate_uniformity_constant(d, samples);
  }
  detail::Window window = detail::default_window(kind, d, q);
  if (overrides.lower) window.lower = *overrides.lower;
  if (overrides.upper) window.upper = *overrides.upper;

  BoundReport report;
  report.kind = std::string(kind_id(kind));
  const bool sampled = detail::uses_image_delta(kind) && !closed_form_image(*f);
  report.delta_route = sampled ? "sampled" : "closed_form";
  const double rtol = overrides.rtol ? *overrides.rtol : (sampled ? sampled_rtol : closed_form_rtol);
  report.constants = {{"lower", window.lower}, {"upper", window.upper}, {"rtol", rtol}};
  if (kind == BoundKind::distortion_uniformly_perfect) report.constants.emplace_back("Q", q);
  if (kind == BoundKind::distortion_convex) report.constants.emplace_back("T_upper", 8.0);

  const std::vector<complex> points = sample_points(d, samples);
  const auto outcomes = detail::evaluate_all(points, [&](complex z) -> detail::PointEval {
    if (!contains(d, z)) throw Error(Errc::outside_domain, d.name());
    return detail::evaluate(kind, f, d, z, overrides.boundary_samples);
  });

  for (std::size_t i = 0; i < points.size(); ++i) {
    const complex z = points[i];
    if (!outcomes[i].eval) {
      report.skipped.push_back({i, z, outcomes[i].skip_reason});
      continue;
    }
    const detail::PointEval& e = *outcomes[i].eval;
    const double ratio = e.value / e.scale;
    report.observe(ratio, z);
    if (ratio < window.lower - rtol) report.violations.push_back({z, e.value, window.lower * e.scale});
    if (ratio > window.upper + rtol) report.violations.push_back({z, e.value, window.upper * e.scale});
    if (e.extra_value > e.extra_bound * (1.0 + rtol)) report.violations.push_back({z, e.extra_value, e.extra_bound});
  }
  return report;
}

inline BoundReport check_pointwise_bounds(const AnalyticMap& f, const Domain& d, const SampleSet& samples,
                                          BoundKind kind, const BoundOverrides& overrides = {}) {
  return check_pointwise_bounds(&f, d, samples, kind, overrides);
}

// ---------------------------------------------------------------------------
// Uniformity constant
// ---------------------------------------------------------------------------

/// Empirical Q: the largest 1/(lambda delta) over the samples.
inline double estimate_uniformity_constant(const Domain& d, const SampleSet& samples) {
  double best = 0.0;
  for (complex z : sample_points(d, samples)) {
    if (!contains(d, z)) continue;
    best = std::max(best, 1.0 / (hyperbolic_density(d, z) * boundary_distance(d, z)));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Identity checks
// ---------------------------------------------------------------------------

/// lambda_{D*}(p(z)) |p'(z)| (1 - |z|^2) = 1 for the punctured disk covering p.
inline BoundReport check_covering_identity(const SampleSet& samples, double rtol = 1e-10) {
  const AnalyticMap p = AnalyticMap::punctured_disk_covering();
  const Domain pdisk = Domain::punctured_disk();
  BoundReport report;
  report.kind = "covering_identity";
  report.constants = {{"target", 1.0}, {"rtol", rtol}};
  const std::vector<complex> points = sample_points(Domain::unit_disk(), samples);
  const auto outcomes = detail::evaluate_all(points, [&](complex z) -> detail::PointEval {
    const Jet3 j = p.eval_jet(z);
    if (!contains(pdisk, j.f0)) throw Error(Errc::singular_point, "p(z) underflows");
    detail::PointEval e;
    e.value = hyperbolic_density(pdisk, j.f0) * std::abs(j.f1);
    e.scale = hyperbolic_density(Domain::unit_disk(), z);
    return e;
  });
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!outcomes[i].eval) {
      report.skipped.push_back({i, points[i], outcomes[i].skip_reason});
      continue;
    }
    const double q = outcomes[i].eval->value / outcomes[i].eval->scale;
    report.observe(q, points[i]);
    if (std::abs(q - 1.0) > rtol) report.violations.push_back({points[i], outcomes[i].eval->value, outcomes[i].eval->scale});
  }
  return report;
}

/// Both transformation laws for f∘g at each sample of g's base:
///   T_{f∘g} = (T_f∘g) g' + T_g,   S_{f∘g} = (S_f∘g) g'^2 + S_g.
/// Deviations are relative to the magnitude of the summed terms; min/max
/// ratio track the worst of the two per point.
inline BoundReport check_composition_laws(const AnalyticMap& f, const AnalyticMap& g, const SampleSet& samples,
                                          double rtol = 1e-11) {
  const AnalyticMap fg = compose_maps(f, g);
  BoundReport report;
  report.kind = "composition_laws";
  report.constants = {{"rtol", rtol}};
  double worst_t = 0.0;
  double worst_s = 0.0;
  const std::vector<complex> points = sample_points(g.base_domain(), samples);
  struct Dev {
    double t = 0.0, s = 0.0;
  };
  std::vector<std::optional<Dev>> devs(points.size());
  std::vector<std::string> reasons(points.size());
  parallel_for(points.size(), [&](std::size_t i) {
    try {
      const complex z = points[i];
      const Jet3 jg = g.eval_jet(z);
      const Jet3 jf = f.eval_jet(jg.f0);
      const Jet3 jfg = fg.eval_jet(z);
      const complex g1 = jg.f1;
      const complex t_rhs_a = pre_schwarzian(jf) * g1;
      const complex t_rhs_b = pre_schwarzian(jg);
      const complex t_lhs = pre_schwarzian(jfg);
      const double t_scale = std::max({std::abs(t_rhs_a) + std::abs(t_rhs_b), std::abs(t_lhs), 1e-300});
      const complex s_rhs = schwarzian(jf) * g1 * g1 + schwarzian(jg);
      const complex s_lhs = schwarzian(jfg);
      const double s_scale =
          std::max({schwarzian_scale(jfg) + schwarzian_scale(jf) * std::norm(g1) + schwarzian_scale(jg), 1e-300});
      Dev d;
      d.t = std::abs(t_lhs - (t_rhs_a + t_rhs_b)) / t_scale;
      d.s = std::abs(s_lhs - s_rhs) / s_scale;
      devs[i] = d;
    } catch (const Error& e) {
      if (e.code() != Errc::not_locally_univalent && e.code() != Errc::singular_point &&
          e.code() != Errc::outside_domain) {
        throw;
      }
      reasons[i] = e.what();
    }
  });
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!devs[i]) {
      report.skipped.push_back({i, points[i], reasons[i]});
      continue;
    }
    worst_t = std::max(worst_t, devs[i]->t);
    worst_s = std::max(worst_s, devs[i]->s);
    report.observe(std::max(devs[i]->t, devs[i]->s), points[i]);
    if (devs[i]->t > rtol) report.violations.push_back({points[i], devs[i]->t, rtol});
    if (devs[i]->s > rtol) report.violations.push_back({points[i], devs[i]->s, rtol});
  }
  report.values = {{"worst_T_deviation", worst_t}, {"worst_S_deviation", worst_s}};
  return report;
}

// ---------------------------------------------------------------------------
// Distances
// ---------------------------------------------------------------------------

/// k_{f(D)}(f(z1), f(z2)) / h_D(z1, z2) over disk point pairs, against the
/// window [1, 4] widened by the given slacks. Coincident pairs count as 1.
inline BoundReport check_distance_comparison(const AnalyticMap& f, const std::vector<std::pair<complex, complex>>& pairs,
                                             const SolverConfig& cfg = {}, double lower_slack = 1e-3,
                                             double upper_slack = 1e-2) {
  if (!(f.base_domain() == Domain::unit_disk()) || !f.univalent()) {
    throw Error(Errc::kind_domain_mismatch, "distance comparison needs a conformal map of the disk");
  }
  if (!closed_form_image(f)) throw Error(Errc::kind_domain_mismatch, f.name() + " has no closed-form image");
  const Domain& image = *f.image_domain();
  BoundReport report;
  report.kind = "distance_comparison";
  report.constants = {{"lower", 1.0}, {"upper", 4.0}, {"lower_slack", lower_slack}, {"upper_slack", upper_slack}};
  std::vector<double> ratios(pairs.size());
  std::vector<double> ks(pairs.size());
  std::vector<double> hs(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    const auto [z1, z2] = pairs[i];
    hs[i] = hyperbolic_distance_disk(z1, z2);
    ks[i] = quasihyperbolic_distance(image, f(z1), f(z2), cfg).distance;
    ratios[i] = (z1 == z2) ? 1.0 : ks[i] / hs[i];
  });
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const complex z = pairs[i].first;
    report.observe(ratios[i], z);
    if (ratios[i] < 1.0 - lower_slack) report.violations.push_back({z, ks[i], hs[i]});
    if (ratios[i] > 4.0 + upper_slack) report.violations.push_back({z, ks[i], 4.0 * hs[i]});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Logarithm construction
// ---------------------------------------------------------------------------

/// Builds f = c Log(z - zeta0) with zeta0 = 0 on the slit disk, whose Log
/// image is the half-strip {Re w < 0, |Im w| < pi} (scaled by c), and reports
/// the distortion ratio r(z0) = |f'(z0)| / delta_{f(slit disk)}(f(z0))
/// against the geometry of d:
///   r_times_delta   r(z0) delta_d(z0)   (1 when the image distance equals 1/|f'| scaled)
///   r_over_lambda   r(z0) / lambda_d(z0)
/// zeta0 = 0 is a nearest boundary point of z0 only while |z0| <= 1/2; the
/// report carries that flag.
inline BoundReport check_log_construction(const Domain& d, complex z0, complex c = 1.0) {
  if (d.kind() != DomainKind::punctured_disk && d.kind() != DomainKind::slit_disk) {
    throw Error(Errc::kind_domain_mismatch, "log construction runs on pdisk or slit-disk");
  }
  if (!contains(d, z0)) throw Error(Errc::outside_domain, d.name());
  const complex zeta0 = 0.0;
  const AnalyticMap f = AnalyticMap::log_slit(zeta0, c);
  const Domain& base = f.base_domain();
  if (!contains(base, z0)) throw Error(Errc::branch_cut, "z0 lies on the slit");
  const double r = distortion_ratio(f, base, z0);
  const double delta = boundary_distance(d, z0);
  const double lambda = hyperbolic_density(d, z0);

  BoundReport report;
  report.kind = "log_construction";
  report.constants = {{"c_re", c.real()}, {"c_im", c.imag()}, {"zeta0_re", zeta0.real()}, {"zeta0_im", zeta0.imag()}};
  report.observe(r / lambda, z0);
  report.values = {
      {"r", r},
      {"r_times_delta", r * delta},
      {"r_over_lambda", r / lambda},
      {"delta_image", image_boundary_distance(f, base, z0)},
      {"zeta0_is_nearest", std::abs(z0 - zeta0) <= delta * (1.0 + 1e-12) ? 1.0 : 0.0},
  };
  return report;
}

// ---------------------------------------------------------------------------
// Coupling between distortion and pre-Schwarzian bounds
// ---------------------------------------------------------------------------

struct CouplingReport {
  double distortion_constant = 0.0;     // a: max ratio / lambda
  double pre_schwarzian_constant = 0.0; // b: max |T_f| / lambda
  bool holds = false;                   // b <= 4a
};

/// Given a ratio/lambda report (thm21, thm41 or cor43) and an osgood_T report
/// on the same samples, checks that the pre-Schwarzian constant is within 4a.
inline CouplingReport check_distortion_coupling(const BoundReport& distortion, const BoundReport& pre_schwarzian,
                                                double rtol = closed_form_rtol) {
  if (distortion.samples_checked != pre_schwarzian.samples_checked) {
    throw Error(Errc::invalid_parameter, "coupled reports must share their samples");
  }
  CouplingReport out;
  out.distortion_constant = distortion.max_ratio;
  out.pre_schwarzian_constant = pre_schwarzian.max_ratio;
  out.holds = out.pre_schwarzian_constant <= 4.0 * out.distortion_constant + rtol;
  return out;
}

}  // namespace conformal
