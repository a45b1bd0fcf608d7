#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <utility>
#include <vector>

#include "conformal/domain.hpp"
#include "conformal/error.hpp"
#include "conformal/image.hpp"
#include "conformal/map.hpp"

namespace conformal {

/// Which conformal density a line integral uses.
enum class Density { hyperbolic, quasihyperbolic };

struct SolverConfig {
  int grid_resolution = 200;
  int relax_iterations = 500;
  double relax_step = 0.1;  // fraction of the local boundary distance
  int path_nodes = 128;
  int quad_panels_per_segment = 16;
  double tolerance = 1e-6;

  void validate() const {
    if (grid_resolution < 2 || relax_iterations < 0 || !(relax_step > 0.0) || path_nodes < 2 ||
        quad_panels_per_segment < 1 || !(tolerance > 0.0 && tolerance < 1.0)) {
      throw Error(Errc::invalid_parameter, "solver configuration");
    }
  }
};

/// Ordered points of a rectifiable path; at least two, consecutive distinct.
class Polyline {
 public:
  explicit Polyline(std::vector<complex> points) : points_(std::move(points)) {
    if (points_.size() < 2) throw Error(Errc::invalid_polyline, "need at least two points");
    for (std::size_t k = 1; k < points_.size(); ++k) {
      if (points_[k] == points_[k - 1]) throw Error(Errc::invalid_polyline, "repeated consecutive point");
    }
  }

  const std::vector<complex>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

  double euclidean_length() const {
    double len = 0.0;
    for (std::size_t k = 1; k < points_.size(); ++k) len += std::abs(points_[k] - points_[k - 1]);
    return len;
  }

 private:
  std::vector<complex> points_;
};

namespace detail {

struct GaussLegendre4 {
  static constexpr std::array<double, 4> nodes{-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                                               0.8611363115940526};
  static constexpr std::array<double, 4> weights{0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                                                 0.3478548451374538};
};

/// Density value, or NaN when z is not an interior point.
inline double density_or_nan(Density density, const Domain& d, complex z) {
  if (!contains(d, z)) return std::numeric_limits<double>::quiet_NaN();
  return density == Density::hyperbolic ? hyperbolic_density(d, z) : 1.0 / boundary_distance(d, z);
}

inline double delta_or_zero(const Domain& d, complex z) { return contains(d, z) ? boundary_distance(d, z) : 0.0; }

inline bool covered(const Domain& d, complex a, double da, complex b, double db, int depth) {
  if (da + db > std::abs(b - a)) return true;
  if (depth == 0) return false;
  const complex m = 0.5 * (a + b);
  const double dm = delta_or_zero(d, m);
  if (dm <= 0.0) return false;
  return covered(d, a, da, m, dm, depth - 1) && covered(d, m, dm, b, db, depth - 1);
}

}  // namespace detail

/// Certifies that the closed segment [a, b] lies in d: boundary-distance
/// balls around bisection points must overlap. Detects crossings of slits
/// that pointwise membership tests miss.
inline bool segment_inside(const Domain& d, complex a, complex b) {
  const double da = detail::delta_or_zero(d, a);
  const double db = detail::delta_or_zero(d, b);
  if (da <= 0.0 || db <= 0.0) return false;
  return detail::covered(d, a, da, b, db, 40);
}

/// Fixed-panel composite 4-point Gauss-Legendre integral of the density over
/// [a, b]; NaN if a node leaves the domain.
inline double segment_integral(Density density, const Domain& d, complex a, complex b, int panels) {
  const complex step = (b - a) / static_cast<double>(panels);
  const double half = 0.5 * std::abs(step);
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const complex mid = a + (static_cast<double>(p) + 0.5) * step;
    for (std::size_t q = 0; q < 4; ++q) {
      sum += detail::GaussLegendre4::weights[q] *
             detail::density_or_nan(density, d, mid + 0.5 * detail::GaussLegendre4::nodes[q] * step);
    }
  }
  return sum * half;
}

/// Integral of lambda_D or 1/delta_D along the polyline. Each segment starts
/// at cfg.quad_panels_per_segment panels and doubles while successive
/// refinements disagree by more than cfg.tolerance (relative).
inline double path_quadrature(Density density, const Domain& d, const Polyline& path, const SolverConfig& cfg = {}) {
  if (!d.has_closed_form()) detail::undecidable(d);
  constexpr int max_panels = 1 << 14;
  double total = 0.0;
  const auto& pts = path.points();
  for (std::size_t k = 1; k < pts.size(); ++k) {
    if (!segment_inside(d, pts[k - 1], pts[k])) throw Error(Errc::path_exits_domain, d.name());
    int panels = cfg.quad_panels_per_segment;
    double coarse = segment_integral(density, d, pts[k - 1], pts[k], panels);
    double fine = segment_integral(density, d, pts[k - 1], pts[k], 2 * panels);
    while (std::abs(fine - coarse) > cfg.tolerance * std::abs(fine) && 2 * panels < max_panels) {
      panels *= 2;
      coarse = fine;
      fine = segment_integral(density, d, pts[k - 1], pts[k], 2 * panels);
    }
    if (!std::isfinite(fine)) throw Error(Errc::path_exits_domain, d.name());
    total += fine;
  }
  return total;
}

/// Hyperbolic distance in the unit disk (curvature -4).
inline double hyperbolic_distance_disk(complex z1, complex z2) {
  if (!(std::abs(z1) < 1.0) || !(std::abs(z2) < 1.0)) throw Error(Errc::outside_domain, "disk");
  return std::atanh(std::abs(z1 - z2) / std::abs(1.0 - std::conj(z1) * z2));
}

/// Hyperbolic distance between f(z1) and f(z2) in f(D), D the unit disk,
/// by conformal invariance.
inline double hyperbolic_distance_via_map(const AnalyticMap& f, complex z1, complex z2) {
  if (!f.univalent()) throw Error(Errc::map_not_univalent, f.name());
  if (!(f.base_domain() == Domain::unit_disk())) throw Error(Errc::invalid_parameter, "map must be based on the disk");
  return hyperbolic_distance_disk(z1, z2);
}

/// Conformal coordinate in the unit disk for simply connected catalog
/// domains, via the same routes the closed-form densities use.
inline complex to_disk(const Domain& d, complex z) {
  if (!d.has_closed_form()) detail::undecidable(d);
  if (!contains(d, z)) throw Error(Errc::outside_domain, d.name());
  auto from_half_plane = [](complex u) { return (u - complex(0.0, 1.0)) / (u + complex(0.0, 1.0)); };
  switch (d.kind()) {
    case DomainKind::unit_disk: return z;
    case DomainKind::upper_half_plane: return from_half_plane(z);
    case DomainKind::koebe_slit_plane: return elementary::koebe_inverse(z);
    case DomainKind::slit_disk: return from_half_plane(elementary::slit_disk_to_half_plane(z).f0);
    case DomainKind::half_strip: return to_disk(Domain::slit_disk(), std::exp(z));
    case DomainKind::affine: return to_disk(d.base(), detail::affine_preimage(d, z));
    default: break;
  }
  throw Error(Errc::no_density_route, d.name() + " is not simply connected");
}

/// Hyperbolic distance in a simply connected catalog domain by pulling both
/// points back to the disk.
inline double hyperbolic_distance(const Domain& d, complex z1, complex z2) {
  return hyperbolic_distance_disk(to_disk(d, z1), to_disk(d, z2));
}

}  // namespace conformal
