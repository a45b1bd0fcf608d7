#pragma once

#include <cmath>
#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "conformal/elementary.hpp"
#include "conformal/error.hpp"
#include "conformal/jet.hpp"

namespace conformal {

class AnalyticMap;

enum class DomainKind {
  unit_disk,
  punctured_disk,
  upper_half_plane,
  koebe_slit_plane,  // C \ (-inf, -1/4]
  slit_disk,         // D \ (-1, 0]
  half_strip,        // {Re w < 0, |Im w| < pi}, the Log image of the slit disk
  affine,            // {scale * z + shift : z in base}
  image,             // f(base) for a univalent catalog map f, boundary known by sampling
};

/// A hyperbolic plane region. Catalog kinds carry closed forms for membership,
/// boundary distance and density; image domains only answer queries through
/// preimages (see image.hpp).
class Domain {
 public:
  static constexpr double default_truncation_radius = 1e6;

  static Domain unit_disk() { return Domain(DomainKind::unit_disk); }
  static Domain punctured_disk() { return Domain(DomainKind::punctured_disk); }
  static Domain upper_half_plane() { return Domain(DomainKind::upper_half_plane); }
  static Domain koebe_slit_plane(double truncation_radius = default_truncation_radius) {
    Domain d(DomainKind::koebe_slit_plane);
    d.truncation_ = truncation_radius;
    return d;
  }
  static Domain slit_disk() { return Domain(DomainKind::slit_disk); }
  static Domain half_strip(double truncation_radius = default_truncation_radius) {
    Domain d(DomainKind::half_strip);
    d.truncation_ = truncation_radius;
    return d;
  }

  /// The image of `base` under w = scale * z + shift; scale must be nonzero.
  static Domain affine(const Domain& base, complex scale, complex shift = 0.0) {
    if (scale == complex{}) throw Error(Errc::invalid_parameter, "affine scale must be nonzero");
    if (base.kind() == DomainKind::image) throw Error(Errc::invalid_parameter, "affine image of a sampled domain");
    // Collapse nested affine maps so equality stays structural.
    if (base.kind() == DomainKind::affine) {
      return affine(*base.base_, scale * base.scale_, scale * base.shift_ + shift);
    }
    Domain d(DomainKind::affine);
    d.base_ = std::make_shared<const Domain>(base);
    d.scale_ = scale;
    d.shift_ = shift;
    return d;
  }

  static Domain image(std::shared_ptr<const AnalyticMap> map, const Domain& base, int boundary_samples);

  DomainKind kind() const noexcept { return kind_; }
  double truncation_radius() const noexcept { return truncation_; }
  const Domain& base() const { return *base_; }
  complex affine_scale() const noexcept { return scale_; }
  complex affine_shift() const noexcept { return shift_; }
  const std::shared_ptr<const AnalyticMap>& image_map() const noexcept { return map_; }
  int image_samples() const noexcept { return samples_; }

  bool simply_connected() const noexcept {
    switch (kind_) {
      case DomainKind::punctured_disk: return false;
      case DomainKind::affine: return base_->simply_connected();
      case DomainKind::image: return base_->simply_connected();
      default: return true;
    }
  }

  bool convex() const noexcept {
    switch (kind_) {
      case DomainKind::unit_disk:
      case DomainKind::upper_half_plane:
      case DomainKind::half_strip: return true;
      case DomainKind::affine: return base_->convex();
      default: return false;
    }
  }

  bool has_closed_form() const noexcept { return kind_ != DomainKind::image; }

  std::string name() const;

  friend bool operator==(const Domain& a, const Domain& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
      case DomainKind::affine: return *a.base_ == *b.base_ && a.scale_ == b.scale_ && a.shift_ == b.shift_;
      case DomainKind::image: return a.map_ == b.map_ && *a.base_ == *b.base_ && a.samples_ == b.samples_;
      default: return true;
    }
  }

 private:
  explicit Domain(DomainKind kind) : kind_(kind) {}

  DomainKind kind_;
  double truncation_ = default_truncation_radius;
  std::shared_ptr<const Domain> base_;
  complex scale_{1.0, 0.0};
  complex shift_{0.0, 0.0};
  std::shared_ptr<const AnalyticMap> map_;
  int samples_ = 0;
  std::string label_;
};

inline std::string Domain::name() const {
  switch (kind_) {
    case DomainKind::unit_disk: return "disk";
    case DomainKind::punctured_disk: return "pdisk";
    case DomainKind::upper_half_plane: return "uhp";
    case DomainKind::koebe_slit_plane: return "koebe-slit";
    case DomainKind::slit_disk: return "slit-disk";
    case DomainKind::half_strip: return "half-strip";
    case DomainKind::affine: {
      auto c = [](complex v) { return std::to_string(v.real()) + "," + std::to_string(v.imag()); };
      return "affine(" + base_->name() + ";" + c(scale_) + ";" + c(shift_) + ")";
    }
    case DomainKind::image: return label_;
  }
  return "unknown";
}

namespace detail {

inline bool on_negative_axis(complex z, double from) { return z.imag() == 0.0 && z.real() <= from; }

inline complex affine_preimage(const Domain& d, complex w) { return (w - d.affine_shift()) / d.affine_scale(); }

[[noreturn]] inline void undecidable(const Domain& d) {
  throw Error(Errc::membership_undecidable, "raw point queried against " + d.name());
}

}  // namespace detail

inline bool contains(const Domain& d, complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  switch (d.kind()) {
    case DomainKind::unit_disk: return std::abs(z) < 1.0;
    case DomainKind::punctured_disk: {
      const double r = std::abs(z);
      return r > 0.0 && r < 1.0;
    }
    case DomainKind::upper_half_plane: return z.imag() > 0.0;
    case DomainKind::koebe_slit_plane: return !detail::on_negative_axis(z, -0.25);
    case DomainKind::slit_disk: return std::abs(z) < 1.0 && !detail::on_negative_axis(z, 0.0);
    case DomainKind::half_strip: return z.real() < 0.0 && std::abs(z.imag()) < elementary::pi;
    case DomainKind::affine: return contains(d.base(), detail::affine_preimage(d, z));
    case DomainKind::image: detail::undecidable(d);
  }
  return false;
}

/// Euclidean distance from z to the boundary of d.
inline double boundary_distance(const Domain& d, complex z) {
  if (d.kind() == DomainKind::image) detail::undecidable(d);
  if (!contains(d, z)) throw Error(Errc::outside_domain, d.name());
  switch (d.kind()) {
    case DomainKind::unit_disk: return 1.0 - std::abs(z);
    case DomainKind::punctured_disk: {
      const double r = std::abs(z);
      return std::min(r, 1.0 - r);
    }
    case DomainKind::upper_half_plane: return z.imag();
    case DomainKind::koebe_slit_plane:
      return z.real() >= -0.25 ? std::abs(z + 0.25) : std::abs(z.imag());
    case DomainKind::slit_disk: {
      const double to_slit = z.real() >= 0.0 ? std::abs(z) : std::abs(z.imag());
      return std::min(1.0 - std::abs(z), to_slit);
    }
    case DomainKind::half_strip:
      return std::min({-z.real(), elementary::pi - z.imag(), elementary::pi + z.imag()});
    case DomainKind::affine:
      return std::abs(d.affine_scale()) * boundary_distance(d.base(), detail::affine_preimage(d, z));
    case DomainKind::image: break;
  }
  return 0.0;
}

/// Hyperbolic density with curvature -4, so lambda_disk(z) = 1/(1-|z|^2).
inline double hyperbolic_density(const Domain& d, complex z) {
  if (d.kind() == DomainKind::image) detail::undecidable(d);
  if (!contains(d, z)) throw Error(Errc::outside_domain, d.name());
  switch (d.kind()) {
    case DomainKind::unit_disk: {
      const double r = std::abs(z);
      return 1.0 / ((1.0 - r) * (1.0 + r));
    }
    case DomainKind::punctured_disk: {
      const double r = std::abs(z);
      return 1.0 / (2.0 * r * -std::log(r));
    }
    case DomainKind::upper_half_plane: return 0.5 / z.imag();
    case DomainKind::koebe_slit_plane: {
      // Pushforward through the Koebe function from the disk.
      const complex pre = elementary::koebe_inverse(z);
      const double r = std::abs(pre);
      return 1.0 / ((1.0 - r) * (1.0 + r) * std::abs(elementary::koebe(pre).f1));
    }
    case DomainKind::slit_disk: {
      const Jet3 h = elementary::slit_disk_to_half_plane(z);
      return std::abs(h.f1) * 0.5 / h.f0.imag();
    }
    case DomainKind::half_strip: {
      // exp carries the half-strip onto the slit disk.
      const complex e = std::exp(z);
      return hyperbolic_density(Domain::slit_disk(), e) * std::abs(e);
    }
    case DomainKind::affine:
      return hyperbolic_density(d.base(), detail::affine_preimage(d, z)) / std::abs(d.affine_scale());
    case DomainKind::image: break;
  }
  return 0.0;
}

namespace detail {

inline std::vector<complex> circle_samples(int n) {
  std::vector<complex> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) out.push_back(std::polar(1.0, 2.0 * elementary::pi * j / n));
  return out;
}

/// n magnitudes in [first, radius] with constant ratio.
inline std::vector<double> geometric(int n, double first, double radius) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  if (n == 1) return {first};
  const double q = std::pow(radius / first, 1.0 / (n - 1));
  double t = first;
  for (int j = 0; j < n; ++j, t *= q) out.push_back(t);
  return out;
}

/// Boundary samples of the closed-form kinds. Points on slits are emitted on
/// both sides via the sign of a zero imaginary part, which principal-branch
/// boundary extensions respect.
inline std::vector<complex> catalog_boundary_samples(const Domain& d, int n) {
  if (n < 1) throw Error(Errc::invalid_parameter, "boundary sample count must be >= 1");
  switch (d.kind()) {
    case DomainKind::unit_disk: return circle_samples(n);
    case DomainKind::punctured_disk: {
      std::vector<complex> out{complex{0.0, 0.0}};
      for (complex c : circle_samples(n - 1)) out.push_back(c);
      out.resize(static_cast<std::size_t>(n));
      return out;
    }
    case DomainKind::upper_half_plane: {
      std::vector<complex> out{complex{0.0, 0.0}};
      const int half = (n - 1) / 2;
      if (half > 0) {
        for (double t : geometric(half, 1.0 / d.truncation_radius(), d.truncation_radius())) {
          out.emplace_back(t, 0.0);
          out.emplace_back(-t, 0.0);
        }
      }
      while (static_cast<int>(out.size()) < n) out.emplace_back(d.truncation_radius(), 0.0);
      return out;
    }
    case DomainKind::koebe_slit_plane: {
      std::vector<complex> out;
      for (double t : geometric(n, 0.25, d.truncation_radius())) out.emplace_back(-t, 0.0);
      return out;
    }
    case DomainKind::slit_disk: {
      const int on_slit = n / 2;
      const int per_side = on_slit / 2;
      std::vector<complex> out = circle_samples(n - 2 * per_side);
      for (int k = 0; k < per_side; ++k) {
        const double x = -static_cast<double>(k) / per_side;
        out.emplace_back(x, 0.0);
        out.emplace_back(x, -0.0);
      }
      return out;
    }
    case DomainKind::half_strip: {
      const int rays = n / 2;
      const int per_ray = rays / 2;
      const int wall = n - 2 * per_ray;
      std::vector<complex> out;
      for (int k = 0; k < wall; ++k) {
        const double s = wall == 1 ? 0.0 : -1.0 + 2.0 * k / (wall - 1);
        out.emplace_back(0.0, s * elementary::pi);
      }
      if (per_ray > 0) {
        for (double t : geometric(per_ray, 1.0 / d.truncation_radius(), d.truncation_radius())) {
          out.emplace_back(-t, elementary::pi);
          out.emplace_back(-t, -elementary::pi);
        }
      }
      return out;
    }
    case DomainKind::affine: {
      std::vector<complex> out = catalog_boundary_samples(d.base(), n);
      for (complex& c : out) c = d.affine_scale() * c + d.affine_shift();
      return out;
    }
    case DomainKind::image: break;
  }
  throw Error(Errc::invalid_parameter, "image domains sample through their map");
}

/// Carries a point of the unit disk into d along a fixed conformal route
/// (or the identity for disk-like kinds), so disk sample strategies apply
/// to every catalog domain. Points landing on a slit are returned as is and
/// fail contains().
inline complex transport_from_disk(const Domain& d, complex u) {
  switch (d.kind()) {
    case DomainKind::unit_disk:
    case DomainKind::punctured_disk:
    case DomainKind::slit_disk: return u;
    case DomainKind::upper_half_plane: return elementary::cayley(u).f0;
    case DomainKind::koebe_slit_plane: return elementary::koebe(u).f0;
    case DomainKind::half_strip: return std::log(u);
    case DomainKind::affine: return d.affine_scale() * transport_from_disk(d.base(), u) + d.affine_shift();
    case DomainKind::image: break;
  }
  throw Error(Errc::membership_undecidable, "image domains sample through their map");
}

}  // namespace detail

}  // namespace conformal
