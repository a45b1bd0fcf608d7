#pragma once

#include <cmath>
#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "conformal/domain.hpp"
#include "conformal/elementary.hpp"
#include "conformal/error.hpp"
#include "conformal/jet.hpp"
#include "conformal/random.hpp"

namespace conformal {

enum class MapKind { identity, koebe, mobius, cayley, log_slit, power, punctured_disk_covering, composite };

/// A catalog analytic map on a declared base domain, evaluable to a Jet3.
/// Immutable; composites share their factors.
class AnalyticMap {
 public:
  static constexpr int default_composition_checks = 256;

  static AnalyticMap identity(const Domain& base = Domain::unit_disk()) {
    AnalyticMap m(MapKind::identity, base);
    m.univalent_ = true;
    if (base.has_closed_form()) m.image_ = base;
    return m;
  }

  static AnalyticMap koebe() {
    AnalyticMap m(MapKind::koebe, Domain::unit_disk());
    m.univalent_ = true;
    m.image_ = Domain::koebe_slit_plane();
    return m;
  }

  static AnalyticMap mobius(complex a, double theta) {
    if (!(std::abs(a) < 1.0)) throw Error(Errc::invalid_parameter, "mobius requires |a| < 1");
    AnalyticMap m(MapKind::mobius, Domain::unit_disk());
    m.a_ = a;
    m.theta_ = theta;
    m.univalent_ = true;
    m.image_ = Domain::unit_disk();
    return m;
  }

  static AnalyticMap cayley() {
    AnalyticMap m(MapKind::cayley, Domain::unit_disk());
    m.univalent_ = true;
    m.image_ = Domain::upper_half_plane();
    return m;
  }

  /// z -> c Log(z - zeta0), principal branch. The default base is the slit
  /// disk translated to zeta0, on which z - zeta0 never meets the cut; its
  /// image is the half-strip scaled by c.
  static AnalyticMap log_slit(complex zeta0, complex c) {
    const Domain base = zeta0 == complex{} ? Domain::slit_disk() : Domain::affine(Domain::slit_disk(), 1.0, zeta0);
    return log_slit(zeta0, c, base);
  }

  static AnalyticMap log_slit(complex zeta0, complex c, const Domain& base) {
    if (c == complex{}) throw Error(Errc::invalid_parameter, "log_slit requires c != 0");
    AnalyticMap m(MapKind::log_slit, base);
    m.a_ = zeta0;
    m.c_ = c;
    const bool slit_base = (zeta0 == complex{} && base == Domain::slit_disk()) ||
                           base == Domain::affine(Domain::slit_disk(), 1.0, zeta0);
    // On a translated half-plane the argument never reaches the cut either;
    // the image is a strip with no catalog kind, so its delta is sampled.
    const bool half_plane_base = (zeta0 == complex{} && base == Domain::upper_half_plane()) ||
                                 base == Domain::affine(Domain::upper_half_plane(), 1.0, zeta0);
    m.univalent_ = slit_base || half_plane_base;
    if (slit_base) m.image_ = c == complex{1.0, 0.0} ? Domain::half_strip() : Domain::affine(Domain::half_strip(), c);
    return m;
  }

  static AnalyticMap power(int n) {
    if (n < 1) throw Error(Errc::invalid_parameter, "power requires n >= 1");
    AnalyticMap m(MapKind::power, Domain::unit_disk());
    m.n_ = n;
    m.univalent_ = n == 1;
    m.image_ = Domain::unit_disk();
    return m;
  }

  /// exp((z+1)/(z-1)), the universal covering of the punctured disk.
  static AnalyticMap punctured_disk_covering() {
    AnalyticMap m(MapKind::punctured_disk_covering, Domain::unit_disk());
    m.univalent_ = false;
    m.image_ = Domain::punctured_disk();
    return m;
  }

  MapKind kind() const noexcept { return kind_; }
  const Domain& base_domain() const noexcept { return base_; }
  const std::optional<Domain>& image_domain() const noexcept { return image_; }
  bool univalent() const noexcept { return univalent_; }

  complex mobius_center() const noexcept { return a_; }
  double mobius_angle() const noexcept { return theta_; }
  complex log_center() const noexcept { return a_; }
  complex log_scale() const noexcept { return c_; }
  int exponent() const noexcept { return n_; }
  const AnalyticMap& outer() const { return *outer_; }
  const AnalyticMap& inner() const { return *inner_; }

  std::string name() const {
    auto num = [](double v) {
      std::string s = std::to_string(v);
      s.erase(s.find_last_not_of('0') + 1);
      if (!s.empty() && s.back() == '.') s.pop_back();
      return s;
    };
    switch (kind_) {
      case MapKind::identity: return "identity";
      case MapKind::koebe: return "koebe";
      case MapKind::mobius:
        return "mobius:" + num(a_.real()) + "," + (a_.imag() != 0.0 ? num(a_.imag()) + "," : "") + num(theta_);
      case MapKind::cayley: return "cayley";
      case MapKind::log_slit:
        if (a_.imag() == 0.0 && c_.imag() == 0.0) return "logslit:" + num(a_.real()) + "," + num(c_.real());
        return "logslit:" + num(a_.real()) + "," + num(a_.imag()) + "," + num(c_.real()) + "," + num(c_.imag());
      case MapKind::power: return "power:" + std::to_string(n_);
      case MapKind::punctured_disk_covering: return "pcover";
      case MapKind::composite: return outer_->name() + "@" + inner_->name();
    }
    return "unknown";
  }

  /// Exact jet at an interior point of the base domain.
  Jet3 eval_jet(complex z) const {
    if (!contains(base_, z)) throw Error(Errc::outside_domain, name() + " base " + base_.name());
    const Jet3 j = raw_jet(z);
    if (!j.finite()) throw Error(Errc::singular_point, name());
    return j;
  }

  complex operator()(complex z) const { return eval_jet(z).f0; }

  /// Value of the continuous boundary extension at a boundary point b of the
  /// base. Throws boundary_extension_undefined at poles and essential
  /// singularities.
  complex eval_boundary(complex b) const {
    complex v;
    switch (kind_) {
      case MapKind::koebe:
      case MapKind::cayley:
      case MapKind::punctured_disk_covering:
        if (b == complex{1.0, 0.0}) throw Error(Errc::boundary_extension_undefined, name());
        v = raw_jet(b).f0;
        break;
      case MapKind::log_slit:
        if (b == a_) throw Error(Errc::boundary_extension_undefined, name());
        v = c_ * std::log(b - a_);
        break;
      case MapKind::composite: v = outer_->eval_boundary(inner_->eval_boundary(b)); break;
      default: v = raw_jet(b).f0; break;
    }
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(Errc::boundary_extension_undefined, name());
    }
    return v;
  }

  friend AnalyticMap compose_maps(const AnalyticMap& f, const AnalyticMap& g, int checks, std::uint64_t seed);

 private:
  AnalyticMap(MapKind kind, Domain base) : kind_(kind), base_(std::move(base)) {}

  Jet3 raw_jet(complex z) const {
    switch (kind_) {
      case MapKind::identity: return Jet3::identity(z);
      case MapKind::koebe: return elementary::koebe(z);
      case MapKind::mobius: return elementary::mobius(a_, theta_, z);
      case MapKind::cayley: return elementary::cayley(z);
      case MapKind::log_slit: {
        const complex u = z - a_;
        if (u.imag() == 0.0 && u.real() <= 0.0) throw Error(Errc::branch_cut, name());
        return scale(c_, elementary::log(u));
      }
      case MapKind::power: return elementary::power(n_, z);
      case MapKind::punctured_disk_covering: return elementary::punctured_disk_covering(z);
      case MapKind::composite: {
        const Jet3 in = inner_->eval_jet(z);
        return compose(outer_->eval_jet(in.f0), in);
      }
    }
    return {};
  }

  MapKind kind_;
  Domain base_;
  std::optional<Domain> image_;
  bool univalent_ = false;
  complex a_{};
  double theta_ = 0.0;
  complex c_{1.0, 0.0};
  int n_ = 1;
  std::shared_ptr<const AnalyticMap> outer_;
  std::shared_ptr<const AnalyticMap> inner_;
};

/// f∘g. Compatibility of g(base g) with base f is spot-checked on seeded
/// interior samples of g's base.
inline AnalyticMap compose_maps(const AnalyticMap& f, const AnalyticMap& g,
                                int checks = AnalyticMap::default_composition_checks, std::uint64_t seed = 0x5eed) {
  if (!f.base_domain().has_closed_form()) {
    throw Error(Errc::composition_incompatible, "outer base " + f.base_domain().name() + " has no membership test");
  }
  Rng rng(seed);
  for (int k = 0; k < checks; ++k) {
    const complex z = detail::transport_from_disk(g.base_domain(), rng.in_disk());
    if (!contains(g.base_domain(), z)) continue;
    if (!contains(f.base_domain(), g(z))) {
      throw Error(Errc::composition_incompatible, f.name() + " after " + g.name());
    }
  }
  AnalyticMap m(MapKind::composite, g.base_domain());
  m.outer_ = std::make_shared<const AnalyticMap>(f);
  m.inner_ = std::make_shared<const AnalyticMap>(g);
  m.univalent_ = f.univalent() && g.univalent();
  if (g.image_domain() && *g.image_domain() == f.base_domain()) m.image_ = f.image_domain();
  return m;
}

inline Jet3 eval_jet(const AnalyticMap& f, complex z) { return f.eval_jet(z); }

inline Domain Domain::image(std::shared_ptr<const AnalyticMap> map, const Domain& base, int boundary_samples) {
  if (!map) throw Error(Errc::invalid_parameter, "image domain needs a map");
  if (!map->univalent()) throw Error(Errc::map_not_univalent, map->name());
  if (boundary_samples < 64) throw Error(Errc::invalid_parameter, "image domains need >= 64 boundary samples");
  if (!(map->base_domain() == base)) throw Error(Errc::invalid_parameter, "image base differs from the map's base");
  Domain d(DomainKind::image);
  d.label_ = "image:" + map->name() + ":" + base.name() + ":" + std::to_string(boundary_samples);
  d.map_ = std::move(map);
  d.base_ = std::make_shared<const Domain>(base);
  d.samples_ = boundary_samples;
  return d;
}

}  // namespace conformal
