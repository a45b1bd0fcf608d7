#pragma once

// Domain operations that go through a map: pushforward densities and the
// boundary distance of an image f(D).

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "conformal/domain.hpp"
#include "conformal/map.hpp"

namespace conformal {

/// n points on the boundary of d. Image domains push the base samples
/// through the map's boundary extension, dropping singular ones.
inline std::vector<complex> boundary_samples(const Domain& d, int n) {
  if (d.kind() != DomainKind::image) return detail::catalog_boundary_samples(d, n);
  const AnalyticMap& f = *d.image_map();
  std::vector<complex> out;
  for (complex b : boundary_samples(d.base(), n)) {
    try {
      out.push_back(f.eval_boundary(b));
    } catch (const Error& e) {
      if (e.code() != Errc::boundary_extension_undefined) throw;
    }
  }
  return out;
}

/// lambda_{f(base)} at f(z), from lambda_{f(base)}(f(z)) |f'(z)| = lambda_base(z).
inline double pushforward_density(const AnalyticMap& f, const Domain& base, complex z) {
  const double lambda = hyperbolic_density(base, z);
  const Jet3 j = f.eval_jet(z);
  if (!j.locally_univalent()) throw Error(Errc::singular_point, "f'(z) = 0 for " + f.name());
  return lambda / std::abs(j.f1);
}

/// min over boundary samples b of |f(z) - f(b)|; never below the true
/// distance up to the boundary extension's accuracy.
inline double image_boundary_distance_sampled(const AnalyticMap& f, const Domain& base, complex z, int n) {
  if (!f.univalent()) throw Error(Errc::map_not_univalent, f.name());
  if (n < 64) throw Error(Errc::invalid_parameter, "need >= 64 boundary samples");
  if (!contains(base, z)) throw Error(Errc::outside_domain, base.name());
  const complex w = f(z);
  double best = std::numeric_limits<double>::infinity();
  for (complex b : boundary_samples(base, n)) {
    try {
      best = std::min(best, std::abs(w - f.eval_boundary(b)));
    } catch (const Error& e) {
      if (e.code() != Errc::boundary_extension_undefined) throw;
    }
  }
  return best;
}

/// delta_{f(base)}(f(z)): exact when the image is a closed-form domain,
/// sampled otherwise.
inline double image_boundary_distance(const AnalyticMap& f, const Domain& base, complex z, int n = 4096) {
  if (!f.univalent()) throw Error(Errc::map_not_univalent, f.name());
  if (!(f.base_domain() == base)) throw Error(Errc::invalid_parameter, f.name() + " is not based on " + base.name());
  if (!contains(base, z)) throw Error(Errc::outside_domain, base.name());
  if (f.image_domain() && f.image_domain()->has_closed_form()) {
    return boundary_distance(*f.image_domain(), f(z));
  }
  return image_boundary_distance_sampled(f, base, z, n);
}

/// Whether image_boundary_distance takes the exact route for (f, base).
inline bool closed_form_image(const AnalyticMap& f) {
  return f.image_domain() && f.image_domain()->has_closed_form();
}

/// Queries on an image domain addressed by a preimage point of its base.
inline double image_density_at_preimage(const Domain& image, complex z) {
  if (image.kind() != DomainKind::image) throw Error(Errc::invalid_parameter, "not an image domain");
  return pushforward_density(*image.image_map(), image.base(), z);
}

inline double image_delta_at_preimage(const Domain& image, complex z) {
  if (image.kind() != DomainKind::image) throw Error(Errc::invalid_parameter, "not an image domain");
  return image_boundary_distance_sampled(*image.image_map(), image.base(), z, image.image_samples());
}

}  // namespace conformal
