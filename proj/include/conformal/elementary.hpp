#pragma once

// Closed-form jets of the elementary maps used by the catalog, plus the
// explicit uniformizers behind the closed-form densities.

#include <cmath>
#include <complex>

#include "conformal/jet.hpp"

namespace conformal::elementary {

inline constexpr double pi = 3.14159265358979323846;

/// k(z) = z/(1-z)^2.
inline Jet3 koebe(complex z) {
  const complex d = 1.0 - z;
  const complex d2 = d * d;
  const complex d3 = d2 * d;
  return {z / d2, (1.0 + z) / d3, (4.0 + 2.0 * z) / (d3 * d), (18.0 + 6.0 * z) / (d3 * d2)};
}

/// Inverse of the Koebe function on C \ (-inf, -1/4].
inline complex koebe_inverse(complex w) {
  const complex s = std::sqrt(1.0 + 4.0 * w);
  return (s - 1.0) / (s + 1.0);
}

/// z -> e^{i theta}(z - a)/(1 - conj(a) z).
inline Jet3 mobius(complex a, double theta, complex z) {
  const complex rot = std::polar(1.0, theta);
  const complex ac = std::conj(a);
  const complex d = 1.0 - ac * z;
  const complex c = rot * (1.0 - std::norm(a));
  const complex d2 = d * d;
  return {rot * (z - a) / d, c / d2, 2.0 * c * ac / (d2 * d), 6.0 * c * ac * ac / (d2 * d2)};
}

/// z -> i(1+z)/(1-z), disk onto the upper half-plane.
inline Jet3 cayley(complex z) {
  constexpr complex i{0.0, 1.0};
  const complex d = 1.0 - z;
  const complex d2 = d * d;
  return {i * (1.0 + z) / d, 2.0 * i / d2, 4.0 * i / (d2 * d), 12.0 * i / (d2 * d2)};
}

/// Principal Log at u.
inline Jet3 log(complex u) {
  const complex u2 = u * u;
  return {std::log(u), 1.0 / u, -1.0 / u2, 2.0 / (u2 * u)};
}

inline Jet3 exp(complex q) {
  const complex e = std::exp(q);
  return {e, e, e, e};
}

/// Principal square root.
inline Jet3 sqrt(complex z) {
  const complex s = std::sqrt(z);
  const complex s3 = s * s * s;
  return {s, 0.5 / s, -0.25 / s3, 0.375 / (s3 * s * s)};
}

inline Jet3 power(int n, complex z) {
  auto term = [&](int k) -> complex {
    // n(n-1)...(n-k+1) z^{n-k}, zero once the falling factorial vanishes.
    double coeff = 1.0;
    for (int m = 0; m < k; ++m) coeff *= static_cast<double>(n - m);
    if (coeff == 0.0) return 0.0;
    complex p = 1.0;
    for (int m = 0; m < n - k; ++m) p *= z;
    return coeff * p;
  };
  return {term(0), term(1), term(2), term(3)};
}

/// q(z) = (z+1)/(z-1) = 1 + 2/(z-1), maps the disk onto the left half-plane.
inline Jet3 punctured_exponent(complex z) {
  const complex d = z - 1.0;
  const complex d2 = d * d;
  return {(z + 1.0) / d, -2.0 / d2, 4.0 / (d2 * d), -12.0 / (d2 * d2)};
}

/// exp((z+1)/(z-1)), the covering of the punctured disk by the disk.
inline Jet3 punctured_disk_covering(complex z) { return compose(exp(punctured_exponent(z).f0), punctured_exponent(z)); }

/// Conformal map of the slit disk D \ (-1, 0] onto the upper half-plane:
/// sqrt onto the right half-disk, rotation onto the upper half-disk,
/// (1+v)/(1-v) onto the first quadrant, then squaring.
inline Jet3 slit_disk_to_half_plane(complex z) {
  constexpr complex i{0.0, 1.0};
  const Jet3 v = scale(i, sqrt(z));
  const complex dv = 1.0 - v.f0;
  const complex dv2 = dv * dv;
  const Jet3 quadrant{(1.0 + v.f0) / dv, 2.0 / dv2, 4.0 / (dv2 * dv), 12.0 / (dv2 * dv2)};
  const Jet3 u = compose(quadrant, v);
  const Jet3 square{u.f0 * u.f0, 2.0 * u.f0, 2.0, 0.0};
  return compose(square, u);
}

}  // namespace conformal::elementary
