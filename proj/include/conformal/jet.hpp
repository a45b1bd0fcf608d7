#pragma once

#include <complex>
#include <cmath>
#include <ostream>

#include "conformal/error.hpp"

namespace conformal {

using complex = std::complex<double>;

/// Value and first three raw derivatives of an analytic map at a base point.
///
/// Entries are f, f', f'', f''' (not Taylor coefficients). Order three is the
/// smallest truncation closed under composition that still carries the
/// Schwarzian.
struct Jet3 {
  complex f0{};
  complex f1{};
  complex f2{};
  complex f3{};

  static constexpr Jet3 identity(complex z) { return {z, 1.0, 0.0, 0.0}; }
  static constexpr Jet3 constant(complex c) { return {c, 0.0, 0.0, 0.0}; }

  bool finite() const noexcept {
    auto ok = [](complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); };
    return ok(f0) && ok(f1) && ok(f2) && ok(f3);
  }

  bool locally_univalent() const noexcept { return f1 != complex{0.0, 0.0}; }

  friend bool operator==(const Jet3&, const Jet3&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Jet3& j) {
  return os << "(" << j.f0 << ", " << j.f1 << ", " << j.f2 << ", " << j.f3 << ")";
}

/// Jet of outer∘inner, where outer is taken at inner.f0 (order-3 chain rule).
constexpr Jet3 compose(const Jet3& outer, const Jet3& inner) {
  const complex g1 = inner.f1;
  const complex g2 = inner.f2;
  const complex g3 = inner.f3;
  return {
      outer.f0,
      outer.f1 * g1,
      outer.f2 * g1 * g1 + outer.f1 * g2,
      outer.f3 * g1 * g1 * g1 + 3.0 * outer.f2 * g1 * g2 + outer.f1 * g3,
  };
}

constexpr Jet3 scale(complex c, const Jet3& j) { return {c * j.f0, c * j.f1, c * j.f2, c * j.f3}; }

inline void require_locally_univalent(const Jet3& j) {
  if (!j.locally_univalent()) throw Error(Errc::not_locally_univalent);
}

/// T_f = f''/f'.
inline complex pre_schwarzian(const Jet3& j) {
  require_locally_univalent(j);
  return j.f2 / j.f1;
}

/// S_f = f'''/f' - (3/2)(f''/f')^2.
inline complex schwarzian(const Jet3& j) {
  require_locally_univalent(j);
  const complex t = j.f2 / j.f1;
  return j.f3 / j.f1 - 1.5 * t * t;
}

/// Magnitude of the terms that cancel inside schwarzian(); the natural scale
/// for judging its round-off.
inline double schwarzian_scale(const Jet3& j) {
  require_locally_univalent(j);
  const double t = std::abs(j.f2 / j.f1);
  return std::abs(j.f3 / j.f1) + 1.5 * t * t;
}

}  // namespace conformal
