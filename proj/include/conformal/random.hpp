#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "conformal/elementary.hpp"
#include "conformal/jet.hpp"

namespace conformal {

/// Seeded generator with a portable double conversion, so sample sets are
/// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int uniform_int(int lo, int hi) { return lo + static_cast<int>(uniform() * (hi - lo + 1)); }

  /// Area-uniform point of the disk |z| < radius.
  complex in_disk(double radius = 1.0) {
    const double r = radius * std::sqrt(uniform());
    return std::polar(r, 2.0 * elementary::pi * uniform());
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace conformal
