// Prints the distortion ratio of the Koebe function along the real axis next
// to 4 lambda, and the ratio for a few disk automorphisms at the same points.

#include <cstdio>

#include "conformal/verify.hpp"

int main() {
  using namespace conformal;
  const Domain disk = Domain::unit_disk();
  const AnalyticMap k = AnalyticMap::koebe();
  const AnalyticMap m = AnalyticMap::mobius(0.3, 0.0);
  std::printf("%6s %14s %14s %14s\n", "x", "koebe/lambda", "mobius/lambda", "identity");
  for (int i = 0; i <= 9; ++i) {
    const double x = i / 10.0;
    const double lambda = hyperbolic_density(disk, x);
    std::printf("%6.2f %14.10f %14.10f %14.10f\n", x, distortion_ratio(k, disk, x) / lambda,
                distortion_ratio(m, disk, x) / lambda, distortion_ratio(AnalyticMap::identity(), disk, x) / lambda);
  }
}
