// The reciprocal map on the punctured disk: its distortion ratio over lambda
// grows without bound toward the puncture, while the uniformity estimate
// 1/(lambda delta) grows the same way.

#include <cmath>
#include <cstdio>

#include "conformal/verify.hpp"

int main() {
  using namespace conformal;
  const Domain pdisk = Domain::punctured_disk();
  std::printf("%8s %16s %16s\n", "-log|z|", "ratio/lambda", "1/(lambda*delta)");
  for (double t : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0}) {
    const complex z = std::exp(-t);
    std::printf("%8.1f %16.7f %16.7f\n", t, punctured_disk_ratio(z),
                1.0 / (hyperbolic_density(pdisk, z) * boundary_distance(pdisk, z)));
  }
}
