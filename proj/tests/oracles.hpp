#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's jet, density or solver code paths it is used to check.

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

#include "conformal/jet.hpp"
#include "conformal/map.hpp"
#include "conformal/random.hpp"

namespace conformal::oracle {

/// Derivatives 0..3 from the Cauchy integral on a circle of radius r,
/// evaluated with the periodic trapezoid rule.
inline Jet3 cauchy_jet(const std::function<complex(complex)>& f, complex z, double r, int n = 128) {
  const double pi = 3.14159265358979323846;
  std::array<complex, 4> c{};
  for (int k = 0; k < n; ++k) {
    const complex e = std::polar(1.0, 2.0 * pi * k / n);
    const complex v = f(z + r * e);
    complex ek = 1.0;
    for (int m = 0; m < 4; ++m) {
      c[m] += v / ek;
      ek *= e;
    }
  }
  const double fact[4] = {1.0, 1.0, 2.0, 6.0};
  Jet3 j;
  complex* slots[4] = {&j.f0, &j.f1, &j.f2, &j.f3};
  for (int m = 0; m < 4; ++m) *slots[m] = c[m] * fact[m] / (static_cast<double>(n) * std::pow(r, m));
  return j;
}

/// Gaussian curvature of the metric lambda |dz|, -Laplacian(log lambda) / lambda^2,
/// by a five-point stencil.
inline double curvature(const std::function<double(complex)>& lambda, complex z, double h) {
  auto l = [&](complex p) { return std::log(lambda(p)); };
  const double lap =
      (l(z + h) + l(z - h) + l(z + complex(0, h)) + l(z - complex(0, h)) - 4.0 * l(z)) / (h * h);
  const double lz = lambda(z);
  return -lap / (lz * lz);
}

/// Brute-force 16-neighbour grid Dijkstra for a weight w(z) = 1/delta(z) on
/// the square [-1,1]^2, nodes where inside(z). Endpoints must be grid nodes.
inline double grid_geodesic(const std::function<bool(complex)>& inside, const std::function<double(complex)>& weight,
                            complex from, complex to, int n) {
  const double h = 2.0 / (n - 1);
  auto node = [&](int i, int j) { return complex(-1.0 + i * h, -1.0 + j * h); };
  auto index_of = [&](complex z) {
    return static_cast<int>(std::lround((z.imag() + 1.0) / h)) * n + static_cast<int>(std::lround((z.real() + 1.0) / h));
  };
  std::vector<double> dist(static_cast<std::size_t>(n) * n, std::numeric_limits<double>::infinity());
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> q;
  const int src = index_of(from);
  const int dst = index_of(to);
  dist[src] = 0.0;
  q.emplace(0.0, src);
  static const int moves[16][2] = {{1, 0},  {-1, 0}, {0, 1},  {0, -1}, {1, 1},  {1, -1}, {-1, 1}, {-1, -1},
                                   {2, 1},  {2, -1}, {-2, 1}, {-2, -1}, {1, 2}, {1, -2}, {-1, 2}, {-1, -2}};
  while (!q.empty()) {
    auto [du, u] = q.top();
    q.pop();
    if (du > dist[u]) continue;
    if (u == dst) return du;
    const int ui = u % n, uj = u / n;
    for (const auto& m : moves) {
      const int vi = ui + m[0], vj = uj + m[1];
      if (vi < 0 || vj < 0 || vi >= n || vj >= n) continue;
      const complex a = node(ui, uj), b = node(vi, vj);
      // Simpson on the edge.
      const complex mid = 0.5 * (a + b);
      if (!inside(b) || !inside(mid)) continue;
      const double w = std::abs(b - a) * (weight(a) + 4.0 * weight(mid) + weight(b)) / 6.0;
      const int v = vj * n + vi;
      if (du + w < dist[v]) {
        dist[v] = du + w;
        q.emplace(dist[v], v);
      }
    }
  }
  return std::numeric_limits<double>::infinity();
}

/// Random catalog pair (f, g) with g mapping the disk into f's base.
struct MapPair {
  AnalyticMap f;
  AnalyticMap g;
};

inline AnalyticMap random_disk_self_map(Rng& rng) {
  switch (rng.uniform_int(0, 3)) {
    case 0: return AnalyticMap::mobius(rng.in_disk(0.9), rng.uniform(-3.2, 3.2));
    case 1: return AnalyticMap::power(rng.uniform_int(1, 4));
    case 2: return AnalyticMap::identity();
    default:
      return compose_maps(AnalyticMap::mobius(rng.in_disk(0.8), rng.uniform(-3.2, 3.2)),
                          AnalyticMap::mobius(rng.in_disk(0.8), rng.uniform(-3.2, 3.2)));
  }
}

inline MapPair random_pair(Rng& rng) {
  AnalyticMap g = random_disk_self_map(rng);
  switch (rng.uniform_int(0, 5)) {
    case 0: return {AnalyticMap::koebe(), g};
    case 1: return {AnalyticMap::cayley(), g};
    case 2: return {AnalyticMap::punctured_disk_covering(), g};
    case 3: return {AnalyticMap::power(rng.uniform_int(1, 3)), g};
    case 4: return {AnalyticMap::identity(), g};
    default: return {AnalyticMap::mobius(rng.in_disk(0.9), rng.uniform(-3.2, 3.2)), g};
  }
}

}  // namespace conformal::oracle
