#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

#include "conformal/domain.hpp"
#include "conformal/error.hpp"
#include "conformal/metrics.hpp"

namespace conformal {

struct Geodesic {
  double distance = 0.0;
  std::vector<complex> points;
  double grid_distance = 0.0;   // quadrature of the Dijkstra path
  std::vector<double> history;  // functional after each final-level sweep, starting value first
};

namespace detail {

struct GridBox {
  complex origin;  // lower-left corner
  double spacing;
  int n;
  complex node(int i, int j) const { return origin + complex(i * spacing, j * spacing); }
};

inline GridBox grid_box(const Domain& d, complex z1, complex z2, int n) {
  double lo_x, lo_y, side;
  switch (d.kind()) {
    case DomainKind::unit_disk:
    case DomainKind::punctured_disk:
    case DomainKind::slit_disk:
      lo_x = lo_y = -1.0;
      side = 2.0;
      break;
    default: {
      const double margin =
          1.5 * std::max({std::abs(z1 - z2), boundary_distance(d, z1), boundary_distance(d, z2)});
      lo_x = std::min(z1.real(), z2.real()) - margin;
      lo_y = std::min(z1.imag(), z2.imag()) - margin;
      side = std::max(std::abs(z1.real() - z2.real()), std::abs(z1.imag() - z2.imag())) + 2.0 * margin;
      break;
    }
  }
  return {complex(lo_x, lo_y), side / (n - 1), n};
}

/// Dijkstra over the 8-connected grid plus the two endpoints. Nodes within
/// half a cell of the boundary are dropped; edges must certify as inside.
inline std::vector<complex> grid_path(const Domain& d, complex z1, complex z2, int n) {
  const GridBox box = grid_box(d, z1, z2, n);
  const int cells = n * n;
  const int src = cells;
  const int dst = cells + 1;
  std::vector<complex> pos(static_cast<std::size_t>(cells + 2));
  std::vector<double> inv_delta(static_cast<std::size_t>(cells), 0.0);
  std::vector<char> valid(static_cast<std::size_t>(cells), 0);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const int id = j * n + i;
      pos[id] = box.node(i, j);
      const double delta = delta_or_zero(d, pos[id]);
      if (delta > 0.5 * box.spacing) {
        valid[id] = 1;
        inv_delta[id] = 1.0 / delta;
      }
    }
  }
  pos[src] = z1;
  pos[dst] = z2;

  auto edge_weight = [&](complex a, complex b) {
    const complex m = 0.5 * (a + b);
    return std::abs(b - a) / boundary_distance(d, m);
  };
  // Endpoint hookups, widening the search radius until something connects.
  auto hookups = [&](complex z) {
    std::vector<std::pair<int, double>> out;
    for (double radius = 2.0 * box.spacing; out.empty() && radius < 4.0 * box.spacing * n; radius *= 2.0) {
      const int ci = static_cast<int>(std::lround((z.real() - box.origin.real()) / box.spacing));
      const int cj = static_cast<int>(std::lround((z.imag() - box.origin.imag()) / box.spacing));
      const int reach = static_cast<int>(std::ceil(radius / box.spacing));
      for (int j = std::max(0, cj - reach); j <= std::min(n - 1, cj + reach); ++j) {
        for (int i = std::max(0, ci - reach); i <= std::min(n - 1, ci + reach); ++i) {
          const int id = j * n + i;
          if (!valid[id] || std::abs(pos[id] - z) > radius) continue;
          if (pos[id] == z || !segment_inside(d, z, pos[id])) continue;
          out.emplace_back(id, segment_integral(Density::quasihyperbolic, d, z, pos[id], 4));
        }
      }
    }
    return out;
  };
  const auto from_src = hookups(z1);
  std::vector<std::pair<int, double>> to_dst = hookups(z2);
  std::vector<double> dst_weight(static_cast<std::size_t>(cells), -1.0);
  for (auto [id, w] : to_dst) dst_weight[id] = w;

  std::vector<double> dist(static_cast<std::size_t>(cells + 2), std::numeric_limits<double>::infinity());
  std::vector<int> parent(static_cast<std::size_t>(cells + 2), -1);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[src] = 0.0;
  queue.emplace(0.0, src);
  if (segment_inside(d, z1, z2) && std::abs(z1 - z2) < 2.0 * box.spacing) {
    dist[dst] = segment_integral(Density::quasihyperbolic, d, z1, z2, 4);
    parent[dst] = src;
    queue.emplace(dist[dst], dst);
  }
  while (!queue.empty()) {
    const auto [du, u] = queue.top();
    queue.pop();
    if (du > dist[u]) continue;
    if (u == dst) break;
    auto relax = [&](int v, double w) {
      if (du + w < dist[v]) {
        dist[v] = du + w;
        parent[v] = u;
        queue.emplace(dist[v], v);
      }
    };
    if (u == src) {
      for (auto [v, w] : from_src) relax(v, w);
      continue;
    }
    if (dst_weight[u] >= 0.0) relax(dst, dst_weight[u]);
    const int ui = u % n;
    const int uj = u / n;
    for (int dj = -1; dj <= 1; ++dj) {
      for (int di = -1; di <= 1; ++di) {
        if (di == 0 && dj == 0) continue;
        const int vi = ui + di;
        const int vj = uj + dj;
        if (vi < 0 || vj < 0 || vi >= n || vj >= n) continue;
        const int v = vj * n + vi;
        if (!valid[v]) continue;
        if (!segment_inside(d, pos[u], pos[v])) continue;
        relax(v, edge_weight(pos[u], pos[v]));
      }
    }
  }
  if (parent[dst] < 0) throw Error(Errc::no_grid_path, "raise grid_resolution");
  std::vector<complex> path;
  for (int v = dst; v >= 0; v = parent[v]) path.push_back(pos[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

/// Resamples a polyline to `count` points equally spaced in arclength,
/// restoring original vertices wherever a chord would leave the domain.
inline std::vector<complex> resample(const Domain& d, const std::vector<complex>& path, int count) {
  std::vector<double> cum{0.0};
  for (std::size_t k = 1; k < path.size(); ++k) cum.push_back(cum.back() + std::abs(path[k] - path[k - 1]));
  const double total = cum.back();
  std::vector<complex> pts;
  std::vector<std::size_t> seg_of;  // segment index each resampled point falls in
  std::size_t seg = 1;
  for (int k = 0; k < count; ++k) {
    const double s = total * k / (count - 1);
    while (seg + 1 < path.size() && cum[seg] < s) ++seg;
    const double len = cum[seg] - cum[seg - 1];
    const double t = len > 0.0 ? std::clamp((s - cum[seg - 1]) / len, 0.0, 1.0) : 0.0;
    pts.push_back(k == count - 1 ? path.back() : path[seg - 1] + t * (path[seg] - path[seg - 1]));
    seg_of.push_back(seg);
  }
  pts.front() = path.front();
  std::vector<complex> out{pts.front()};
  for (std::size_t k = 1; k < pts.size(); ++k) {
    if (!segment_inside(d, out.back(), pts[k])) {
      for (std::size_t v = seg_of[k - 1]; v < seg_of[k]; ++v) {
        if (path[v] != out.back()) out.push_back(path[v]);
      }
    }
    if (pts[k] != out.back()) out.push_back(pts[k]);
  }
  return out;
}

class Relaxer {
 public:
  Relaxer(const Domain& d, const SolverConfig& cfg) : d_(d), cfg_(cfg) {}

  double segment(complex a, complex b) const {
    return segment_integral(Density::quasihyperbolic, d_, a, b, cfg_.quad_panels_per_segment);
  }

  double energy(const std::vector<complex>& p) const {
    double e = 0.0;
    for (std::size_t k = 1; k < p.size(); ++k) e += segment(p[k - 1], p[k]);
    return e;
  }

  /// One Gauss-Seidel sweep, moving each interior node down the gradient of
  /// its two adjacent segment integrals with a backtracking step. Every
  /// accepted move strictly lowers the energy.
  void sweep(std::vector<complex>& p, std::vector<double>& steps) const {
    for (std::size_t k = 1; k + 1 < p.size(); ++k) {
      const complex prev = p[k - 1];
      const complex next = p[k + 1];
      auto local = [&](complex x) { return segment(prev, x) + segment(x, next); };
      const double delta = boundary_distance(d_, p[k]);
      const double cap = cfg_.relax_step * delta;
      const double base = local(p[k]);
      const double h = 1e-6 * delta;
      const complex grad((local(p[k] + complex(h, 0.0)) - local(p[k] - complex(h, 0.0))) / (2.0 * h),
                         (local(p[k] + complex(0.0, h)) - local(p[k] - complex(0.0, h))) / (2.0 * h));
      const double gnorm = std::abs(grad);
      if (!(gnorm > 0.0) || !std::isfinite(gnorm)) continue;
      const complex dir = -grad / gnorm;
      double t = std::min(steps[k] > 0.0 ? steps[k] : cap, cap);
      bool moved = false;
      for (int tries = 0; tries < 12; ++tries, t *= 0.5) {
        const complex trial = p[k] + t * dir;
        if (trial == prev || trial == next) continue;
        if (!contains(d_, trial) || !segment_inside(d_, prev, trial) || !segment_inside(d_, trial, next)) continue;
        if (const double value = local(trial); value < base) {
          p[k] = trial;
          steps[k] = std::min(2.0 * t, cap);
          moved = true;
          break;
        }
      }
      if (!moved) steps[k] = t;
    }
  }

  /// Sweeps until the relative improvement drops below tolerance or the
  /// iteration budget runs out. Returns the energy after each sweep.
  std::vector<double> relax(std::vector<complex>& p) const {
    std::vector<double> history{energy(p)};
    std::vector<double> steps(p.size(), 0.0);
    for (int it = 0; it < cfg_.relax_iterations; ++it) {
      sweep(p, steps);
      history.push_back(energy(p));
      const double before = history[history.size() - 2];
      if (before - history.back() < cfg_.tolerance * before) break;
    }
    return history;
  }

 private:
  const Domain& d_;
  const SolverConfig& cfg_;
};

}  // namespace detail

/// Numerical quasihyperbolic distance and an approximate geodesic: an
/// 8-connected grid Dijkstra seeds a polyline that is then relaxed, coarse
/// to fine, against the quadrature functional. The returned distance is the
/// quadrature of an actual path in the domain, so it never undercuts the
/// infimum beyond quadrature error.
inline Geodesic quasihyperbolic_distance(const Domain& d, complex z1, complex z2, const SolverConfig& cfg = {}) {
  cfg.validate();
  if (!d.has_closed_form()) detail::undecidable(d);
  if (!contains(d, z1) || !contains(d, z2)) throw Error(Errc::outside_domain, d.name());
  Geodesic out;
  if (z1 == z2) {
    out.points = {z1};
    out.history = {0.0};
    return out;
  }
  const std::vector<complex> seed = detail::grid_path(d, z1, z2, cfg.grid_resolution);
  out.grid_distance = path_quadrature(Density::quasihyperbolic, d, Polyline(seed), cfg);

  // Coarse levels remove the long-wavelength error of the grid path cheaply.
  std::vector<int> levels{cfg.path_nodes};
  while (levels.back() > 9) levels.push_back((levels.back() + 1) / 2);
  std::reverse(levels.begin(), levels.end());

  const detail::Relaxer relaxer(d, cfg);
  std::vector<complex> path = seed;
  for (std::size_t l = 0; l < levels.size(); ++l) {
    path = detail::resample(d, path, levels[l]);
    std::vector<double> history = relaxer.relax(path);
    if (l + 1 == levels.size()) out.history = std::move(history);
  }

  out.distance = path_quadrature(Density::quasihyperbolic, d, Polyline(path), cfg);
  if (out.distance > out.grid_distance) {
    out.distance = out.grid_distance;
    path = seed;
  }
  out.points = std::move(path);
  return out;
}

}  // namespace conformal
