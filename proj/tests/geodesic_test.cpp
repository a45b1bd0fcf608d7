#include <gtest/gtest.h>

#include "conformal/geodesic.hpp"
#include "conformal/random.hpp"
#include "oracles.hpp"

using namespace conformal;

namespace {

constexpr complex I{0.0, 1.0};

bool non_increasing(const std::vector<double>& h) {
  for (std::size_t k = 1; k < h.size(); ++k) {
    if (h[k] > h[k - 1]) return false;
  }
  return true;
}

}  // namespace

TEST(Geodesic, DiskRadialSegment) {
  const Geodesic g = quasihyperbolic_distance(Domain::unit_disk(), 0.0, 0.5);
  EXPECT_NEAR(g.distance, std::log(2.0), 1e-4);
  EXPECT_TRUE(non_increasing(g.history));
  EXPECT_LE(g.distance, g.grid_distance);
  EXPECT_EQ(g.points.front(), complex(0.0));
  EXPECT_EQ(g.points.back(), complex(0.5));
}

TEST(Geodesic, CoincidentEndpoints) {
  const Geodesic g = quasihyperbolic_distance(Domain::punctured_disk(), complex(0.2, 0.1), complex(0.2, 0.1));
  EXPECT_EQ(g.distance, 0.0);
  EXPECT_EQ(g.points.size(), 1u);
}

TEST(Geodesic, PuncturedDiskRay) {
  const Geodesic g = quasihyperbolic_distance(Domain::punctured_disk(), 0.25, 0.5);
  EXPECT_NEAR(g.distance, std::log(2.0), 1e-3);
  EXPECT_TRUE(non_increasing(g.history));

  const Domain d = Domain::punctured_disk();
  const double fine = oracle::grid_geodesic(
      [&](complex z) { return contains(d, z); }, [&](complex z) { return 1.0 / boundary_distance(d, z); }, 0.25, 0.5, 801);
  EXPECT_NEAR(fine, std::log(2.0), 1e-3);
  EXPECT_NEAR(g.distance, fine, 1e-3);
}

TEST(Geodesic, AgainstFineGridOracleOffAxis) {
  // A 16-neighbour grid path is an upper bound up to quadrature, with a few
  // percent of direction bias.
  const Domain d = Domain::punctured_disk();
  const complex a(0.25, 0.0), b(-0.25, 0.25);
  const double fine = oracle::grid_geodesic(
      [&](complex z) { return contains(d, z); }, [&](complex z) { return 1.0 / boundary_distance(d, z); }, a, b, 801);
  const Geodesic g = quasihyperbolic_distance(d, a, b);
  EXPECT_LE(g.distance, fine + 1e-3);
  EXPECT_GE(g.distance, fine / 1.03);
}

TEST(Geodesic, SlitIsNotCrossed) {
  const Domain d = Domain::slit_disk();
  const Geodesic g = quasihyperbolic_distance(d, complex(-0.5, 0.1), complex(-0.5, -0.1));
  for (std::size_t k = 1; k < g.points.size(); ++k) EXPECT_TRUE(segment_inside(d, g.points[k - 1], g.points[k]));
  // Any path crosses the positive axis at some x, and k(z, x) >= log(1 + |z - x| / delta(z))
  // with |z - x| >= |z| for Re z < 0.
  const double lower = 2.0 * std::log(1.0 + std::abs(complex(-0.5, 0.1)) / 0.1);
  EXPECT_GT(g.distance, lower);
  // An explicit arc around the origin is an upper bound.
  std::vector<complex> arc;
  const double r = std::abs(complex(-0.5, 0.1));
  const double t0 = std::arg(complex(-0.5, 0.1));
  for (int k = 0; k <= 256; ++k) arc.push_back(std::polar(r, t0 - k * (2.0 * t0) / 256));
  arc.back() = complex(-0.5, -0.1);
  arc.front() = complex(-0.5, 0.1);
  EXPECT_LE(g.distance, path_quadrature(Density::quasihyperbolic, d, Polyline(arc)) + 1e-6);
}

TEST(Geodesic, HalfPlaneVertical) {
  const Geodesic g = quasihyperbolic_distance(Domain::upper_half_plane(), I, 2.0 * I);
  EXPECT_NEAR(g.distance, std::log(2.0), 1e-4);
}

TEST(Geodesic, Symmetry) {
  Rng rng(41);
  const SolverConfig cfg;
  for (int k = 0; k < 6; ++k) {
    const complex a = rng.in_disk(0.8), b = rng.in_disk(0.8);
    const double ab = quasihyperbolic_distance(Domain::unit_disk(), a, b, cfg).distance;
    const double ba = quasihyperbolic_distance(Domain::unit_disk(), b, a, cfg).distance;
    EXPECT_LE(std::abs(ab - ba), 2.0 * cfg.tolerance * std::max(1.0, ab)) << a << " " << b;
  }
}

TEST(Geodesic, TriangleInequality) {
  Rng rng(42);
  const SolverConfig cfg;
  for (const Domain& d : {Domain::unit_disk(), Domain::punctured_disk()}) {
    for (int k = 0; k < 3; ++k) {
      const complex a = rng.in_disk(0.8), b = rng.in_disk(0.8), c = rng.in_disk(0.8);
      const double ac = quasihyperbolic_distance(d, a, c, cfg).distance;
      const double ab = quasihyperbolic_distance(d, a, b, cfg).distance;
      const double bc = quasihyperbolic_distance(d, b, c, cfg).distance;
      EXPECT_LE(ac, ab + bc + 3.0 * cfg.tolerance * std::max(1.0, ac)) << d.name();
    }
  }
}

TEST(Geodesic, LowerBoundAndDiskWindow) {
  Rng rng(43);
  const SolverConfig cfg;
  for (int k = 0; k < 8; ++k) {
    const complex a = rng.in_disk(0.9), b = rng.in_disk(0.9);
    const Geodesic g = quasihyperbolic_distance(Domain::unit_disk(), a, b, cfg);
    const double lower = std::abs(std::log(boundary_distance(Domain::unit_disk(), a) /
                                           boundary_distance(Domain::unit_disk(), b)));
    EXPECT_GE(g.distance, lower - cfg.tolerance);
    const double h = hyperbolic_distance_disk(a, b);
    EXPECT_GE(g.distance, h * (1.0 - 1e-6));
    EXPECT_LE(g.distance, 4.0 * h + 4.0 * cfg.tolerance);
    EXPECT_TRUE(non_increasing(g.history));
  }
}

TEST(Geodesic, KoebeSlitPlane) {
  // k(0) = 0 and k(1/2) = 2 lie on the positive axis, where delta = x + 1/4.
  const Geodesic g = quasihyperbolic_distance(Domain::koebe_slit_plane(), 0.0, 2.0);
  EXPECT_NEAR(g.distance, std::log(9.0), 1e-4);
}

TEST(Geodesic, OutsidePointsRejected) {
  EXPECT_THROW(quasihyperbolic_distance(Domain::unit_disk(), 0.0, 1.2), Error);
  SolverConfig bad;
  bad.grid_resolution = 1;
  EXPECT_THROW(quasihyperbolic_distance(Domain::unit_disk(), 0.0, 0.2, bad), Error);
}
