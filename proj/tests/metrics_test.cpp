#include <gtest/gtest.h>

#include "conformal/map.hpp"
#include "conformal/metrics.hpp"
#include "conformal/random.hpp"

using namespace conformal;

namespace {

constexpr complex I{0.0, 1.0};

}  // namespace

TEST(Polyline, Invariants) {
  EXPECT_THROW(Polyline({0.0}), Error);
  EXPECT_THROW(Polyline({0.1, 0.1}), Error);
  EXPECT_NO_THROW(Polyline({0.0, 0.1, 0.0}));
  EXPECT_DOUBLE_EQ(Polyline({0.0, 3.0, complex(3.0, 4.0)}).euclidean_length(), 7.0);
}

TEST(Quadrature, RadialSegmentsInDisk) {
  const Polyline radial({0.0, 0.5});
  SolverConfig cfg;
  cfg.tolerance = 1e-12;
  EXPECT_NEAR(path_quadrature(Density::quasihyperbolic, Domain::unit_disk(), radial, cfg), std::log(2.0), 1e-9);
  EXPECT_NEAR(path_quadrature(Density::hyperbolic, Domain::unit_disk(), radial, cfg), std::atanh(0.5), 1e-9);
  EXPECT_NEAR(path_quadrature(Density::hyperbolic, Domain::unit_disk(), radial), 0.549306144, 1e-6);
}

TEST(Quadrature, SplittingDoesNotChangeValue) {
  const Polyline one({complex(-0.3, 0.2), complex(0.6, -0.1)});
  std::vector<complex> pts;
  for (int k = 0; k <= 7; ++k) pts.push_back(complex(-0.3, 0.2) + (k / 7.0) * complex(0.9, -0.3));
  const Polyline many(pts);
  SolverConfig cfg;
  cfg.tolerance = 1e-12;
  EXPECT_NEAR(path_quadrature(Density::hyperbolic, Domain::unit_disk(), one, cfg),
              path_quadrature(Density::hyperbolic, Domain::unit_disk(), many, cfg), 1e-11);
}

TEST(Quadrature, HalfPlaneVerticalSegment) {
  // integral of 1/y from 1 to 3, and of 1/(2y).
  const Polyline up({I, 3.0 * I});
  SolverConfig cfg;
  cfg.tolerance = 1e-12;
  EXPECT_NEAR(path_quadrature(Density::quasihyperbolic, Domain::upper_half_plane(), up, cfg), std::log(3.0), 1e-10);
  EXPECT_NEAR(path_quadrature(Density::hyperbolic, Domain::upper_half_plane(), up, cfg), 0.5 * std::log(3.0), 1e-10);
}

TEST(Quadrature, PathLeavingDomainIsRejected) {
  const Polyline across({complex(-0.5, 0.2), complex(-0.5, -0.2)});
  try {
    path_quadrature(Density::quasihyperbolic, Domain::slit_disk(), across);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::path_exits_domain);
  }
  EXPECT_THROW(path_quadrature(Density::quasihyperbolic, Domain::unit_disk(), Polyline({0.0, 1.5})), Error);
  EXPECT_TRUE(segment_inside(Domain::slit_disk(), complex(0.5, 0.2), complex(0.5, -0.2)));
  EXPECT_FALSE(segment_inside(Domain::punctured_disk(), -0.5, 0.5));
}

TEST(HyperbolicDistance, DiskExamples) {
  EXPECT_EQ(hyperbolic_distance_disk(0.0, 0.0), 0.0);
  EXPECT_NEAR(hyperbolic_distance_disk(0.0, 0.5), 0.5 * std::log(3.0), 1e-15);
  EXPECT_NEAR(hyperbolic_distance_disk(0.0, 0.5), 0.549306144, 1e-9);
}

TEST(HyperbolicDistance, MobiusInvariance) {
  Rng rng(31);
  for (int k = 0; k < 1000; ++k) {
    const complex a = rng.in_disk(0.95), b = rng.in_disk(0.95);
    const AnalyticMap m = AnalyticMap::mobius(rng.in_disk(0.9), rng.uniform(-3.2, 3.2));
    const double h = hyperbolic_distance_disk(a, b);
    EXPECT_NEAR(hyperbolic_distance_disk(m(a), m(b)), h, 1e-12 * std::max(1.0, h));
    EXPECT_NEAR(hyperbolic_distance_via_map(m, a, b), hyperbolic_distance_disk(m(a), m(b)), 1e-12 * std::max(1.0, h));
  }
}

TEST(HyperbolicDistance, ViaMapExamples) {
  EXPECT_NEAR(hyperbolic_distance_via_map(AnalyticMap::koebe(), 0.0, 0.5), 0.5493061, 1e-7);
  EXPECT_NEAR(hyperbolic_distance(Domain::koebe_slit_plane(), 0.0, 2.0), 0.5 * std::log(3.0), 1e-12);
  Rng rng(32);
  for (int k = 0; k < 100; ++k) {
    const complex a = rng.in_disk(0.9), b = rng.in_disk(0.9);
    EXPECT_EQ(hyperbolic_distance_via_map(AnalyticMap::identity(), a, b), hyperbolic_distance_disk(a, b));
    // Pullback through the half-plane and the slit plane agrees with the disk.
    const double h = hyperbolic_distance_disk(a, b);
    EXPECT_NEAR(hyperbolic_distance(Domain::upper_half_plane(), AnalyticMap::cayley()(a), AnalyticMap::cayley()(b)), h,
                1e-9 * std::max(1.0, h));
    EXPECT_NEAR(hyperbolic_distance(Domain::koebe_slit_plane(), AnalyticMap::koebe()(a), AnalyticMap::koebe()(b)), h,
                1e-9 * std::max(1.0, h));
  }
}

TEST(HyperbolicDistance, ClosedFormMatchesGeodesicQuadrature) {
  // In the half-plane the geodesic between i and 2i is vertical.
  SolverConfig cfg;
  cfg.tolerance = 1e-12;
  EXPECT_NEAR(path_quadrature(Density::hyperbolic, Domain::upper_half_plane(), Polyline({I, 2.0 * I}), cfg),
              hyperbolic_distance(Domain::upper_half_plane(), I, 2.0 * I), 1e-10);
}

TEST(HyperbolicDistance, NotSimplyConnected) {
  try {
    hyperbolic_distance(Domain::punctured_disk(), 0.2, 0.3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::no_density_route);
  }
}
