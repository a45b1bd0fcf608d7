#include <gtest/gtest.h>

#include "conformal/domain.hpp"
#include "conformal/map.hpp"
#include "conformal/random.hpp"
#include "oracles.hpp"

using namespace conformal;

namespace {

constexpr complex I{0.0, 1.0};

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::invalid_parameter;
}

}  // namespace

TEST(Catalog, KoebeJetAtOrigin) {
  EXPECT_EQ(AnalyticMap::koebe().eval_jet(0.0), (Jet3{0.0, 1.0, 4.0, 18.0}));
}

TEST(Catalog, KoebeDerivativeOnAxis) {
  const Jet3 j = AnalyticMap::koebe().eval_jet(0.5);
  EXPECT_NEAR(j.f1.real(), 12.0, 1e-12);
  EXPECT_EQ(j.f1.imag(), 0.0);
}

TEST(Catalog, IdentityJet) {
  Rng rng(1);
  for (int k = 0; k < 20; ++k) {
    const complex z = rng.in_disk(0.99);
    EXPECT_EQ(AnalyticMap::identity().eval_jet(z), Jet3::identity(z));
    EXPECT_EQ(AnalyticMap::mobius(0.0, 0.0).eval_jet(z), Jet3::identity(z));
  }
}

TEST(Catalog, PuncturedCoveringAtOrigin) {
  EXPECT_NEAR(AnalyticMap::punctured_disk_covering()(0.0).real(), 0.3678794, 1e-7);
  EXPECT_NEAR(std::abs(AnalyticMap::punctured_disk_covering().eval_jet(0.0).f1), 2.0 * std::exp(-1.0), 1e-15);
}

TEST(Catalog, LogSlitAtOneHalf) {
  const Jet3 j = AnalyticMap::log_slit(0.0, 1.0).eval_jet(0.5);
  EXPECT_NEAR(j.f0.real(), -0.6931472, 1e-7);
  EXPECT_NEAR(std::abs(j.f1 - 2.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(j.f2 + 4.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(j.f3 - 16.0), 0.0, 1e-13);
}

TEST(Catalog, LogSlitScaleAndCenter) {
  const complex c(2.0, -1.0);
  const complex zeta0(0.2, 0.1);
  const AnalyticMap f = AnalyticMap::log_slit(zeta0, c);
  const complex z = zeta0 + complex(0.3, 0.2);
  EXPECT_NEAR(std::abs(f(z) - c * std::log(z - zeta0)), 0.0, 1e-14);
  EXPECT_TRUE(f.univalent());
  // Off the slit base the map is still evaluable but not univalent.
  EXPECT_FALSE(AnalyticMap::log_slit(0.0, 1.0, Domain::punctured_disk()).univalent());
  EXPECT_EQ(code_of([&] { AnalyticMap::log_slit(0.0, 1.0, Domain::punctured_disk()).eval_jet(-0.5); }), Errc::branch_cut);
}

TEST(Catalog, InvalidParameters) {
  EXPECT_EQ(code_of([] { AnalyticMap::mobius(1.0, 0.0); }), Errc::invalid_parameter);
  EXPECT_EQ(code_of([] { AnalyticMap::mobius(complex(0.8, 0.8), 0.0); }), Errc::invalid_parameter);
  EXPECT_EQ(code_of([] { AnalyticMap::power(0); }), Errc::invalid_parameter);
  EXPECT_EQ(code_of([] { AnalyticMap::log_slit(0.0, 0.0); }), Errc::invalid_parameter);
  EXPECT_EQ(code_of([] { AnalyticMap::koebe().eval_jet(1.5); }), Errc::outside_domain);
}

TEST(Catalog, LocallyUnivalentOnSamples) {
  Rng rng(2);
  const AnalyticMap maps[] = {AnalyticMap::koebe(), AnalyticMap::cayley(), AnalyticMap::mobius(complex(0.3, 0.4), 1.0),
                              AnalyticMap::punctured_disk_covering(), AnalyticMap::identity()};
  for (const auto& f : maps) {
    for (int k = 0; k < 10000; ++k) {
      const complex z = rng.in_disk(0.999);
      EXPECT_TRUE(f.eval_jet(z).locally_univalent()) << f.name();
    }
  }
}

TEST(Catalog, CoveringRelation) {
  // p(z) = exp((z+1)/(z-1)) maps into the punctured disk and is invariant
  // under the deck transformation generated by shifting its exponent by 2 pi i.
  Rng rng(3);
  const AnalyticMap p = AnalyticMap::punctured_disk_covering();
  for (int k = 0; k < 1000; ++k) {
    const complex z = rng.in_disk(0.95);
    const complex w = p(z);
    EXPECT_TRUE(contains(Domain::punctured_disk(), w));
    const complex q = (z + 1.0) / (z - 1.0) + 2.0 * elementary::pi * I;
    const complex z2 = (q + 1.0) / (q - 1.0);  // inverse of the exponent map
    ASSERT_LT(std::abs(z2), 1.0);
    EXPECT_LT(std::abs(p(z2) - w), 1e-12 * std::max(1.0, std::abs(w)));
  }
}

TEST(Catalog, MobiusMapsCirclesToCircles) {
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const AnalyticMap m = AnalyticMap::mobius(rng.in_disk(0.9), rng.uniform(-3.0, 3.0));
    const complex c = rng.in_disk(0.3);
    const double r = 0.2;
    std::vector<complex> img;
    for (int k = 0; k < 3; ++k) img.push_back(m(c + std::polar(r, 2.0 * elementary::pi * k / 3.0)));
    // Circumcentre of the first three images; all further images must lie on it.
    const complex a = img[0], b = img[1], d = img[2];
    const complex ba = b - a, da = d - a;
    const complex centre = a + (std::norm(ba) * da - std::norm(da) * ba) /
                                   (std::conj(ba) * da - ba * std::conj(da));
    const double radius = std::abs(a - centre);
    for (int k = 0; k < 16; ++k) {
      const complex w = m(c + std::polar(r, 0.1 + 2.0 * elementary::pi * k / 16.0));
      EXPECT_NEAR(std::abs(w - centre), radius, 1e-10);
    }
    // The unit circle goes to itself.
    EXPECT_NEAR(std::abs(m.eval_boundary(std::polar(1.0, rng.uniform(-3.0, 3.0)))), 1.0, 1e-12);
  }
}

TEST(Catalog, KoebeMapsIntervalIncreasingly) {
  const AnalyticMap k = AnalyticMap::koebe();
  double last = -1.0;
  for (int i = -99; i <= 99; ++i) {
    const double x = i / 100.0;
    const complex w = k(x);
    EXPECT_EQ(w.imag(), 0.0);
    EXPECT_GT(w.real(), last);
    EXPECT_GT(w.real(), -0.25);
    last = w.real();
  }
  EXPECT_NEAR(k.eval_boundary(-1.0).real(), -0.25, 1e-15);
}

TEST(Catalog, BoundaryExtension) {
  EXPECT_EQ(code_of([] { AnalyticMap::punctured_disk_covering().eval_boundary(1.0); }),
            Errc::boundary_extension_undefined);
  EXPECT_EQ(code_of([] { AnalyticMap::koebe().eval_boundary(1.0); }), Errc::boundary_extension_undefined);
  EXPECT_NEAR(std::abs(AnalyticMap::cayley().eval_boundary(I)), 1.0, 1e-15);
  EXPECT_NEAR(AnalyticMap::cayley().eval_boundary(I).imag(), 0.0, 1e-15);
}

TEST(Catalog, Names) {
  EXPECT_EQ(AnalyticMap::koebe().name(), "koebe");
  EXPECT_EQ(AnalyticMap::mobius(0.3, 0.0).name(), "mobius:0.3,0");
  EXPECT_EQ(AnalyticMap::power(3).name(), "power:3");
  EXPECT_EQ(AnalyticMap::log_slit(0.0, 1.0).name(), "logslit:0,1");
  EXPECT_EQ(compose_maps(AnalyticMap::cayley(), AnalyticMap::mobius(0.5, 0.0)).name(), "cayley@mobius:0.5,0");
}

TEST(Compose, IdentityLaw) {
  const AnalyticMap f = compose_maps(AnalyticMap::identity(Domain::koebe_slit_plane()), AnalyticMap::koebe());
  Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    const complex z = rng.in_disk(0.95);
    const Jet3 a = f.eval_jet(z);
    const Jet3 b = AnalyticMap::koebe().eval_jet(z);
    EXPECT_LT(std::abs(a.f0 - b.f0) + std::abs(a.f1 - b.f1) + std::abs(a.f2 - b.f2) + std::abs(a.f3 - b.f3), 1e-14 * (1.0 + std::abs(b.f3)));
  }
}

TEST(Compose, CayleyAfterMobius) {
  const AnalyticMap f = compose_maps(AnalyticMap::cayley(), AnalyticMap::mobius(0.5, 0.0));
  EXPECT_NEAR(std::abs(f(0.0) - I / 3.0), 0.0, 1e-15);
  ASSERT_TRUE(f.image_domain().has_value());
  EXPECT_EQ(*f.image_domain(), Domain::upper_half_plane());
  EXPECT_TRUE(f.univalent());
}

TEST(Compose, IncompatibleRanges) {
  // The half-plane is not inside the disk, so mobius after cayley is rejected.
  EXPECT_EQ(code_of([] { compose_maps(AnalyticMap::mobius(0.1, 0.0), AnalyticMap::cayley()); }),
            Errc::composition_incompatible);
}

TEST(Compose, RandomPairsMatchNestedEvaluation) {
  Rng rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto [f, g] = oracle::random_pair(rng);
    const AnalyticMap fg = compose_maps(f, g);
    const complex z = rng.in_disk(0.9);
    const complex direct = f(g(z));
    EXPECT_LT(std::abs(fg(z) - direct), 1e-13 * std::max(1.0, std::abs(direct))) << fg.name();
  }
}

TEST(Compose, ImageDomainRequiresUnivalentMap) {
  auto p = std::make_shared<const AnalyticMap>(AnalyticMap::power(2));
  EXPECT_EQ(code_of([&] { Domain::image(p, Domain::unit_disk(), 256); }), Errc::map_not_univalent);
  auto k = std::make_shared<const AnalyticMap>(AnalyticMap::koebe());
  EXPECT_EQ(code_of([&] { Domain::image(k, Domain::unit_disk(), 16); }), Errc::invalid_parameter);
  EXPECT_NO_THROW(Domain::image(k, Domain::unit_disk(), 256));
}
