#include <cmath>
#include <random>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gtest/gtest.h>

#include "lgbec/constants.hpp"
#include "lgbec/lg_optics.hpp"
#include "lgbec/trap_model.hpp"
#include "test_support.hpp"

using namespace lgbec;
using lgbec::testing::rel_diff;
namespace c = lgbec::constants;

namespace {

PowerLawTrap random_trap(std::mt19937_64& gen) {
  std::uniform_int_distribution<int> half(1, 6);
  std::uniform_real_distribution<double> logu(-1.0, 1.0);
  PowerLawTrap t;
  t.alpha = 2 * half(gen);
  t.beta = 2 * half(gen);
  t.u_perp = std::pow(10.0, logu(gen));
  t.u_z = std::pow(10.0, logu(gen));
  return t;
}

// Fraction of a bounding cylinder inside V <= eps, sampled uniformly in volume.
double mc_volume(const PowerLawTrap& t, double eps, std::mt19937_64& gen, int samples) {
  const double r = std::pow(eps / t.u_perp, 1.0 / t.alpha);
  const double h = std::pow(eps / t.u_z, 1.0 / t.beta);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  int inside = 0;
  for (int k = 0; k < samples; ++k) {
    const double rho = r * std::sqrt(u01(gen));
    const double z = h * (2.0 * u01(gen) - 1.0);
    if (potential(t, rho, z) <= eps) ++inside;
  }
  return c::pi * r * r * 2.0 * h * inside / samples;
}

}  // namespace

TEST(TrapModel, VolumeMatchesMonteCarlo) {
  auto gen = lgbec::testing::rng(1);
  for (int k = 0; k < 12; ++k) {
    const PowerLawTrap t = random_trap(gen);
    const double eps = 0.7;
    const double mc = mc_volume(t, eps, gen, 2'000'000);
    EXPECT_LT(rel_diff(trap_volume(t, eps), mc), 5e-3)
        << "alpha=" << t.alpha << " beta=" << t.beta;
  }
}

TEST(TrapModel, VolumeScalesAsEpsToEtaMinusHalf) {
  PowerLawTrap t{4, 8, 2.0, 3.0};
  const double ratio = trap_volume(t, 2.0) / trap_volume(t, 1.0);
  EXPECT_NEAR(ratio, std::pow(2.0, t.eta() - 0.5), 1e-12);
}

TEST(TrapModel, ShapeExponent) {
  EXPECT_DOUBLE_EQ(shape_eta(2, 2), 2.0);
  EXPECT_DOUBLE_EQ(shape_eta(12, 12), 0.75);
  EXPECT_DOUBLE_EQ((PowerLawTrap{4, 2, 1.0, 1.0}).eta(), 1.5);
  for (int a = 2; a <= 40; a += 2)
    for (int b = 2; b <= 40; b += 2) {
      EXPECT_GE(shape_eta(a, b), 0.5);
      EXPECT_LE(shape_eta(a, b), 2.0);
    }
  EXPECT_THROW(shape_eta(3, 2), std::invalid_argument);
  EXPECT_THROW((PowerLawTrap{2, 2, -1.0, 1.0}).validate(), std::invalid_argument);
  EXPECT_THROW((PowerLawTrap{2, 0, 1.0, 1.0}).validate(), std::invalid_argument);
}

TEST(TrapModel, ThomasFermiNormalization) {
  // integral of (mu - V)/g over the condensate equals N
  const double g = 5e-51;
  const double n = 1e5;
  for (auto t : {PowerLawTrap{2, 2, 1e-19, 4e-19}, PowerLawTrap{12, 12, 1e10, 1e10}, PowerLawTrap{4, 2, 1e-4, 2e-18}}) {
    const double mu = mu_thomas_fermi(t, n, g);
    const auto hw = classical_half_widths(t, mu);
    using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
    // along z the integrand is a polynomial of degree beta <= 12: 10-point Gauss is exact
    using Gauss = boost::math::quadrature::gauss<double, 10>;
    auto inner = [&](double rho) {
      const double room = mu - t.u_perp * std::pow(rho, t.alpha);
      if (room <= 0.0) return 0.0;
      const double zmax = std::pow(room / t.u_z, 1.0 / t.beta);
      auto f = [&](double z) { return (mu - potential(t, rho, z)) / g; };
      return 2.0 * c::pi * rho * 2.0 * Gauss::integrate(f, 0.0, zmax);
    };
    const double total = GK::integrate(inner, 0.0, hw.rho, 8, 1e-11);
    EXPECT_NEAR(total, n, 1e-7 * n) << "alpha=" << t.alpha;
    EXPECT_NEAR(condensate_volume(t, n, g), trap_volume(t, mu), 1e-12 * trap_volume(t, mu));
    EXPECT_NEAR(condensate_volume_closed_form(t, n, g), condensate_volume(t, n, g),
                1e-10 * condensate_volume(t, n, g));
  }
  EXPECT_EQ(mu_thomas_fermi_or_zero(PowerLawTrap{2, 2, 1.0, 1.0}, 0.0, g), 0.0);
  EXPECT_THROW(mu_thomas_fermi(PowerLawTrap{2, 2, 1.0, 1.0}, 1e5, 0.0), std::invalid_argument);
}

TEST(TrapModel, WorkingPointConfigurations) {
  const AtomSpecies rb = rubidium87();
  const double g = interaction_strength(rb);
  for (auto kind : {ConfigKind::OneD_LG, ConfigKind::TwoD_LG, ConfigKind::ThreeD_LG}) {
    for (int ell = 1; ell <= 6; ++ell) {
      const auto cfg = lgbec::testing::working_config(kind, ell);
      const PowerLawTrap& t = cfg.trap;
      EXPECT_NEAR(condensate_volume(t, lgbec::testing::kWorkingN, g), lgbec::testing::kWorkingVc,
                  1e-9 * lgbec::testing::kWorkingVc);
      const auto hw = classical_half_widths(t, mu_thomas_fermi(t, lgbec::testing::kWorkingN, g));
      switch (kind) {
        case ConfigKind::OneD_LG:
          EXPECT_EQ(t.alpha, 2);
          EXPECT_EQ(t.beta, 2 * ell);
          EXPECT_NEAR(hw.z / hw.rho, 5.0, 1e-9);
          break;
        case ConfigKind::TwoD_LG:
          EXPECT_EQ(t.alpha, 2 * ell);
          EXPECT_EQ(t.beta, 2);
          EXPECT_NEAR(hw.rho / hw.z, 5.0, 1e-9);
          break;
        case ConfigKind::ThreeD_LG:
          EXPECT_EQ(t.alpha, 2 * ell);
          EXPECT_EQ(t.beta, 2 * ell);
          EXPECT_NEAR(hw.rho / hw.z, 1.0, 1e-9);
          break;
      }
    }
  }
}

TEST(TrapModel, ConfigurationsCoincideAtEllOne) {
  const auto a = lgbec::testing::working_config(ConfigKind::OneD_LG, 1).trap;
  const auto b = lgbec::testing::working_config(ConfigKind::TwoD_LG, 1).trap;
  const auto d = lgbec::testing::working_config(ConfigKind::ThreeD_LG, 1).trap;
  // cigar, disk and sphere share the geometric-mean frequency
  auto mean = [](const PowerLawTrap& t) { return t.u_perp * std::sqrt(t.u_z); };
  EXPECT_NEAR(mean(a), mean(d), 1e-12 * mean(d));
  EXPECT_NEAR(mean(b), mean(d), 1e-12 * mean(d));
  EXPECT_GT(a.u_perp, a.u_z);
  EXPECT_LT(b.u_perp, b.u_z);
}

TEST(TrapModel, RequiredWaistReproducesCoefficient) {
  const AtomSpecies rb = rubidium87();
  const double power = 5.0;
  const double delta = c::two_pi * 10e12;
  for (auto kind : {ConfigKind::OneD_LG, ConfigKind::TwoD_LG, ConfigKind::ThreeD_LG}) {
    for (int ell = 1; ell <= 6; ++ell) {
      const auto cfg = lgbec::testing::working_config(kind, ell);
      const auto w = required_waist(cfg, power, delta, rb);
      ASSERT_EQ(w.size(), 2u);
      EXPECT_EQ(w[0].role, BeamRole::Circular);
      EXPECT_FALSE(w[0].approximate);
      EXPECT_TRUE(w[1].approximate);
      for (const auto& bw : w) {
        LGBeam b{bw.ell, power, bw.waist, delta, 760.4e-9};
        EXPECT_NEAR(powerlaw_coefficient(b, rb), bw.coefficient, 1e-10 * bw.coefficient);
        EXPECT_NEAR(bw.ring_radius, ring_radius(b), 1e-15);
      }
      EXPECT_NEAR(w[0].coefficient, cfg.trap.u_perp, 1e-10 * cfg.trap.u_perp);
      EXPECT_NEAR(w[1].coefficient, cfg.trap.u_z, 1e-10 * cfg.trap.u_z);
      const auto real = realize_beams(cfg, power, delta, 760.4e-9, rb);
      EXPECT_EQ(power_law_beam_index(real), kind == ConfigKind::OneD_LG ? 1u : 0u);
    }
  }
}

TEST(TrapModel, ConfigKindNames) {
  EXPECT_EQ(parse_config_kind("1D_LG"), ConfigKind::OneD_LG);
  EXPECT_EQ(parse_config_kind("2D"), ConfigKind::TwoD_LG);
  EXPECT_EQ(to_string(ConfigKind::ThreeD_LG), "3D_LG");
  EXPECT_THROW(parse_config_kind("4D_LG"), std::invalid_argument);
}
