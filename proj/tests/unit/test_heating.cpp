#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gtest/gtest.h>

#include "lgbec/bose_thermo.hpp"
#include "lgbec/constants.hpp"
#include "lgbec/heating.hpp"
#include "lgbec/special_functions.hpp"
#include "test_support.hpp"

using namespace lgbec;
using lgbec::testing::rel_diff;
namespace c = lgbec::constants;
using GK = boost::math::quadrature::gauss_kronrod<double, 41>;

namespace {

const double kDelta = c::two_pi * 10e12;

struct Setup {
  TrapConfiguration cfg;
  LGBeam beam;
};

Setup setup(int ell) {
  const auto base = lgbec::testing::working_config(ConfigKind::ThreeD_LG, ell);
  const auto cfg = realize_beams(base, 5.0, kDelta, 760.4e-9, rubidium87());
  return {cfg, cfg.beams.front().beam};
}

// Thermal-density-weighted average of the near-axis intensity by nested
// adaptive quadrature in physical coordinates.
double oracle_intensity(const ThermalCloud& cloud, const LGBeam& b) {
  const PowerLawTrap& t = cloud.trap;
  const double kt = c::boltzmann * cloud.temperature;
  const double cut = -cloud.mu + 50.0 * kt;
  const double r_max = std::pow(cut / t.u_perp, 1.0 / t.alpha);
  const double z_max = std::pow(cut / t.u_z, 1.0 / t.beta);
  auto density = [&](double rho, double z) { return bose_g_exp(1.5, (potential(t, rho, z) - cloud.mu) / kt); };
  auto near_axis = [&](double rho) {
    return 2.0 * b.power / (c::pi * std::tgamma(b.ell + 1.0) * b.waist * b.waist) *
           std::pow(2.0 * rho * rho / (b.waist * b.waist), b.ell);
  };
  double num = 0.0;
  double den = 0.0;
  for (int pass = 0; pass < 2; ++pass) {
    auto outer = [&](double rho) {
      auto inner = [&](double z) { return density(rho, z); };
      const double col = GK::integrate(inner, 0.0, z_max, 8, 1e-9);
      return rho * col * (pass == 0 ? near_axis(rho) : 1.0);
    };
    (pass == 0 ? num : den) = GK::integrate(outer, 0.0, r_max, 8, 1e-9);
  }
  return num / den;
}

}  // namespace

TEST(Heating, ThermalChemicalPotential) {
  const auto s = setup(3);
  const double n = 1e6;
  const double temperature = 1e-6;
  const double mu = thermal_mu(s.cfg.trap, n, temperature, rubidium87().mass);
  EXPECT_LT(mu, 0.0);
  EXPECT_NEAR(eos_total_number(s.cfg.trap, temperature, mu, rubidium87().mass), n, 1e-9 * n);
  EXPECT_THROW(thermal_mu(s.cfg.trap, n, 1e-8, rubidium87().mass), std::domain_error);
}

TEST(Heating, ClosedFormMatchesQuadratureGrid) {
  const AtomSpecies rb = rubidium87();
  for (int ell : {1, 3, 6}) {
    const auto s = setup(ell);
    const double tc = tc_ideal(s.cfg.trap, 1e6, rb.mass);
    for (double t_ratio : {1.3, 2.0, 3.0}) {
      for (double n : {3e5, 1e6}) {
        const auto cloud = make_thermal_cloud(s.cfg.trap, n, t_ratio * tc * std::pow(n / 1e6, 1.0 / (s.cfg.trap.eta() + 1)), rb.mass);
        const double closed = average_intensity_3dlg(cloud, s.beam, rb);
        const double quad = oracle_intensity(cloud, s.beam);
        EXPECT_LT(rel_diff(closed, quad), 5e-3) << "ell=" << ell << " T/Tc=" << t_ratio << " N=" << n;
        EXPECT_LT(rel_diff(average_intensity_quadrature(cloud, s.beam), quad), 1e-6);
      }
    }
  }
}

TEST(Heating, PrintedPrefactorDiffersByThreePi) {
  const auto s = setup(2);
  const auto cloud = make_thermal_cloud(s.cfg.trap, 1e6, 1e-6, rubidium87().mass);
  const double ratio = average_intensity_3dlg_printed_prefactor(cloud, s.beam, rubidium87()) /
                       average_intensity_3dlg(cloud, s.beam, rubidium87());
  EXPECT_NEAR(ratio, 3.0 * c::pi, 1e-12);
}

TEST(Heating, RequiresMatchingConfiguration) {
  const auto s = setup(2);
  const auto cloud = make_thermal_cloud(s.cfg.trap, 1e6, 1e-6, rubidium87().mass);
  LGBeam other = s.beam;
  other.waist *= 1.1;
  EXPECT_THROW(average_intensity_3dlg(cloud, other, rubidium87()), std::invalid_argument);
  other = setup(3).beam;
  EXPECT_THROW(average_intensity_3dlg(cloud, other, rubidium87()), std::invalid_argument);
}

TEST(Heating, ScatteringRateFormula) {
  const AtomSpecies rb = rubidium87();
  const double g = rb.gamma_s;
  for (double i : {0.0, 10.0, 1e4, 1e8}) {
    const double expected = g / 2.0 * (i / rb.i_sat) / (1.0 + i / rb.i_sat + 4.0 * kDelta * kDelta / (g * g));
    EXPECT_NEAR(scattering_rate(i, rb, kDelta), expected, 1e-12 * std::max(expected, 1e-30));
  }
  EXPECT_EQ(scattering_rate(0.0, rb, kDelta), 0.0);
  double last = 1e300;
  for (double d = 1e9; d < 1e14; d *= 3) {
    const double r = scattering_rate(1e4, rb, c::two_pi * d);
    EXPECT_LT(r, last);
    last = r;
  }
  EXPECT_THROW(scattering_rate(1.0, rb, -1.0), std::invalid_argument);
}

TEST(Heating, RecoilAndHeating) {
  const AtomSpecies rb = rubidium87();
  const double k = c::two_pi / rb.lambda0;
  const double t_rec = c::hbar * c::hbar * k * k / (rb.mass * c::boltzmann);
  EXPECT_NEAR(recoil_temperature(rb), t_rec, 1e-15 * t_rec);
  EXPECT_NEAR(heating_rate(3.0, rb), 2.0 / 3.0 * t_rec * 3.0, 1e-18);
  EXPECT_EQ(heating_rate(0.0, rb), 0.0);
}

TEST(Heating, RateDecreasesWithEll) {
  const AtomSpecies rb = rubidium87();
  double last = 1e300;
  for (int ell = 1; ell <= 6; ++ell) {
    const auto s = setup(ell);
    const auto cloud = make_thermal_cloud(s.cfg.trap, 1e6, 1e-6, rb.mass);
    const double r = scattering_rate(average_intensity_3dlg(cloud, s.beam, rb), rb, kDelta);
    EXPECT_LT(r, last) << ell;
    last = r;
    EXPECT_TRUE(heating_warnings(cloud, s.beam, rb).empty()) << ell;
  }
}

TEST(Heating, WarningsFire) {
  const AtomSpecies rb = rubidium87();
  const auto s = setup(1);
  const auto hot = make_thermal_cloud(s.cfg.trap, 1e6, 2e-5, rb.mass);
  EXPECT_FALSE(heating_warnings(hot, s.beam, rb).empty());
}
