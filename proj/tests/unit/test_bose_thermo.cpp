#include <cmath>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <boost/math/tools/roots.hpp>
#include <gtest/gtest.h>

#include "lgbec/bose_thermo.hpp"
#include "lgbec/constants.hpp"
#include "lgbec/numerics.hpp"
#include "test_support.hpp"

using namespace lgbec;
using lgbec::testing::rel_diff;
namespace c = lgbec::constants;
using GK = boost::math::quadrature::gauss_kronrod<double, 31>;

namespace {

const double kMass = rubidium87().mass;

PowerLawTrap random_trap(std::mt19937_64& gen) {
  std::uniform_int_distribution<int> half(1, 6);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  PowerLawTrap t;
  t.alpha = 2 * half(gen);
  t.beta = 2 * half(gen);
  // coefficients chosen so that 1 uK sits at a few tens of microns
  const double kt = c::boltzmann * 1e-6;
  t.u_perp = kt / std::pow((10.0 + 40.0 * u01(gen)) * 1e-6, t.alpha);
  t.u_z = kt / std::pow((10.0 + 40.0 * u01(gen)) * 1e-6, t.beta);
  return t;
}

// Classical phase-space volume below eps divided by (2 pi hbar)^3.
// Scaling rho = r t and z = zmax s leaves two one-dimensional integrals with
// endpoint kinks, handled by tanh-sinh quadrature.
double phase_space_count(const PowerLawTrap& t, double eps) {
  boost::math::quadrature::tanh_sinh<double> ts;
  const double r = std::pow(eps / t.u_perp, 1.0 / t.alpha);
  const double h = std::pow(eps / t.u_z, 1.0 / t.beta);
  const double along_z = ts.integrate([&](double s) { return std::pow(1.0 - std::pow(s, t.beta), 1.5); }, 0.0, 1.0);
  const double radial = ts.integrate(
      [&](double x) { return x * std::pow(1.0 - std::pow(x, t.alpha), 1.5 + 1.0 / t.beta); }, 0.0, 1.0);
  const double space = 2.0 * c::pi * r * r * 2.0 * h * std::pow(2.0 * kMass * eps, 1.5) * along_z * radial;
  return space * (4.0 * c::pi / 3.0) / std::pow(2.0 * c::pi * c::hbar, 3);
}

}  // namespace

TEST(BoseThermo, ThermalWavelength) {
  const double t = 3e-7;
  EXPECT_NEAR(thermal_wavelength(t, kMass), c::planck / std::sqrt(2 * c::pi * kMass * c::boltzmann * t), 1e-20);
  const double onset = boost::math::zeta(1.5) / std::pow(thermal_wavelength(t, kMass), 3);
  EXPECT_NEAR(peak_density_onset(t, kMass), onset, 1e-14 * onset);
}

TEST(BoseThermo, StateCountMatchesPhaseSpaceQuadrature) {
  auto gen = lgbec::testing::rng(2);
  for (int k = 0; k < 6; ++k) {
    const PowerLawTrap t = random_trap(gen);
    const double eps = c::boltzmann * 5e-7;
    EXPECT_LT(rel_diff(state_count(t, eps, kMass), phase_space_count(t, eps)), 1e-8)
        << "alpha=" << t.alpha << " beta=" << t.beta;
  }
}

TEST(BoseThermo, StateCountMatchesPhaseSpaceMonteCarlo) {
  // momentum-space ball volume sampled alongside position
  auto gen = lgbec::testing::rng(3);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int k = 0; k < 4; ++k) {
    const PowerLawTrap t = random_trap(gen);
    const double eps = c::boltzmann * 5e-7;
    const double r = std::pow(eps / t.u_perp, 1.0 / t.alpha);
    const double h = std::pow(eps / t.u_z, 1.0 / t.beta);
    const double pmax = std::sqrt(2.0 * kMass * eps);
    const int samples = 2'000'000;
    int inside = 0;
    for (int s = 0; s < samples; ++s) {
      const double rho = r * std::sqrt(u01(gen));
      const double z = h * (2.0 * u01(gen) - 1.0);
      const double p = pmax * std::cbrt(u01(gen));
      if (p * p / (2.0 * kMass) + potential(t, rho, z) <= eps) ++inside;
    }
    const double box = c::pi * r * r * 2.0 * h * (4.0 * c::pi / 3.0) * pmax * pmax * pmax;
    const double mc = box * inside / samples / std::pow(2.0 * c::pi * c::hbar, 3);
    EXPECT_LT(rel_diff(state_count(t, eps, kMass), mc), 1e-2);
  }
}

TEST(BoseThermo, DensityOfStatesIsDerivativeOfCount) {
  const PowerLawTrap t{4, 6, 1e-10, 1e-2};
  for (double e : {1e-31, 1e-30, 1e-29}) {
    const double h = 1e-5 * e;
    const double fd = (state_count(t, e + h, kMass) - state_count(t, e - h, kMass)) / (2 * h);
    EXPECT_NEAR(density_of_states(t, e, kMass), fd, 1e-8 * fd);
  }
}

TEST(BoseThermo, EquationOfStateMatchesBoseIntegral) {
  const PowerLawTrap t{2, 8, 2e-20, 5e+10};
  const double temperature = 2e-7;
  const double kt = c::boltzmann * temperature;
  for (double mu_over_kt : {-3.0, -0.5, -1e-3}) {
    const double mu = mu_over_kt * kt;
    auto f = [&](double x) {  // x = eps / kT
      return density_of_states(t, x * kt, kMass) * kt / std::expm1(x - mu_over_kt);
    };
    // the semiclassical integral plus the separately counted ground level
    const double quad = GK::integrate(f, 0.0, 5.0, 20, 1e-13) + GK::integrate(f, 5.0, 200.0, 20, 1e-13) +
                        1.0 / std::expm1(-mu_over_kt);
    EXPECT_NEAR(eos_total_number(t, temperature, mu, kMass), quad, 1e-9 * quad);
  }
}

TEST(BoseThermo, IdealTcMatchesEquationOfStateBisection) {
  auto gen = lgbec::testing::rng(4);
  std::uniform_real_distribution<double> logn(4.0, 8.0);
  for (int k = 0; k < 20; ++k) {
    const PowerLawTrap t = random_trap(gen);
    const double n = std::pow(10.0, logn(gen));
    auto f = [&](double log_t) { return std::log(eos_total_number(t, std::exp(log_t), 0.0, kMass) / n); };
    boost::math::tools::eps_tolerance<double> tol(50);
    std::uintmax_t iters = 200;
    const auto [lo, hi] = boost::math::tools::bisect(f, std::log(1e-12), std::log(1e-3), tol, iters);
    const double t_root = std::exp(0.5 * (lo + hi));
    EXPECT_LT(rel_diff(tc_ideal(t, n, kMass), t_root), 1e-8) << "trap " << k;
  }
}

TEST(BoseThermo, ExponentLaw) {
  std::vector<double> ns;
  for (double e = 4.0; e <= 8.0; e += 0.5) ns.push_back(std::pow(10.0, e));
  for (auto t : {PowerLawTrap{2, 2, 1e-19, 1e-19}, PowerLawTrap{12, 12, 1e30, 1e30}, PowerLawTrap{2, 8, 1e-19, 1e20}}) {
    std::vector<double> tc;
    for (double n : ns) tc.push_back(tc_ideal(t, n, kMass));
    EXPECT_NEAR(numerics::log_log_slope(ns, tc), 1.0 / (t.eta() + 1.0), 1e-10);
  }
}

TEST(BoseThermo, ConfigurationsAgreeAtEllOne) {
  const double a = tc_ideal(lgbec::testing::working_config(ConfigKind::OneD_LG, 1).trap, 1e6, kMass);
  const double b = tc_ideal(lgbec::testing::working_config(ConfigKind::TwoD_LG, 1).trap, 1e6, kMass);
  const double d = tc_ideal(lgbec::testing::working_config(ConfigKind::ThreeD_LG, 1).trap, 1e6, kMass);
  EXPECT_NEAR(a, d, 1e-12 * d);
  EXPECT_NEAR(b, d, 1e-12 * d);
}

TEST(BoseThermo, CoefficientTableParsing) {
  const auto c3 = TcCorrectionCoefficients::parse("# eta D1 D1'\n1.0 -5 0\n0.5 -6 6\n2.0 -3 0\n");
  EXPECT_FALSE(c3.has_d2());
  EXPECT_EQ(c3.rows().front().eta, 0.5);  // sorted
  const auto r = c3.at(0.75);
  EXPECT_DOUBLE_EQ(r.d1, -5.5);
  EXPECT_DOUBLE_EQ(r.d1_prime, 3.0);
  EXPECT_DOUBLE_EQ(r.d2, 0.0);
  EXPECT_DOUBLE_EQ(c3.at(2.0).d1, -3.0);
  EXPECT_THROW((void)c3.at(2.5), std::out_of_range);
  EXPECT_THROW((void)c3.at(0.4), std::out_of_range);

  auto c4 = TcCorrectionCoefficients::parse("0.5 -6 6 1\n1.0 -5 0 3\n");
  EXPECT_TRUE(c4.has_d2());
  EXPECT_DOUBLE_EQ(c4.at(0.75).d2, 2.0);
  c4.include_d2 = false;
  EXPECT_DOUBLE_EQ(c4.at(0.75).d2, 0.0);
  EXPECT_THROW(TcCorrectionCoefficients::parse("0.5 -6\n"), std::invalid_argument);
  EXPECT_THROW(TcCorrectionCoefficients::parse("0.5 -6 6 x\n"), std::invalid_argument);
}

TEST(BoseThermo, ShippedTableCoversWorkingPoints) {
  const auto& table = TcCorrectionCoefficients::shipped();
  EXPECT_TRUE(table.has_d2());
  for (auto kind : {ConfigKind::OneD_LG, ConfigKind::TwoD_LG, ConfigKind::ThreeD_LG})
    for (int ell = 1; ell <= 8; ++ell) {
      const double eta = lgbec::testing::working_config(kind, ell).trap.eta();
      EXPECT_NO_THROW((void)table.at(eta)) << "eta=" << eta;
      EXPECT_LT(table.at(eta).d1, 0.0);
    }
}

TEST(BoseThermo, InteractingTcFollowsTable) {
  const AtomSpecies rb = rubidium87();
  const auto& table = TcCorrectionCoefficients::shipped();
  for (int ell : {1, 3, 6}) {
    const auto trap = lgbec::testing::working_config(ConfigKind::ThreeD_LG, ell).trap;
    const auto b = tc_breakdown(trap, 1e6, rb, table);
    const double tc0 = tc_ideal(trap, 1e6, rb.mass);
    const double q = rb.a_s / thermal_wavelength(tc0, rb.mass);
    const auto row = table.at(trap.eta());
    EXPECT_NEAR(b.tc0, tc0, 1e-15);
    EXPECT_NEAR(b.q, q, 1e-14);
    const double expected = tc0 * (1 + row.d1 * q + row.d1_prime * std::pow(q, 2 * trap.eta()) + row.d2 * q * q);
    EXPECT_NEAR(b.tc, expected, 1e-12 * expected);
    EXPECT_LT(b.tc, b.tc0);
    EXPECT_DOUBLE_EQ(tc_interacting(trap, 1e6, rb, table), b.tc);
  }
  const auto trap = lgbec::testing::working_config(ConfigKind::ThreeD_LG, 3).trap;
  const auto zero = tc_breakdown(trap, 1e6, rb, TcCorrectionCoefficients::zero());
  EXPECT_DOUBLE_EQ(zero.tc, zero.tc0);
  EXPECT_EQ(tc_breakdown(trap, 1e6, rb.with_scattering_length(0.0), table).tc, zero.tc0);
}

TEST(BoseThermo, OutOfRegimeIsReported) {
  const AtomSpecies strong = rubidium87().with_scattering_length(60e-9);
  const auto trap = lgbec::testing::working_config(ConfigKind::ThreeD_LG, 2).trap;
  try {
    (void)tc_interacting(trap, 1e6, strong, TcCorrectionCoefficients::shipped());
    FAIL() << "expected OutOfRegimeError";
  } catch (const OutOfRegimeError& e) {
    EXPECT_GT(e.q(), kMaxPerturbativeQ);
  }
}
