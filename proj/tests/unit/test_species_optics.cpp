#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>
#include <gtest/gtest.h>

#include "lgbec/constants.hpp"
#include "lgbec/lg_optics.hpp"
#include "lgbec/species.hpp"

using namespace lgbec;
namespace c = lgbec::constants;

TEST(Species, ShippedRubidium) {
  const AtomSpecies rb = rubidium87();
  EXPECT_EQ(rb.name, "Rb87");
  EXPECT_NEAR(rb.mass / c::atomic_mass_unit, 86.909, 1e-3);
  EXPECT_NEAR(rb.gamma_s / c::two_pi, 6.0666e6, 1.0);
  EXPECT_NEAR(rb.i_sat, 16.69, 1e-9);
  EXPECT_NEAR(rb.a_s, 5.24e-9, 1e-15);
  EXPECT_NEAR(rb.lambda0, 780.241e-9, 1e-15);
}

TEST(Species, UnitSuffixesAreEquivalent) {
  const AtomSpecies a = parse_species(
      "mass_amu = 86.909180527\n"
      "gamma_s_over_2pi_MHz = 6.0666\n"
      "i_sat_mW_per_cm2 = 1.669\n"
      "a_s_bohr = 98.98\n"
      "lambda0_m = 780.241e-9\n");
  const AtomSpecies b = parse_species(
      "mass_kg = 1.4431606e-25\n"
      "gamma_s_rad_per_s = 3.811757198e7\n"
      "i_sat_W_per_m2 = 16.69\n"
      "a_s_m = 5.23784e-9\n"
      "lambda0_nm = 780.241\n");
  EXPECT_NEAR(a.mass, b.mass, 1e-6 * b.mass);
  EXPECT_NEAR(a.gamma_s, b.gamma_s, 1e-5 * b.gamma_s);
  EXPECT_NEAR(a.i_sat, b.i_sat, 1e-12);
  EXPECT_NEAR(a.a_s, b.a_s, 1e-5 * b.a_s);
  EXPECT_NEAR(a.lambda0, b.lambda0, 1e-20);
}

TEST(Species, RejectsBadDocuments) {
  const std::string ok =
      "mass_kg = 1e-25\ngamma_s_rad_per_s = 1e7\ni_sat_W_per_m2 = 10\nlambda0_nm = 780\n";
  EXPECT_NO_THROW(parse_species(ok + "a_s_nm = 5\n"));
  EXPECT_THROW(parse_species(ok + "a_s_nm = -5\n"), std::invalid_argument);
  EXPECT_THROW(parse_species(ok + "a_s_nm = 150\n"), std::invalid_argument);
  EXPECT_THROW(parse_species(ok), std::invalid_argument);
  EXPECT_THROW(parse_species(ok + "a_s_furlong = 5\n"), std::invalid_argument);
  EXPECT_THROW(parse_species(ok + "a_s_nm = 5\ncolour = blue\n"), std::invalid_argument);
  EXPECT_THROW(load_species("/nonexistent/file.species"), std::runtime_error);
}

namespace {

LGBeam beam(int ell, double w0 = 40e-6) { return {ell, 2.0, w0, c::two_pi * 10e12, 760.4e-9}; }

}  // namespace

TEST(LGOptics, IntensityIntegratesToPower) {
  for (int ell : {1, 2, 4, 7}) {
    const LGBeam b = beam(ell);
    auto f = [&](double r) { return 2.0 * c::pi * r * intensity(b, r); };
    const double p = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, 10 * b.waist, 15, 1e-13);
    EXPECT_NEAR(p, b.power, 1e-9 * b.power) << "ell=" << ell;
  }
}

TEST(LGOptics, RingMaximum) {
  for (int ell : {1, 3, 6}) {
    const LGBeam b = beam(ell);
    // Brent pins the value of a smooth maximum; its abscissa is only good to sqrt(eps)
    auto neg = [&](double r) { return -intensity(b, r); };
    const auto best = boost::math::tools::brent_find_minima(neg, 0.05 * b.waist, 3.0 * b.waist, 50);
    EXPECT_NEAR(-best.second, peak_intensity(b), 1e-8 * peak_intensity(b)) << "ell=" << ell;
    // the abscissa from the sign change of a central-difference slope
    const double h = 1e-4 * b.waist;
    auto slope = [&](double r) { return std::log(intensity(b, r + h)) - std::log(intensity(b, r - h)); };
    double lo = 0.1 * b.waist, hi = 3.0 * b.waist;
    for (int k = 0; k < 200 && hi - lo > 1e-12 * b.waist; ++k) {
      const double mid = 0.5 * (lo + hi);
      (slope(mid) > 0.0 ? lo : hi) = mid;
    }
    EXPECT_NEAR(0.5 * (lo + hi), ring_radius(b), 1e-7 * ring_radius(b)) << "ell=" << ell;
    EXPECT_NEAR(intensity(b, ring_radius(b)), peak_intensity(b), 1e-12 * peak_intensity(b));
  }
}

TEST(LGOptics, NearAxisPowerLaw) {
  const AtomSpecies rb = rubidium87();
  for (int ell : {1, 2, 5}) {
    const LGBeam b = beam(ell);
    const double rho = 1e-4 * b.waist;
    const double ratio = dipole_potential(b, rb, rho) / std::pow(rho, 2 * ell);
    EXPECT_NEAR(ratio, powerlaw_coefficient(b, rb), 1e-7 * ratio) << "ell=" << ell;
  }
}

TEST(LGOptics, DipolePotentialScale) {
  const AtomSpecies rb = rubidium87();
  const LGBeam b = beam(2);
  const double factor = c::hbar * rb.gamma_s * rb.gamma_s / (8.0 * b.detuning * rb.i_sat);
  EXPECT_NEAR(dipole_factor(b.detuning, rb), factor, 1e-14 * factor);
  EXPECT_NEAR(barrier_height(b, rb), factor * peak_intensity(b), 1e-12 * barrier_height(b, rb));
  EXPECT_GT(dipole_potential(b, rb, ring_radius(b)), 0.0);
}

TEST(LGOptics, WaistInversionRoundTrips) {
  const AtomSpecies rb = rubidium87();
  for (int ell : {1, 3, 6}) {
    const LGBeam b = beam(ell, 37e-6);
    const double u = powerlaw_coefficient(b, rb);
    EXPECT_NEAR(waist_for_coefficient(ell, b.power, b.detuning, rb, u), b.waist, 1e-12 * b.waist);
  }
}

TEST(LGOptics, RayleighRangeAndValidation) {
  const LGBeam b = beam(1);
  EXPECT_NEAR(rayleigh_range(b), c::pi * b.waist * b.waist / b.wavelength, 1e-18);
  LGBeam bad = b;
  bad.detuning = -1.0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = b;
  bad.ell = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}
