#include <cmath>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <gtest/gtest.h>

#include "lgbec/bose_thermo.hpp"
#include "lgbec/mean_field_tc.hpp"
#include "lgbec/special_functions.hpp"

using namespace lgbec;
namespace mf = lgbec::mean_field;

TEST(MeanFieldTc, PolylogHelpers) {
  for (double w : {1e-9, 1e-4, 0.05, 0.7, 1.99, 2.01, 6.0, 40.0}) {
    EXPECT_NEAR(mf::g_three_halves(w), bose_g_exp(1.5, w), 1e-12 * bose_g_exp(1.5, w)) << w;
    EXPECT_NEAR(mf::g_half(w), bose_g_exp(0.5, w), 1e-11 * bose_g_exp(0.5, w)) << w;
  }
}

TEST(MeanFieldTc, EffectivePotentialSolvesSelfConsistency) {
  // w = u + 4 q (g_{3/2}(e^-w) - zeta(3/2)) with the mean-field shift
  const double zeta32 = boost::math::zeta(1.5);
  for (double q : {0.005, 0.02, 0.05}) {
    for (double u : {0.0, 1e-6, 0.01, 0.3, 2.0, 10.0}) {
      const double w = mf::effective_potential(u, q);
      EXPECT_GE(w, 0.0);
      const double residual = w - u - 4.0 * q * (bose_g_exp(1.5, w) - zeta32);
      EXPECT_NEAR(residual, 0.0, 1e-12 * std::max(1.0, u)) << "q=" << q << " u=" << u;
    }
  }
  EXPECT_DOUBLE_EQ(mf::effective_potential(0.7, 0.0), 0.7);
}

TEST(MeanFieldTc, NoInteractionMeansNoShift) {
  for (double eta : {0.6, 1.0, 2.0}) {
    EXPECT_NEAR(mf::number_ratio(eta, 0.0), 1.0, 1e-12);
    EXPECT_NEAR(mf::tc_ratio(eta, 0.0), 1.0, 1e-12);
  }
}

TEST(MeanFieldTc, LinearCoefficientMatchesHighPrecisionReference) {
  // arbitrary-precision evaluation of the linear-response integral (mpmath)
  const std::pair<double, double> refs[] = {
      {0.55, -6.23949}, {0.60, -6.07368}, {0.65, -5.91578}, {0.75, -5.62177}, {2.0, -3.42603}};
  for (const auto& [eta, d1] : refs) EXPECT_NEAR(mf::d1(eta), d1, 1e-5) << "eta=" << eta;
}

TEST(MeanFieldTc, HarmonicLinearCoefficientIsSlopeAtSmallQ) {
  // for eta > 1 the expansion is analytic: (t - 1)/q -> D1 as q -> 0
  const double d1 = mf::d1(2.0);
  const double q1 = 1e-4;
  const double q2 = 2e-4;
  const double s1 = (mf::tc_ratio(2.0, q1) - 1.0) / q1;
  const double s2 = (mf::tc_ratio(2.0, q2) - 1.0) / q2;
  const double extrapolated = 2.0 * s1 - s2;  // removes the O(q) term
  EXPECT_NEAR(extrapolated, d1, 2e-3 * std::abs(d1));
}

TEST(MeanFieldTc, TrapCentreTermClosedForm) {
  for (double eta : {0.55, 0.75, 0.9, 1.25, 1.5, 1.9}) {
    const double expected = -4.0 * std::sqrt(M_PI) * std::pow(16.0 * M_PI, eta - 0.5) *
                            boost::math::tgamma(-eta) / ((eta + 1.0) * boost::math::zeta(eta + 1.0));
    EXPECT_NEAR(mf::d1_prime(eta), expected, 1e-10 * std::abs(expected)) << "eta=" << eta;
  }
  EXPECT_NEAR(mf::d1_prime(0.75), 26.5744510632, 1e-8);
  EXPECT_DOUBLE_EQ(mf::d1_prime(1.0), 0.0);
  EXPECT_DOUBLE_EQ(mf::d1_prime(2.0), 0.0);
}

// The three-term form is truncated, so inside the fit window it is held to 1%
// of the shift itself.
TEST(MeanFieldTc, ExpansionReproducesFullSolution) {
  const auto& table = TcCorrectionCoefficients::shipped();
  for (double eta : {0.75, 1.25, 2.0}) {
    const auto row = table.at(eta);
    for (double q : {0.01, 0.02, 0.03}) {
      const double full = mf::tc_ratio(eta, q) - 1.0;
      const double series = row.d1 * q + row.d1_prime * std::pow(q, 2 * eta) + row.d2 * q * q;
      EXPECT_NEAR(series, full, 1e-2 * std::abs(full)) << "eta=" << eta << " q=" << q;
    }
  }
}

TEST(MeanFieldTc, ShippedTableMatchesRecomputation) {
  const auto& table = TcCorrectionCoefficients::shipped();
  for (double eta : {0.75, 1.25, 2.0}) {
    const auto stored = table.at(eta);
    EXPECT_NEAR(stored.d1, mf::d1(eta), 1e-8) << eta;
    EXPECT_NEAR(stored.d1_prime, mf::d1_prime(eta), 1e-8) << eta;
  }
  const auto row = table.at(1.25);
  EXPECT_NEAR(row.d2, mf::d2_fit(1.25, row.d1, row.d1_prime), 1e-6 * std::abs(row.d2));
}
