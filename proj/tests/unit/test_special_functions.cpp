#include <algorithm>
#include <cmath>

#include <boost/math/special_functions/zeta.hpp>
#include <gtest/gtest.h>

#include "lgbec/special_functions.hpp"

using namespace lgbec;

TEST(BoseG, UnitFugacityIsZeta) {
  for (double s : {1.5, 2.0, 2.5, 3.0, 4.0}) {
    const double ref = boost::math::zeta(s);
    EXPECT_NEAR(bose_g(s, 1.0), ref, 1e-10 * ref) << "s=" << s;
    EXPECT_NEAR(riemann_zeta(s), ref, 1e-12 * ref) << "s=" << s;
  }
}

TEST(BoseG, OrderOneIsLogarithm) {
  for (int k = 0; k <= 99; ++k) {
    const double z = 0.01 * k;
    EXPECT_NEAR(bose_g(1.0, z), -std::log1p(-z), 1e-12) << "z=" << z;
  }
}

TEST(BoseG, MatchesDirectSeries) {
  // sum z^k / k^s converges geometrically for z <= 0.6
  for (double s : {0.5, 1.5, 2.0, 3.5}) {
    for (double z : {1e-8, 0.05, 0.3, 0.6}) {
      double sum = 0.0;
      double zk = 1.0;
      for (int k = 1; k < 400; ++k) {
        zk *= z;
        sum += zk / std::pow(k, s);
      }
      EXPECT_NEAR(bose_g(s, z), sum, 1e-13 * sum) << "s=" << s << " z=" << z;
    }
  }
}

TEST(BoseG, NearUnitFugacityApproachesZeta) {
  // for 1 < s < 2 the leading correction to zeta(s) is Gamma(1-s) w^{s-1}
  const double s = 1.5;
  const double w = 1e-8;
  const double expected = boost::math::zeta(s) + std::tgamma(1.0 - s) * std::pow(w, s - 1.0);
  EXPECT_NEAR(bose_g_exp(s, w), expected, 1e-7);
}

TEST(BoseG, ExponentialArgumentAgrees) {
  for (double s : {0.5, 1.5, 2.5, 3.0}) {
    for (double w : {1e-6, 0.01, 0.3, 1.0, 4.0, 30.0}) {
      // exp(-w) rounds at 1e-16 absolute, which the reference amplifies by 1/w
      const double tol = std::max(1e-12, 1e-15 / w);
      EXPECT_NEAR(bose_g_exp(s, w), bose_g(s, std::exp(-w)), tol * bose_g(s, std::exp(-w)))
          << "s=" << s << " w=" << w;
    }
  }
}

TEST(BoseG, RejectsOutOfDomain) {
  EXPECT_THROW(bose_g(1.5, 1.2), std::domain_error);
  EXPECT_THROW(bose_g(1.5, -0.1), std::domain_error);
  EXPECT_THROW(bose_g(1.0, 1.0), std::domain_error);
  EXPECT_THROW(bose_g_exp(2.0, -1.0), std::domain_error);
}

TEST(LogFactorial, MatchesLgamma) {
  for (int n : {0, 1, 2, 5, 12, 40, 170}) EXPECT_NEAR(log_factorial(n), std::lgamma(n + 1.0), 1e-10);
}
