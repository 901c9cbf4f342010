#include "lgbec/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "lgbec/numerics.hpp"

namespace lgbec {

namespace {

// The tail sum_{i>=M} e^{-w i} i^{-s} is handled by Euler-Maclaurin at this
// cut-off; with w <= ln 2 the correction series converges after a few terms.
constexpr int kHeadTerms = 16;

// B_{2k} / (2k)!
constexpr std::array<double, 7> kBernoulliOverFactorial = {
    1.0 / 12.0,       -1.0 / 720.0,     1.0 / 30240.0,           -1.0 / 1209600.0,
    1.0 / 47900160.0, -691.0 / 1307674368000.0, 7.0 / 523069747200.0};

// J = int_M^inf e^{-w x} x^{-s} dx, computed with x = M e^t so the integrand
// exp((1 - s) t - w M e^t) is smooth and decays super-exponentially.
double tail_integral(double s, double w, double m) {
  const double scale = std::pow(m, 1.0 - s);
  if (w == 0.0) return scale / (s - 1.0);
  const double y = w * m;
  auto integrand = [&](double t) { return std::exp((1.0 - s) * t - y * std::exp(t)); };
  // Past t_peak the integrand decreases monotonically.
  const double t_peak = s < 1.0 ? std::log((1.0 - s) / y) : 0.0;
  constexpr double kPanel = 0.5;
  double total = 0.0;
  for (int p = 0; p < 400; ++p) {
    const double a = p * kPanel;
    const double piece = numerics::integrate_panels(integrand, a, a + kPanel, 1);
    total += piece;
    if (a > t_peak && integrand(a + kPanel) <= 1e-18 * total) break;
  }
  return scale * total;
}

double euler_maclaurin_tail(double s, double w) {
  const double m = kHeadTerms;
  // Derivatives of f(x) = e^{-w x} x^{-s} at x = m via Leibniz' rule:
  // d^r/dx^r x^{-s} = (-1)^r (s)_r x^{-s-r}.
  constexpr int kMaxOrder = 2 * static_cast<int>(kBernoulliOverFactorial.size());
  std::array<double, kMaxOrder + 1> power_derivs{};
  double rising = 1.0;
  for (int r = 0; r <= kMaxOrder; ++r) {
    power_derivs[r] = ((r % 2 == 0) ? 1.0 : -1.0) * rising * std::pow(m, -s - r);
    rising *= (s + r);
  }
  const double ew = std::exp(-w * m);
  auto derivative = [&](int j) {
    double sum = 0.0;
    double binom = 1.0;
    for (int r = 0; r <= j; ++r) {
      sum += binom * std::pow(-w, j - r) * power_derivs[r];
      binom = binom * (j - r) / (r + 1);
    }
    return ew * sum;
  };
  double result = tail_integral(s, w, m) + 0.5 * ew * std::pow(m, -s);
  for (std::size_t k = 0; k < kBernoulliOverFactorial.size(); ++k) {
    result -= kBernoulliOverFactorial[k] * derivative(2 * static_cast<int>(k) + 1);
  }
  return result;
}

double direct_series(double s, double z) {
  double sum = 0.0;
  double zi = 1.0;
  for (int i = 1; i < 100000; ++i) {
    zi *= z;
    sum += zi / std::pow(static_cast<double>(i), s);
    // Remaining terms are bounded by z^{i+1} / (1 - z).
    if (zi * z / (1.0 - z) < 1e-17 * sum) break;
  }
  return sum;
}

}  // namespace

double bose_g_exp(double s, double w) {
  if (!(w >= 0.0)) throw std::domain_error("bose_g: fugacity above 1");
  if (!(s > 0.0)) throw std::domain_error("bose_g: order must be positive");
  if (w == 0.0 && s <= 1.0) {
    throw std::domain_error("bose_g: g_s(1) diverges for s <= 1");
  }
  if (std::isinf(w)) return 0.0;
  if (w >= std::numbers::ln2) return direct_series(s, std::exp(-w));
  double head = 0.0;
  for (int i = 1; i < kHeadTerms; ++i) {
    head += std::exp(-w * i) * std::pow(static_cast<double>(i), -s);
  }
  return head + euler_maclaurin_tail(s, w);
}

double bose_g(double s, double z) {
  if (!(z >= 0.0 && z <= 1.0)) throw std::domain_error("bose_g: z outside [0, 1]");
  if (z == 0.0) {
    if (!(s > 0.0)) throw std::domain_error("bose_g: order must be positive");
    return 0.0;
  }
  return bose_g_exp(s, -std::log(z));
}

double riemann_zeta(double s) {
  if (!(s > 1.0)) throw std::domain_error("riemann_zeta: requires s > 1");
  return bose_g_exp(s, 0.0);
}

double log_factorial(int n) {
  if (n < 0) throw std::domain_error("log_factorial: negative argument");
  return std::lgamma(static_cast<double>(n) + 1.0);
}

}  // namespace lgbec
