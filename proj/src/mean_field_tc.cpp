#include "lgbec/mean_field_tc.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lgbec/numerics.hpp"
#include "lgbec/special_functions.hpp"

namespace lgbec::mean_field {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZetaHalf = -1.4603545088095868;
constexpr int kRobinsonTerms = 48;
constexpr double kRobinsonLimit = 2.0;

// zeta(x) for x = 1/2 - k or 3/2 - k through the reflection formula.
double zeta_any(double x) {
  if (x > 1.0) return riemann_zeta(x);
  if (x == 0.5) return kZetaHalf;
  return std::pow(2.0, x) * std::pow(kPi, x - 1.0) * std::sin(kPi * x / 2.0) *
         std::tgamma(1.0 - x) * riemann_zeta(1.0 - x);
}

struct RobinsonTable {
  std::array<double, kRobinsonTerms> coeff_half{};   // zeta(1/2 - k) (-1)^k / k!
  std::array<double, kRobinsonTerms> coeff_three{};  // zeta(3/2 - k) (-1)^k / k!
  double zeta_three_halves = 0.0;
};

const RobinsonTable& robinson() {
  static const RobinsonTable table = [] {
    RobinsonTable t;
    double fact = 1.0;
    for (int k = 0; k < kRobinsonTerms; ++k) {
      if (k > 0) fact *= k;
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      t.coeff_half[k] = sign * zeta_any(0.5 - k) / fact;
      t.coeff_three[k] = sign * zeta_any(1.5 - k) / fact;
    }
    t.zeta_three_halves = riemann_zeta(1.5);
    return t;
  }();
  return table;
}

double direct_sum(double s, double w) {
  double sum = 0.0;
  for (int i = 1; i < 200; ++i) {
    const double term = std::exp(-w * i) * std::pow(static_cast<double>(i), -s);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

double horner(const std::array<double, kRobinsonTerms>& c, double w) {
  double acc = 0.0;
  for (int k = kRobinsonTerms - 1; k >= 0; --k) acc = acc * w + c[k];
  return acc;
}

// sum_{k>=1} coeff_three[k] w^{k-1}
double horner_three_tail(double w) {
  const auto& c = robinson().coeff_three;
  double acc = 0.0;
  for (int k = kRobinsonTerms - 1; k >= 1; --k) acc = acc * w + c[k];
  return acc;
}

// zeta(3/2) - g_{3/2}(e^{-w}) without cancellation for small w.
double zeta_minus_g32(double w) {
  if (w >= kRobinsonLimit) return robinson().zeta_three_halves - direct_sum(1.5, w);
  return 2.0 * std::sqrt(kPi * w) - w * horner_three_tail(w);
}

// g_{1/2}(e^{-x}) [zeta(3/2) - g_{3/2}(e^{-x})] - 2 pi, expanded so the
// leading 2 pi cancels exactly.
double response_kernel_minus_2pi(double x) {
  if (x >= kRobinsonLimit) return g_half(x) * zeta_minus_g32(x) - 2.0 * kPi;
  const double b = horner(robinson().coeff_half, x);
  const double d = -x * horner_three_tail(x);
  return -std::sqrt(kPi * x) * horner_three_tail(x) + b * 2.0 * std::sqrt(kPi * x) + b * d;
}

}  // namespace

double g_half(double w) {
  if (!(w > 0.0)) throw std::domain_error("g_half: requires w > 0");
  if (w >= kRobinsonLimit) return direct_sum(0.5, w);
  return std::sqrt(kPi / w) + horner(robinson().coeff_half, w);
}

double g_three_halves(double w) {
  if (!(w >= 0.0)) throw std::domain_error("g_three_halves: requires w >= 0");
  if (w >= kRobinsonLimit) return direct_sum(1.5, w);
  return -2.0 * std::sqrt(kPi * w) + horner(robinson().coeff_three, w);
}

double effective_potential(double u, double q) {
  if (u <= 0.0) return 0.0;
  if (q == 0.0) return u;
  auto f = [&](double w) { return w - u + 4.0 * q * zeta_minus_g32(w); };
  double lo = 0.0;
  double hi = u;
  double w = u;
  for (int it = 0; it < 200; ++it) {
    const double fw = f(w);
    if (fw > 0.0) hi = w; else lo = w;
    if (fw == 0.0 || hi - lo <= 1e-15 * hi) break;
    const double step = fw / (1.0 + 4.0 * q * g_half(w));
    double next = w - step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - w) <= 1e-16 * w) { w = next; break; }
    w = next;
  }
  return w;
}

double number_ratio(double eta, double q) {
  if (!(eta > 0.5)) throw std::domain_error("number_ratio: requires eta > 1/2");
  if (q == 0.0) return 1.0;
  // u = s^2 removes the u^{eta - 3/2} endpoint singularity.
  auto integrand = [&](double s) {
    if (s == 0.0) return 0.0;
    const double u = s * s;
    const double diff = zeta_minus_g32(u) - zeta_minus_g32(effective_potential(u, q));
    return 2.0 * std::pow(s, 2.0 * eta - 2.0) * diff;
  };
  const std::array<double, 7> breaks = {0.0, 0.1 * q, q, 10.0 * q, 1.0, 3.0, 8.0};
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (breaks[i + 1] <= breaks[i]) continue;
    total += numerics::integrate_adaptive(integrand, breaks[i], breaks[i + 1], 1e-12, 1e-16);
  }
  return 1.0 + total / (std::tgamma(eta - 0.5) * riemann_zeta(eta + 1.0));
}

double tc_ratio(double eta, double q0) {
  if (q0 == 0.0) return 1.0;
  auto f = [&](double t) { return (eta + 1.0) * std::log(t) + std::log(number_ratio(eta, q0 * std::sqrt(t))); };
  return numerics::bisect(f, 0.5, 1.5, 1e-14);
}

double d1(double eta) {
  if (!(eta > 0.5)) throw std::domain_error("d1: requires eta > 1/2");
  auto h = [&](double x) { return g_half(x) * zeta_minus_g32(x); };
  // On [0, 1] the leading 2 pi x^{eta - 3/2} is integrated analytically.
  auto near = [&](double s) {
    if (s == 0.0) return 0.0;
    return 2.0 * std::pow(s, 2.0 * eta - 2.0) * response_kernel_minus_2pi(s * s);
  };
  auto far = [&](double x) { return std::pow(x, eta - 1.5) * h(x); };
  const double integral = 2.0 * kPi / (eta - 0.5) +
                          numerics::integrate_adaptive(near, 0.0, 1.0, 1e-13, 1e-16) +
                          numerics::integrate_adaptive(far, 1.0, 8.0, 1e-13, 1e-16) +
                          numerics::integrate_adaptive(far, 8.0, 80.0, 1e-13, 1e-18);
  return -4.0 * integral / ((eta + 1.0) * std::tgamma(eta - 0.5) * riemann_zeta(eta + 1.0));
}

double d1_prime(double eta) {
  if (!(eta >= 0.5)) throw std::domain_error("d1_prime: requires eta >= 1/2");
  // Gamma(-eta) has poles at eta = 1 and 2 where q^{2 eta} merges with an
  // analytic power; the remainder is then left to the D2 fit.
  if (std::abs(eta - 1.0) < 1e-9 || eta > 2.0 - 1e-9) return 0.0;
  return -4.0 * std::sqrt(kPi) * std::pow(16.0 * kPi, eta - 0.5) * std::tgamma(-eta) /
         ((eta + 1.0) * riemann_zeta(eta + 1.0));
}

double d2_fit(double eta, double d1_value, double d1_prime_value) {
  constexpr std::array<double, 5> qs = {0.01, 0.015, 0.02, 0.025, 0.03};
  double num = 0.0;
  double den = 0.0;
  for (double q : qs) {
    const double rest =
        tc_ratio(eta, q) - 1.0 - d1_value * q - d1_prime_value * std::pow(q, 2.0 * eta);
    num += rest * q * q;
    den += q * q * q * q;
  }
  return num / den;
}

TcCorrectionCoefficients::Row coefficient_row(double eta) {
  if (std::abs(eta - 0.5) < 1e-12) {
    const double limit = 8.0 * kPi / (1.5 * riemann_zeta(1.5));
    return {0.5, -limit, limit, 0.0};
  }
  TcCorrectionCoefficients::Row row{};
  row.eta = eta;
  row.d1 = d1(eta);
  row.d1_prime = d1_prime(eta);
  row.d2 = d2_fit(eta, row.d1, row.d1_prime);
  return row;
}

}  // namespace lgbec::mean_field
