#include "lgbec/kinetics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "lgbec/constants.hpp"
#include "lgbec/numerics.hpp"

namespace lgbec {

using constants::boltzmann;
using constants::hbar;
using constants::pi;

void GrowthParams::validate() const {
  if (!(temperature > 0.0)) throw std::invalid_argument("GrowthParams: temperature must be positive");
  if (!(n_eq >= 1.0)) throw std::invalid_argument("GrowthParams: n_eq must be >= 1");
  if (!(mu_bath > 0.0)) throw std::invalid_argument("GrowthParams: bath chemical potential must be positive");
  trap.validate();
}

GrowthParams growth_params_for(const PowerLawTrap& trap, const AtomSpecies& sp, double n_total,
                               double f_eq, const TcCorrectionCoefficients& coeffs) {
  if (!(f_eq > 0.0 && f_eq < 1.0)) throw std::invalid_argument("growth: f_eq must lie in (0, 1)");
  GrowthParams p;
  p.trap = trap;
  p.species = sp;
  p.n_total = n_total;
  const double tc = tc_interacting(trap, n_total, sp, coeffs);
  p.temperature = tc * std::pow(1.0 - f_eq, 1.0 / (trap.eta() + 1.0));
  p.n_eq = f_eq * n_total;
  p.mu_bath = mu_thomas_fermi(trap, p.n_eq, interaction_strength(sp));
  if (f_eq > 0.1) {
    p.warnings.push_back("condensate fraction above 0.1: rate model outside its validity range");
  }
  return p;
}

double growth_coefficient(double temperature, const AtomSpecies& sp) {
  if (!(temperature > 0.0)) throw std::invalid_argument("growth_coefficient: T must be positive");
  const double akt = sp.a_s * boltzmann * temperature;
  return 4.0 * sp.mass * akt * akt / (pi * hbar * hbar * hbar);
}

GrowthRateDetail growth_rate_detail(const GrowthParams& params, double n_c, std::size_t max_terms) {
  const double kt = boltzmann * params.temperature;
  const double g = interaction_strength(params.species);
  GrowthRateDetail d;
  d.phi = std::exp((params.mu_bath - 2.0 * mu_thomas_fermi(params.trap, params.n_eq, g)) / kt);
  const double mu_c = mu_thomas_fermi_or_zero(params.trap, n_c, g);
  double x = (mu_c - params.mu_bath) / kt;
  if (x >= 0.0) {
    x = 0.0;
    d.clamped = true;
  }
  const double log_term = std::log1p(-d.phi);
  double sum = log_term * log_term;
  double partial = 0.0;  // sum_{q<=p} phi^q / q
  double phi_p = 1.0;
  const std::size_t cap = max_terms > 0 ? max_terms : 100000000;
  std::size_t p = 1;
  for (; p <= cap; ++p) {
    phi_p *= d.phi;
    partial += phi_p / static_cast<double>(p);
    const double inner = log_term + partial;
    const double term = inner * inner * std::exp(static_cast<double>(p) * x);
    sum += term;
    if (max_terms == 0) {
      // Look-ahead on the next term.
      const double phi_next = phi_p * d.phi;
      const double inner_next = inner + phi_next / static_cast<double>(p + 1);
      const double next = inner_next * inner_next * std::exp(static_cast<double>(p + 1) * x);
      if (next < kSeriesRelTol * sum) break;
    }
  }
  d.terms = std::min(p, cap);
  d.value = growth_coefficient(params.temperature, params.species) * sum;
  return d;
}

double growth_rate(const GrowthParams& params, double n_c) {
  return growth_rate_detail(params, n_c).value;
}

double growth_derivative(const GrowthParams& params, double n_c) {
  const double n = std::max(n_c, 0.0);
  const double kt = boltzmann * params.temperature;
  const double mu_c = mu_thomas_fermi_or_zero(params.trap, n, interaction_strength(params.species));
  const double w = growth_rate(params, n);
  return 2.0 * w * (-std::expm1((mu_c - params.mu_bath) / kt) * n + 1.0);
}

double GrowthSeries::value_at(double t) const {
  if (times.empty()) throw std::logic_error("GrowthSeries: empty");
  if (t <= times.front()) return n_c.front();
  if (t >= times.back()) return n_c.back();
  const auto it = std::upper_bound(times.begin(), times.end(), t);
  const std::size_t k = static_cast<std::size_t>(it - times.begin()) - 1;
  const double h = times[k + 1] - times[k];
  const double s = (t - times[k]) / h;
  const double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
  const double h10 = s * (1 - s) * (1 - s);
  const double h01 = s * s * (3 - 2 * s);
  const double h11 = s * s * (s - 1);
  return h00 * n_c[k] + h10 * h * dn_dt[k] + h01 * n_c[k + 1] + h11 * h * dn_dt[k + 1];
}

GrowthSeries simulate_growth(const GrowthParams& params, double t_end, const GrowthOptions& options) {
  params.validate();
  if (!(t_end > 0.0)) throw std::invalid_argument("simulate_growth: t_end must be positive");
  // Dormand-Prince 5(4) tableau.
  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                   a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                   b6 = 11.0 / 84;
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                   e6 = 22.0 / 525, e7 = -1.0 / 40;
  (void)c2; (void)c3; (void)c4; (void)c5;

  GrowthSeries out;
  out.params = params;
  out.rel_tol = options.rel_tol;
  out.abs_tol = options.abs_tol_fraction * params.n_eq;
  auto f = [&](double n) { return growth_derivative(params, n); };

  double t = 0.0;
  double y = 0.0;
  double k1 = f(y);
  out.times.push_back(t);
  out.n_c.push_back(y);
  out.dn_dt.push_back(k1);
  // Initial step from the spontaneous-growth scale.
  double h = std::min(t_end, 1e-3 * params.n_eq / std::max(k1, 1e-300));
  std::size_t steps = 0;
  while (t < t_end) {
    if (++steps > options.max_steps) throw numerics::ConvergenceError("simulate_growth: step budget exhausted", y);
    if (t + h > t_end) h = t_end - t;
    const double k2 = f(y + h * a21 * k1);
    const double k3 = f(y + h * (a31 * k1 + a32 * k2));
    const double k4 = f(y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const double k5 = f(y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const double k6 = f(y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const double y_new = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const double k7 = f(y_new);
    const double err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    const double scale = out.abs_tol + options.rel_tol * std::max(std::abs(y), std::abs(y_new));
    const double ratio = std::abs(err) / scale;
    if (ratio <= 1.0) {
      t += h;
      y = y_new;
      k1 = k7;
      out.times.push_back(t);
      out.n_c.push_back(y);
      out.dn_dt.push_back(k7);
      if (growth_rate_detail(params, y).clamped) out.clamped = true;
    } else {
      ++out.rejected_steps;
    }
    const double factor = ratio == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(ratio, -0.2), 0.2, 5.0);
    h *= ratio <= 1.0 ? factor : std::min(factor, 1.0);
    if (h < options.min_step && t < t_end) {
      throw numerics::ConvergenceError("simulate_growth: step size underflow at t = " + std::to_string(t) +
                                           " s, N_c = " + std::to_string(y),
                                       y);
    }
  }
  return out;
}

double condensation_time(const GrowthSeries& series, double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0)) throw std::invalid_argument("condensation_time: threshold must lie in (0, 1)");
  const double target = threshold * series.params.n_eq;
  const auto& n = series.n_c;
  for (std::size_t k = 1; k < n.size(); ++k) {
    if (n[k] >= target) {
      if (n[k - 1] >= target) return series.times[k - 1];
      return numerics::bisect([&](double t) { return series.value_at(t) - target; },
                              series.times[k - 1], series.times[k], 1e-14);
    }
  }
  throw std::runtime_error("condensation_time: the series never reaches the threshold");
}

std::string growth_series_text(const GrowthSeries& series, std::size_t samples) {
  if (samples < 2) throw std::invalid_argument("growth_series_text: need at least 2 samples");
  std::ostringstream os;
  char buf[64];
  const double t_end = series.times.back();
  const double n_total = series.params.n_total > 0.0 ? series.params.n_total : series.params.n_eq;
  for (std::size_t k = 0; k < samples; ++k) {
    const double t = t_end * static_cast<double>(k) / static_cast<double>(samples - 1);
    std::snprintf(buf, sizeof buf, "%.9e %.9e\n", t, series.value_at(t) / n_total);
    os << buf;
  }
  return os.str();
}

}  // namespace lgbec
