#pragma once

#include <string>
#include <vector>

#include "lgbec/bose_thermo.hpp"
#include "lgbec/species.hpp"
#include "lgbec/trap_model.hpp"

namespace lgbec {

/// Thermal bath and trap for one growth run.
struct GrowthParams {
  double temperature = 0.0;  // K
  double mu_bath = 0.0;      // J
  double n_eq = 0.0;         // equilibrium condensate number
  PowerLawTrap trap;
  AtomSpecies species;
  /// Total atom number, used only to report N_c / N.
  double n_total = 0.0;
  std::vector<std::string> warnings;

  void validate() const;
};

/// Bath at T = T_c (1 - f_eq)^{1/(eta+1)} with mu = mu_TF(f_eq N); T_c from
/// tc_interacting. Adds a warning when f_eq > 0.1.
GrowthParams growth_params_for(const PowerLawTrap& trap, const AtomSpecies& sp, double n_total,
                               double f_eq, const TcCorrectionCoefficients& coeffs);

/// 4 m (a_s k_B T)^2 / (pi hbar^3)  [1/s]
double growth_coefficient(double temperature, const AtomSpecies& sp);

struct GrowthRateDetail {
  double value = 0.0;  // 1/s
  double phi = 0.0;
  std::size_t terms = 0;
  /// mu_c >= mu: the series exponent was clamped to zero.
  bool clamped = false;
};

inline constexpr double kSeriesRelTol = 1e-12;

/// W+ with the p-series truncated once the next term drops below
/// kSeriesRelTol of the running sum (or after max_terms when given).
GrowthRateDetail growth_rate_detail(const GrowthParams& params, double n_c,
                                    std::size_t max_terms = 0);
double growth_rate(const GrowthParams& params, double n_c);

/// Right side of the rate equation dN_c/dt.
double growth_derivative(const GrowthParams& params, double n_c);

struct GrowthSeries {
  std::vector<double> times;  // s
  std::vector<double> n_c;
  std::vector<double> dn_dt;  // derivative at each sample, for Hermite output
  GrowthParams params;
  double rel_tol = 0.0;
  double abs_tol = 0.0;
  std::size_t rejected_steps = 0;
  bool clamped = false;

  /// Cubic Hermite dense output.
  [[nodiscard]] double value_at(double t) const;
};

struct GrowthOptions {
  double rel_tol = 1e-8;
  /// Absolute tolerance in units of n_eq.
  double abs_tol_fraction = 1e-8;
  double min_step = 1e-14;  // s
  std::size_t max_steps = 10000000;
};

/// Integrates the rate equation from N_c(0) = 0 with an embedded
/// Dormand-Prince 5(4) pair.
GrowthSeries simulate_growth(const GrowthParams& params, double t_end,
                             const GrowthOptions& options = {});

inline constexpr double kDefaultGrowthThreshold = 0.9;

/// First time N_c reaches threshold * n_eq.
double condensation_time(const GrowthSeries& series, double threshold = kDefaultGrowthThreshold);

/// Samples N_c/N on a uniform grid: "t_seconds Nc_over_N" lines.
std::string growth_series_text(const GrowthSeries& series, std::size_t samples);

}  // namespace lgbec
