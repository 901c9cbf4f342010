#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgbec/species.hpp"
#include "lgbec/trap_model.hpp"

namespace lgbec {

/// lambda_T = h / sqrt(2 pi m k_B T)
double thermal_wavelength(double temperature, double mass);

/// zeta(3/2) / lambda_T^3, the peak density at the onset of condensation.
double peak_density_onset(double temperature, double mass);

/// Semiclassical density of states m^{3/2} C eps^eta / (hbar^3 sqrt(2 pi) Gamma(eta + 1)).
double density_of_states(const PowerLawTrap& trap, double epsilon, double mass);

/// Number of states below epsilon (integral of density_of_states).
double state_count(const PowerLawTrap& trap, double epsilon, double mass);

/// Equation of state N(T, mu). For mu = 0 the ground-state term is dropped
/// and only the saturated thermal population is returned.
double eos_total_number(const PowerLawTrap& trap, double temperature, double mu, double mass);

/// Ideal-gas critical temperature [K].
double tc_ideal(const PowerLawTrap& trap, double n_atoms, double mass);

/// Interaction-shift coefficients as functions of eta, tabulated and
/// interpolated piecewise-linearly (which keeps monotone data monotone).
class TcCorrectionCoefficients {
 public:
  struct Row {
    double eta;
    double d1;
    double d1_prime;
    double d2;
  };

  TcCorrectionCoefficients() = default;
  explicit TcCorrectionCoefficients(std::vector<Row> rows, std::string source = "inline");

  /// Whitespace-separated columns eta, D1, D1' and optionally D2; '#' comments.
  static TcCorrectionCoefficients parse(const std::string& text, std::string source = "inline");
  static TcCorrectionCoefficients load(const std::filesystem::path& path);
  /// The shipped mean-field table.
  static const TcCorrectionCoefficients& shipped();
  static std::filesystem::path shipped_path();

  /// All-zero coefficients (T_c = T_c0).
  static TcCorrectionCoefficients zero();

  [[nodiscard]] Row at(double eta) const;
  [[nodiscard]] const std::vector<Row>& rows() const { return rows_; }
  [[nodiscard]] const std::string& source() const { return source_; }
  [[nodiscard]] bool has_d2() const { return has_d2_; }

  /// Drops the second-order term for all eta.
  bool include_d2 = true;

 private:
  std::vector<Row> rows_;
  std::string source_;
  bool has_d2_ = false;
};

/// Thrown when q = a_s / lambda_{Tc0} leaves the perturbative regime.
class OutOfRegimeError : public std::runtime_error {
 public:
  OutOfRegimeError(const std::string& what, double q) : std::runtime_error(what), q_(q) {}
  [[nodiscard]] double q() const noexcept { return q_; }

 private:
  double q_;
};

inline constexpr double kMaxPerturbativeQ = 0.1;

struct TcBreakdown {
  double eta = 0.0;
  double tc0 = 0.0;  // K
  double tc = 0.0;   // K
  double q = 0.0;
  TcCorrectionCoefficients::Row coefficients{};
};

TcBreakdown tc_breakdown(const PowerLawTrap& trap, double n_atoms, const AtomSpecies& sp,
                         const TcCorrectionCoefficients& coeffs);

/// T_c = [1 + D1 q + D1' q^{2 eta} + D2 q^2] T_c0 [K].
double tc_interacting(const PowerLawTrap& trap, double n_atoms, const AtomSpecies& sp,
                      const TcCorrectionCoefficients& coeffs);

}  // namespace lgbec
