#pragma once

#include <string>
#include <vector>

namespace lgbec {

/// Marker for the box (homogeneous) limit of the 1D power-law well.
inline constexpr int kEllInfinity = -1;

std::string ell_label(int ell);
/// Accepts a positive integer or "INF" / "inf" / "box".
int parse_ell(const std::string& text);

/// Spectrum of -hbar^2/(2m) d^2/dx^2 + U x^{2 ell} with U chosen so the
/// ground state's classical turning points coincide with those of the
/// harmonic oscillator of angular frequency omega (x = +-a_ho).
/// Energies are in units of hbar omega, lengths in a_ho = sqrt(hbar/(m omega)).
struct LevelSpectrum {
  int ell = 1;
  std::vector<double> energies;
  double ground_halfwidth = 1.0;
  /// U in units of hbar omega / a_ho^{2 ell} (0 for the box).
  double coefficient = 0.0;
};

/// Lowest n_levels eigenvalues of -d^2/dy^2 + y^{2 ell} by finite
/// differences (Sturm bisection) with Richardson extrapolation.
std::vector<double> reduced_eigenvalues(int ell, int n_levels);

/// Always uses the numerical eigen-solve (box limit excepted).
LevelSpectrum spectrum_numeric(int ell, int n_levels);
/// Closed forms for ell = 1 and the box, numerical otherwise.
LevelSpectrum spectrum(int ell, int n_levels);

struct LevelPopulations {
  LevelSpectrum spectrum;
  double kt_over_hbar_omega = 0.0;
  double total_number = 0.0;
  double mu = 0.0;  // units of hbar omega
  std::vector<double> populations;
  [[nodiscard]] double ground_fraction() const { return populations.front() / total_number; }
};

/// Bose-Einstein occupations of the lowest n_levels levels with mu < E_0
/// fixed so that they sum to total_number.
LevelPopulations level_populations_1d(int ell, double kt_over_hbar_omega, int n_levels,
                                      double total_number);

}  // namespace lgbec
