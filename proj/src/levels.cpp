#include "lgbec/levels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lgbec/numerics.hpp"

namespace lgbec {

std::string ell_label(int ell) { return ell == kEllInfinity ? "INF" : std::to_string(ell); }

int parse_ell(const std::string& text) {
  if (text == "INF" || text == "inf" || text == "box") return kEllInfinity;
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(text, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid ell '" + text + "'");
  }
  if (pos != text.size() || v < 1) throw std::invalid_argument("invalid ell '" + text + "'");
  return v;
}

namespace {

// Number of eigenvalues below x of the symmetric tridiagonal matrix with
// diagonal d and constant off-diagonal e.
int sturm_count(const std::vector<double>& d, double e, double x) {
  int count = 0;
  double q = d[0] - x;
  if (q < 0.0) ++count;
  const double e2 = e * e;
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (q == 0.0) q = 1e-300;
    q = d[i] - x - e2 / q;
    if (q < 0.0) ++count;
  }
  return count;
}

std::vector<double> fd_eigenvalues(int ell, int n_levels, double half_box, int n_points) {
  const double h = 2.0 * half_box / (n_points + 1);
  std::vector<double> d(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double y = -half_box + (i + 1) * h;
    d[i] = 2.0 / (h * h) + std::pow(y, 2 * ell);
  }
  const double e = -1.0 / (h * h);
  double upper = 1.0;
  while (sturm_count(d, e, upper) < n_levels) upper *= 2.0;
  std::vector<double> out(n_levels);
  for (int k = 0; k < n_levels; ++k) {
    double lo = k == 0 ? 0.0 : out[k - 1];
    double hi = upper;
    for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (sturm_count(d, e, mid) > k) hi = mid; else lo = mid;
    }
    out[k] = 0.5 * (lo + hi);
  }
  return out;
}

}  // namespace

std::vector<double> reduced_eigenvalues(int ell, int n_levels) {
  if (ell < 1) throw std::invalid_argument("reduced_eigenvalues: ell must be >= 1");
  if (n_levels < 1) throw std::invalid_argument("reduced_eigenvalues: n_levels must be >= 1");
  // The n-th state is confined within a few decay lengths of its turning point.
  const double turning = std::pow(std::numbers::pi * (n_levels + 1.0), 1.0 / (ell + 1.0));
  const double half_box = 2.0 * turning + 4.0;
  const int n = static_cast<int>(std::ceil(half_box * 400.0));
  const auto coarse = fd_eigenvalues(ell, n_levels, half_box, n);
  const auto fine = fd_eigenvalues(ell, n_levels, half_box, 2 * n + 1);
  std::vector<double> out(n_levels);
  for (int k = 0; k < n_levels; ++k) out[k] = (4.0 * fine[k] - coarse[k]) / 3.0;
  for (int k = 1; k < n_levels; ++k) {
    if (!(out[k] > out[k - 1])) throw numerics::ConvergenceError("eigen-solve produced a degenerate spectrum", out[k] - out[k - 1]);
  }
  return out;
}

namespace {

LevelSpectrum box_spectrum(int n_levels) {
  LevelSpectrum s;
  s.ell = kEllInfinity;
  const double pi2 = std::numbers::pi * std::numbers::pi;
  for (int n = 0; n < n_levels; ++n) s.energies.push_back(pi2 * (n + 1.0) * (n + 1.0) / 8.0);
  return s;
}

}  // namespace

LevelSpectrum spectrum_numeric(int ell, int n_levels) {
  if (ell == kEllInfinity) return box_spectrum(n_levels);
  const auto eps = reduced_eigenvalues(ell, n_levels);
  LevelSpectrum s;
  s.ell = ell;
  // With H = -d^2/2 + u x^{2 ell} the condition E_0 = u x_t^{2 ell} at
  // x_t = 1 fixes u = eps_0^{(ell+1)/ell} / 2 and E_n = eps_n eps_0^{1/ell} / 2.
  s.coefficient = 0.5 * std::pow(eps[0], (ell + 1.0) / ell);
  const double scale = 0.5 * std::pow(eps[0], 1.0 / ell);
  for (double e : eps) s.energies.push_back(e * scale);
  return s;
}

LevelSpectrum spectrum(int ell, int n_levels) {
  if (n_levels < 1) throw std::invalid_argument("spectrum: n_levels must be >= 1");
  if (ell == kEllInfinity) return box_spectrum(n_levels);
  if (ell == 1) {
    LevelSpectrum s;
    s.ell = 1;
    s.coefficient = 0.5;
    for (int n = 0; n < n_levels; ++n) s.energies.push_back(n + 0.5);
    return s;
  }
  return spectrum_numeric(ell, n_levels);
}

LevelPopulations level_populations_1d(int ell, double kt_over_hbar_omega, int n_levels,
                                      double total_number) {
  if (n_levels < 2) throw std::invalid_argument("level_populations_1d: n_levels must be >= 2");
  if (!(kt_over_hbar_omega > 0.0)) throw std::invalid_argument("level_populations_1d: kT must be positive");
  if (!(total_number > 0.0)) throw std::invalid_argument("level_populations_1d: total_number must be positive");
  LevelPopulations out;
  out.spectrum = spectrum(ell, n_levels);
  out.kt_over_hbar_omega = kt_over_hbar_omega;
  out.total_number = total_number;
  const auto& e = out.spectrum.energies;
  const double kt = kt_over_hbar_omega;
  // x = (E_0 - mu) / kT > 0
  auto occupation_sum = [&](double x) {
    double sum = 0.0;
    for (double en : e) sum += 1.0 / std::expm1((en - e[0]) / kt + x);
    return sum;
  };
  constexpr double kMinGap = 1e-12;
  if (occupation_sum(kMinGap) < total_number) {
    throw numerics::ConvergenceError(
        "level_populations_1d: saturation, mu reaches E_0 before the total is accommodated",
        occupation_sum(kMinGap) / total_number);
  }
  double hi = 1.0;
  while (occupation_sum(hi) > total_number) hi *= 2.0;
  const double x = numerics::bisect_log(
      [&](double v) { return occupation_sum(v) - total_number; }, kMinGap, hi, 1e-15);
  out.mu = e[0] - x * kt;
  double sum = 0.0;
  for (double en : e) {
    out.populations.push_back(1.0 / std::expm1((en - out.mu) / kt));
    sum += out.populations.back();
  }
  // Remove the residual of the root solve so the total is exact to rounding.
  for (double& p : out.populations) p *= total_number / sum;
  return out;
}

}  // namespace lgbec
