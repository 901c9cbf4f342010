#include "lgbec/lg_optics.hpp"

#include <cmath>
#include <stdexcept>

#include "lgbec/constants.hpp"
#include "lgbec/special_functions.hpp"

namespace lgbec {

using constants::hbar;
using constants::pi;

void LGBeam::validate() const {
  if (ell < 1 || ell > kMaxEll) throw std::invalid_argument("LG beam: ell must be in [1, 64]");
  if (!(power > 0.0)) throw std::invalid_argument("LG beam: power must be positive");
  if (!(waist > 0.0)) throw std::invalid_argument("LG beam: waist must be positive");
  if (!(detuning > 0.0)) {
    throw std::invalid_argument("LG beam: detuning must be positive (blue-detuned dark trap)");
  }
  if (!(wavelength > 0.0)) throw std::invalid_argument("LG beam: wavelength must be positive");
}

double intensity(const LGBeam& beam, double rho) {
  if (rho < 0.0) throw std::invalid_argument("intensity: negative radius");
  const double x = 2.0 * rho * rho / (beam.waist * beam.waist);
  if (x == 0.0) return 0.0;
  // x^ell / ell! in log space keeps large ell finite.
  const double log_shape = beam.ell * std::log(x) - x - log_factorial(beam.ell);
  return 2.0 / pi * beam.power / (beam.waist * beam.waist) * std::exp(log_shape);
}

double peak_intensity(const LGBeam& beam) {
  const double l = beam.ell;
  const double log_shape = l * std::log(l) - l - log_factorial(beam.ell);
  return 2.0 / pi * beam.power / (beam.waist * beam.waist) * std::exp(log_shape);
}

double ring_radius(const LGBeam& beam) { return beam.waist * std::sqrt(0.5 * beam.ell); }

double rayleigh_range(const LGBeam& beam) {
  return pi * beam.waist * beam.waist / beam.wavelength;
}

double dipole_factor(double detuning, const AtomSpecies& sp) {
  return hbar * sp.gamma_s * sp.gamma_s / (8.0 * detuning * sp.i_sat);
}

double dipole_potential(const LGBeam& beam, const AtomSpecies& sp, double rho) {
  return dipole_factor(beam.detuning, sp) * intensity(beam, rho);
}

double barrier_height(const LGBeam& beam, const AtomSpecies& sp) {
  return dipole_factor(beam.detuning, sp) * peak_intensity(beam);
}

namespace {

// 2^ell / (4 pi ell!) hbar Gamma^2 P / (delta I_s), i.e. U w0^{2 ell + 2}.
double log_coefficient_numerator(int ell, double power, double detuning, const AtomSpecies& sp) {
  return ell * std::log(2.0) - std::log(4.0 * pi) - log_factorial(ell) +
         std::log(hbar * sp.gamma_s * sp.gamma_s * power / (detuning * sp.i_sat));
}

}  // namespace

double powerlaw_coefficient(const LGBeam& beam, const AtomSpecies& sp) {
  const double log_u = log_coefficient_numerator(beam.ell, beam.power, beam.detuning, sp) -
                       (2.0 * beam.ell + 2.0) * std::log(beam.waist);
  return std::exp(log_u);
}

double waist_for_coefficient(int ell, double power, double detuning, const AtomSpecies& sp,
                             double coefficient) {
  if (!(coefficient > 0.0 && power > 0.0 && detuning > 0.0)) {
    throw std::invalid_argument("waist_for_coefficient: inputs must be positive");
  }
  const double log_num = log_coefficient_numerator(ell, power, detuning, sp);
  return std::exp((log_num - std::log(coefficient)) / (2.0 * ell + 2.0));
}

}  // namespace lgbec
