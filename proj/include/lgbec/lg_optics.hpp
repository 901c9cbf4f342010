#pragma once

#include "lgbec/species.hpp"

namespace lgbec {

/// One blue-detuned LG_0^ell beam (radial index p = 0). SI units; the
/// detuning is an angular frequency and must be positive.
struct LGBeam {
  int ell = 1;
  double power = 0.0;       // W
  double waist = 0.0;       // m
  double detuning = 0.0;    // rad/s
  double wavelength = 0.0;  // m

  void validate() const;
};

inline constexpr int kMaxEll = 64;

/// I(rho) = 2/(pi ell!) P/w0^2 (2 rho^2/w0^2)^ell exp(-2 rho^2/w0^2)
double intensity(const LGBeam& beam, double rho);

/// Ring maximum 2 ell^ell / (pi ell! e^ell) P / w0^2.
double peak_intensity(const LGBeam& beam);

/// rho_0 = w0 sqrt(ell / 2)
double ring_radius(const LGBeam& beam);

/// z_R = pi w0^2 / lambda
double rayleigh_range(const LGBeam& beam);

/// hbar Gamma^2 / (8 delta I_s), the factor turning intensity into the
/// repulsive dipole potential in the two-level far-detuned limit.
double dipole_factor(double detuning, const AtomSpecies& sp);

double dipole_potential(const LGBeam& beam, const AtomSpecies& sp, double rho);
double barrier_height(const LGBeam& beam, const AtomSpecies& sp);

/// Near-axis coefficient U with V(rho) ~= U rho^{2 ell}:
/// U = 2^ell / (4 pi ell!) hbar Gamma^2 / (delta I_s) P / w0^{2 ell + 2}.
double powerlaw_coefficient(const LGBeam& beam, const AtomSpecies& sp);

/// Inverse of powerlaw_coefficient in w0 for a given target U.
double waist_for_coefficient(int ell, double power, double detuning, const AtomSpecies& sp,
                             double coefficient);

}  // namespace lgbec
