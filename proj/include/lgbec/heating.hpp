#pragma once

#include <string>
#include <vector>

#include "lgbec/lg_optics.hpp"
#include "lgbec/species.hpp"
#include "lgbec/trap_model.hpp"

namespace lgbec {

/// Thermal (non-condensed) cloud in a power-law trap.
struct ThermalCloud {
  PowerLawTrap trap;
  double temperature = 0.0;  // K
  double mu = 0.0;           // J, negative
  double n_atoms = 0.0;
  double mass = 0.0;         // kg
};

/// mu < 0 with eos_total_number(trap, T, mu) = n_atoms. Throws when T is at
/// or below the ideal-gas critical temperature.
double thermal_mu(const PowerLawTrap& trap, double n_atoms, double temperature, double mass);
ThermalCloud make_thermal_cloud(const PowerLawTrap& trap, double n_atoms, double temperature,
                                double mass);

/// Averaged intensity of the circular beam over the LDA density of a 3D_LG
/// cloud (alpha = beta = 2 ell, u_perp = u_z = U):
///   2^{ell+1} P / (pi ell ell! w0^{2 ell + 2}) (kT / U) g_{eta+2}(f) / g_{eta+1}(f).
/// Throws std::invalid_argument when the trap and beam do not match.
double average_intensity_3dlg(const ThermalCloud& cloud, const LGBeam& beam,
                              const AtomSpecies& sp);

/// The same expression with the prefactor 3 2^{ell+1} P / (ell ell! w0^{2 ell + 2}).
/// Kept for comparison only; it is larger by a factor 3 pi.
double average_intensity_3dlg_printed_prefactor(const ThermalCloud& cloud, const LGBeam& beam,
                                                const AtomSpecies& sp);

/// Direct quadrature of (1/N) int n(r) I(rho) d^3r with the LDA density
/// lambda^{-3} g_{3/2}(e^{(mu - V)/kT}); any configuration. With
/// power_law_only the beam profile is replaced by its near-axis power law.
double average_intensity_quadrature(const ThermalCloud& cloud, const LGBeam& beam,
                                    bool power_law_only = true);

/// <I> Gamma^3 / (2 [I_s Gamma^2 + <I> Gamma^2 + 4 I_s delta^2])  [1/s]
double scattering_rate(double avg_intensity, const AtomSpecies& sp, double detuning);

/// hbar^2 k^2 / (m k_B) with k = 2 pi / lambda0  [K]
double recoil_temperature(const AtomSpecies& sp);

/// (2/3) T_rec eta_sc  [K/s]
double heating_rate(double eta_sc, const AtomSpecies& sp);

/// Validity notes: k_B T above 0.2 of the ring barrier, trap length beyond
/// half the Rayleigh range.
std::vector<std::string> heating_warnings(const ThermalCloud& cloud, const LGBeam& beam,
                                          const AtomSpecies& sp);

}  // namespace lgbec
