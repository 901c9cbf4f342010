#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lgbec/lg_optics.hpp"
#include "lgbec/species.hpp"

namespace lgbec {

/// V(rho, z) = u_perp rho^alpha + u_z z^beta with even alpha, beta >= 2.
struct PowerLawTrap {
  int alpha = 2;
  int beta = 2;
  double u_perp = 0.0;  // J / m^alpha
  double u_z = 0.0;     // J / m^beta

  void validate() const;
  [[nodiscard]] double eta() const;
};

enum class ConfigKind { OneD_LG, TwoD_LG, ThreeD_LG };

std::string_view to_string(ConfigKind kind);
ConfigKind parse_config_kind(std::string_view text);

/// Ratio of power-law to harmonic classical half-widths at mu_TF used for the
/// 1D_LG and 2D_LG configurations.
inline constexpr double kDefaultTightnessRatio = 5.0;

/// Role of a beam inside a configuration.
enum class BeamRole { Circular, LightSheet };

struct ConfiguredBeam {
  BeamRole role = BeamRole::Circular;
  LGBeam beam;
  /// The light sheet reuses the circular-beam formula for its coefficient.
  bool approximate = false;
};

struct TrapConfiguration {
  ConfigKind kind = ConfigKind::ThreeD_LG;
  int ell = 1;
  PowerLawTrap trap;
  double tightness_ratio = kDefaultTightnessRatio;
  /// Empty until realize_beams() is called with laser parameters.
  std::vector<ConfiguredBeam> beams;
};

double potential(const PowerLawTrap& trap, double rho, double z);

/// eta = 2/alpha + 1/beta + 1/2
double shape_eta(int alpha, int beta);

/// C = u_perp^{-2/alpha} u_z^{-1/beta} Gamma(2/alpha + 1) Gamma(1/beta + 1)
double c_alpha_beta(const PowerLawTrap& trap);
double log_c_alpha_beta(const PowerLawTrap& trap);

/// Volume of {V <= epsilon}: 2 pi C / Gamma(eta + 1/2) epsilon^{eta - 1/2}.
double trap_volume(const PowerLawTrap& trap, double epsilon);

/// Classical half-widths {rho, z} of the region V <= epsilon.
struct HalfWidths {
  double rho;
  double z;
};
HalfWidths classical_half_widths(const PowerLawTrap& trap, double epsilon);

/// Thomas-Fermi chemical potential for n_c atoms; throws for g <= 0.
double mu_thomas_fermi(const PowerLawTrap& trap, double n_c, double g);

/// Same, with mu_TF(0) = 0 and no validation (used inside rate equations).
double mu_thomas_fermi_or_zero(const PowerLawTrap& trap, double n_c, double g);

/// trap_volume(trap, mu_thomas_fermi(trap, n_c, g))
double condensate_volume(const PowerLawTrap& trap, double n_c, double g);

/// Closed form 2 pi C / Gamma(eta + 1/2) [g Gamma(eta + 3/2) n_c / (2 pi C)]^{(2 eta - 1)/(2 eta + 1)}.
double condensate_volume_closed_form(const PowerLawTrap& trap, double n_c, double g);

/// Builds the named configuration so that the Thomas-Fermi condensate of
/// n_atoms occupies target_vc. For 1D_LG / 2D_LG the harmonic half-width at
/// mu_TF is `tightness_ratio` times smaller than the power-law one.
TrapConfiguration build_configuration(ConfigKind kind, int ell, const AtomSpecies& sp,
                                      double n_atoms, double target_vc,
                                      double tightness_ratio = kDefaultTightnessRatio);

struct BeamWaist {
  BeamRole role = BeamRole::Circular;
  int ell = 1;
  double coefficient = 0.0;  // U in J / m^{2 ell}
  double waist = 0.0;        // m
  double ring_radius = 0.0;  // m
  bool approximate = false;
};

/// Waists realizing u_perp (circular beam, order alpha/2) and u_z (light
/// sheet, order beta/2) at the given power and detuning. Both beams are
/// assumed to carry the same power.
std::vector<BeamWaist> required_waist(const TrapConfiguration& config, double power,
                                      double detuning, const AtomSpecies& sp);

/// Index in required_waist()'s result of the beam whose order is the
/// configuration's ell (the power-law beam).
std::size_t power_law_beam_index(const TrapConfiguration& config);

/// Returns a copy of `config` with beams filled in from required_waist().
TrapConfiguration realize_beams(const TrapConfiguration& config, double power, double detuning,
                                double wavelength, const AtomSpecies& sp);

}  // namespace lgbec
