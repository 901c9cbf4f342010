#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace lgbec {

/// Two-level atomic data used by every other module. All fields are SI:
/// mass [kg], gamma_s [rad/s], i_sat [W/m^2], a_s [m], lambda0 [m].
struct AtomSpecies {
  std::string name;
  double mass = 0.0;
  double gamma_s = 0.0;
  double i_sat = 0.0;
  double a_s = 0.0;
  double lambda0 = 0.0;

  /// Throws std::invalid_argument on non-positive fields or a_s >= 100 nm.
  void validate() const;

  /// Copy with a different scattering length (validation is left to the caller
  /// so that the non-interacting limit a_s = 0 can be explored).
  [[nodiscard]] AtomSpecies with_scattering_length(double a) const {
    AtomSpecies s = *this;
    s.a_s = a;
    return s;
  }
};

/// Parses a flat `key = value` document. Keys carry explicit unit suffixes:
///
///   mass_kg | mass_amu
///   gamma_s_over_2pi_Hz | gamma_s_over_2pi_MHz | gamma_s_rad_per_s
///   i_sat_W_per_m2 | i_sat_mW_per_cm2
///   a_s_m | a_s_nm | a_s_bohr
///   lambda0_m | lambda0_nm
///
/// plus an optional `name`. Lines starting with '#' are comments.
AtomSpecies parse_species(std::string_view document);

/// Reads and parses a species file.
AtomSpecies load_species(const std::filesystem::path& path);

/// Path of the shipped Rb-87 data file.
std::filesystem::path default_species_path();

/// Loads the shipped Rb-87 defaults.
AtomSpecies rubidium87();

/// g = 4 pi hbar^2 a_s / m  [J m^3]
double interaction_strength(const AtomSpecies& sp);

}  // namespace lgbec
