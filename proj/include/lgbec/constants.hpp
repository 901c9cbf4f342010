#pragma once

#include <numbers>

namespace lgbec::constants {

// Exact SI values (2019 redefinition).
inline constexpr double planck = 6.62607015e-34;                  // J s
inline constexpr double hbar = planck / (2.0 * std::numbers::pi);  // J s
inline constexpr double boltzmann = 1.380649e-23;                 // J / K
inline constexpr double speed_of_light = 299792458.0;             // m / s

inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg
inline constexpr double bohr_radius = 5.29177210903e-11;       // m

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

}  // namespace lgbec::constants
