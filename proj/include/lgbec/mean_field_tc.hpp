#pragma once

#include "lgbec/bose_thermo.hpp"

namespace lgbec::mean_field {

/// Semiclassical Hartree-Fock critical condition in a power-law trap of shape
/// eta, in the thermodynamic limit. Reduced variables: u = V / kT and
/// q = a_s / lambda_T.

/// g_s(e^{-w}) for s in {1/2, 3/2}, via the Robinson expansion for small w.
double g_half(double w);
double g_three_halves(double w);

/// Reduced effective potential w(u) solving w = u + 4 q [g_{3/2}(w) - zeta(3/2)].
double effective_potential(double u, double q);

/// N_HF(T) / N_ideal(T) at the onset of condensation.
double number_ratio(double eta, double q);

/// T_c / T_c0 for a given q0 = a_s / lambda_{Tc0}.
double tc_ratio(double eta, double q0);

/// First-order coefficient of (T_c - T_c0)/T_c0 in q.
double d1(double eta);

/// Coefficient of q^{2 eta} from the trap centre (zero at eta = 1 and eta >= 2).
double d1_prime(double eta);

/// Least-squares D2 over the given q values with D1 and D1' fixed.
double d2_fit(double eta, double d1_value, double d1_prime_value);

/// Full table row for one eta (the eta = 1/2 row uses the closed-form limits).
TcCorrectionCoefficients::Row coefficient_row(double eta);

}  // namespace lgbec::mean_field
