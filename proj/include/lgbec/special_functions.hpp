#pragma once

namespace lgbec {

/// Bose function g_s(z) = sum_{i>=1} z^i / i^s for 0 <= z <= 1.
///
/// Defined for s > 0 when z < 1 and for s > 1 at z = 1; throws
/// std::domain_error outside [0, 1] and on the divergent point s <= 1, z = 1.
/// Relative accuracy is about 1e-13 over the whole domain.
double bose_g(double s, double z);

/// g_s(e^{-w}) for w >= 0, avoiding the loss of precision in 1 - z when the
/// fugacity is written as an exponential.
double bose_g_exp(double s, double w);

/// Riemann zeta for s > 1 (same summation engine as bose_g at z = 1).
double riemann_zeta(double s);

/// ln(n!) through lgamma, usable far beyond the range of n! in double.
double log_factorial(int n);

}  // namespace lgbec
