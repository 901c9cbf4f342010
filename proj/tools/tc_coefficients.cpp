// Regenerates data/tc_coefficients.txt:
//   tc_coefficients > data/tc_coefficients.txt
#include <cmath>
#include <cstdio>
#include <set>
#include <vector>

#include "lgbec/mean_field_tc.hpp"
#include "lgbec/trap_model.hpp"

int main() {
  std::set<double> etas;
  for (int k = 0; k <= 30; ++k) etas.insert(0.5 + 0.05 * k);
  // Exact shape parameters of the named configurations for ell = 1..8.
  for (int ell = 1; ell <= 8; ++ell) {
    etas.insert(lgbec::shape_eta(2, 2 * ell));
    etas.insert(lgbec::shape_eta(2 * ell, 2));
    etas.insert(lgbec::shape_eta(2 * ell, 2 * ell));
  }
  // Merge values that only differ by rounding of the 0.05 grid.
  std::vector<double> unique;
  for (double e : etas) {
    if (unique.empty() || e - unique.back() > 1e-9) unique.push_back(e);
  }
  std::printf("# Interaction shift of T_c: T_c / T_c0 = 1 + D1 q + D1' q^(2 eta) + D2 q^2\n");
  std::printf("# Semiclassical self-consistent mean-field (Hartree-Fock) critical condition,\n");
  std::printf("# thermodynamic limit. D1: linear response. D1': trap-centre term\n# (zero at the poles eta = 1 and 2).\n");
  std::printf("# D2: least-squares fit of the remaining shift over q in [0.01, 0.03].\n");
  std::printf("# eta  D1  D1'  D2\n");
  for (double eta : unique) {
    const auto row = lgbec::mean_field::coefficient_row(eta);
    std::printf("%.15g %.10f %.10f %.10f\n", row.eta, row.d1, row.d1_prime, row.d2);
    std::fflush(stdout);
  }
  return 0;
}
