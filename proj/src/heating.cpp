#include "lgbec/heating.hpp"

#include <cmath>
#include <stdexcept>

#include "lgbec/bose_thermo.hpp"
#include "lgbec/constants.hpp"
#include "lgbec/numerics.hpp"
#include "lgbec/special_functions.hpp"

namespace lgbec {

using constants::boltzmann;
using constants::hbar;
using constants::pi;

double thermal_mu(const PowerLawTrap& trap, double n_atoms, double temperature, double mass) {
  if (!(n_atoms > 0.0)) throw std::invalid_argument("thermal_mu: n_atoms must be positive");
  if (!(temperature > 0.0)) throw std::invalid_argument("thermal_mu: T must be positive");
  if (temperature <= tc_ideal(trap, std::max(n_atoms, 1.0), mass)) {
    throw std::domain_error("thermal_mu: below condensation; thermal-cloud model invalid");
  }
  const double kt = boltzmann * temperature;
  auto excess = [&](double w) { return eos_total_number(trap, temperature, -w * kt, mass) - n_atoms; };
  double hi = 1.0;
  while (excess(hi) > 0.0) hi *= 2.0;
  double lo = 1e-30;
  const double w = numerics::bisect_log(excess, lo, hi, 1e-13);
  return -w * kt;
}

ThermalCloud make_thermal_cloud(const PowerLawTrap& trap, double n_atoms, double temperature,
                                double mass) {
  return {trap, temperature, thermal_mu(trap, n_atoms, temperature, mass), n_atoms, mass};
}

namespace {

void check_3dlg(const ThermalCloud& cloud, const LGBeam& beam, const AtomSpecies& sp) {
  const PowerLawTrap& t = cloud.trap;
  beam.validate();
  if (t.alpha != t.beta || t.alpha != 2 * beam.ell) {
    throw std::invalid_argument("average_intensity_3dlg: trap is not the 3D_LG configuration of this beam");
  }
  if (std::abs(t.u_perp - t.u_z) > 1e-12 * t.u_perp) {
    throw std::invalid_argument("average_intensity_3dlg: 3D_LG requires u_perp = u_z");
  }
  const double u_beam = powerlaw_coefficient(beam, sp);
  if (std::abs(u_beam - t.u_perp) > 1e-6 * t.u_perp) {
    throw std::invalid_argument("average_intensity_3dlg: beam does not realize the trap coefficient");
  }
  if (!(cloud.mu < 0.0)) throw std::invalid_argument("average_intensity_3dlg: cloud must be thermal (mu < 0)");
}

double bose_ratio(const ThermalCloud& cloud) {
  const double eta = cloud.trap.eta();
  const double w = -cloud.mu / (boltzmann * cloud.temperature);
  return bose_g_exp(eta + 2.0, w) / bose_g_exp(eta + 1.0, w);
}

double log_prefactor_core(const LGBeam& beam) {
  const int l = beam.ell;
  return (l + 1.0) * std::log(2.0) + std::log(beam.power) - std::log(static_cast<double>(l)) -
         std::lgamma(l + 1.0) - (2.0 * l + 2.0) * std::log(beam.waist);
}

}  // namespace

double average_intensity_3dlg(const ThermalCloud& cloud, const LGBeam& beam, const AtomSpecies& sp) {
  check_3dlg(cloud, beam, sp);
  const double kt_over_u = boltzmann * cloud.temperature / cloud.trap.u_perp;
  return std::exp(log_prefactor_core(beam)) / pi * kt_over_u * bose_ratio(cloud);
}

double average_intensity_3dlg_printed_prefactor(const ThermalCloud& cloud, const LGBeam& beam,
                                                const AtomSpecies& sp) {
  check_3dlg(cloud, beam, sp);
  const double kt_over_u = boltzmann * cloud.temperature / cloud.trap.u_perp;
  return 3.0 * std::exp(log_prefactor_core(beam)) * kt_over_u * bose_ratio(cloud);
}

double average_intensity_quadrature(const ThermalCloud& cloud, const LGBeam& beam,
                                    bool power_law_only) {
  beam.validate();
  const PowerLawTrap& t = cloud.trap;
  const double kt = boltzmann * cloud.temperature;
  const double w_mu = -cloud.mu / kt;
  // Reduced coordinates: rho = (kT/U_perp)^{1/alpha} x, z = (kT/U_z)^{1/beta} y.
  const double r_scale = std::pow(kt / t.u_perp, 1.0 / t.alpha);
  const double log_amp = std::log(2.0) - std::log(pi) - std::lgamma(beam.ell + 1.0) +
                         std::log(beam.power) - 2.0 * std::log(beam.waist);
  auto intensity_at = [&](double rho) {
    const double s = 2.0 * rho * rho / (beam.waist * beam.waist);
    if (rho == 0.0) return 0.0;
    const double base = std::exp(log_amp + beam.ell * std::log(s));
    return power_law_only ? base : base * std::exp(-s);
  };
  const double x_max = std::pow(w_mu + 60.0, 1.0 / t.alpha);
  const double y_max = std::pow(w_mu + 60.0, 1.0 / t.beta);
  auto density = [&](double x, double y) {
    const double v = std::pow(x, t.alpha) + std::pow(y, t.beta);
    return bose_g_exp(1.5, w_mu + v);
  };
  double num = 0.0;
  double den = 0.0;
  const int panels = 24;
  const auto& gl = numerics::gauss_legendre(16);
  for (int pi_ = 0; pi_ < panels; ++pi_) {
    const double xa = x_max * pi_ / panels;
    const double xb = x_max * (pi_ + 1) / panels;
    for (std::size_t a = 0; a < gl.nodes.size(); ++a) {
      const double x = 0.5 * (xa + xb) + 0.5 * (xb - xa) * gl.nodes[a];
      const double wx = 0.5 * (xb - xa) * gl.weights[a];
      const double inten = intensity_at(x * r_scale);
      for (int pj = 0; pj < panels; ++pj) {
        const double ya = y_max * pj / panels;
        const double yb = y_max * (pj + 1) / panels;
        for (std::size_t b = 0; b < gl.nodes.size(); ++b) {
          const double y = 0.5 * (ya + yb) + 0.5 * (yb - ya) * gl.nodes[b];
          const double wy = 0.5 * (yb - ya) * gl.weights[b];
          const double d = density(x, y) * x * wx * wy;
          num += d * inten;
          den += d;
        }
      }
    }
  }
  return num / den;
}

double scattering_rate(double avg_intensity, const AtomSpecies& sp, double detuning) {
  if (!(detuning > 0.0)) throw std::invalid_argument("scattering_rate: detuning must be positive");
  if (avg_intensity < 0.0) throw std::invalid_argument("scattering_rate: negative intensity");
  const double g = sp.gamma_s;
  const double g2 = g * g;
  return avg_intensity * g2 * g /
         (2.0 * (sp.i_sat * g2 + avg_intensity * g2 + 4.0 * sp.i_sat * detuning * detuning));
}

double recoil_temperature(const AtomSpecies& sp) {
  const double k = 2.0 * pi / sp.lambda0;
  return hbar * hbar * k * k / (sp.mass * boltzmann);
}

double heating_rate(double eta_sc, const AtomSpecies& sp) {
  if (eta_sc < 0.0) throw std::invalid_argument("heating_rate: negative scattering rate");
  return 2.0 / 3.0 * recoil_temperature(sp) * eta_sc;
}

std::vector<std::string> heating_warnings(const ThermalCloud& cloud, const LGBeam& beam,
                                          const AtomSpecies& sp) {
  std::vector<std::string> out;
  const double kt = boltzmann * cloud.temperature;
  if (kt > 0.2 * barrier_height(beam, sp)) {
    out.push_back("k_B T exceeds 0.2 of the ring barrier; power-law intensity approximation is poor");
  }
  const HalfWidths hw = classical_half_widths(cloud.trap, kt);
  if (2.0 * hw.z > 0.5 * rayleigh_range(beam)) {
    out.push_back("cloud length exceeds half the Rayleigh range");
  }
  return out;
}

}  // namespace lgbec
