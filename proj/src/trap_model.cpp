#include "lgbec/trap_model.hpp"

#include <cmath>
#include <stdexcept>

#include "lgbec/constants.hpp"

namespace lgbec {

using constants::pi;

void PowerLawTrap::validate() const {
  if (alpha < 2 || beta < 2 || alpha % 2 != 0 || beta % 2 != 0) {
    throw std::invalid_argument("power-law trap: alpha and beta must be even integers >= 2");
  }
  if (!(u_perp > 0.0) || !(u_z > 0.0) || !std::isfinite(u_perp) || !std::isfinite(u_z)) {
    throw std::invalid_argument("power-law trap: u_perp and u_z must be positive and finite");
  }
}

double PowerLawTrap::eta() const { return shape_eta(alpha, beta); }

std::string_view to_string(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::OneD_LG: return "1D_LG";
    case ConfigKind::TwoD_LG: return "2D_LG";
    case ConfigKind::ThreeD_LG: return "3D_LG";
  }
  return "?";
}

ConfigKind parse_config_kind(std::string_view text) {
  if (text == "1D_LG" || text == "1D") return ConfigKind::OneD_LG;
  if (text == "2D_LG" || text == "2D") return ConfigKind::TwoD_LG;
  if (text == "3D_LG" || text == "3D") return ConfigKind::ThreeD_LG;
  throw std::invalid_argument("unknown configuration '" + std::string(text) + "'");
}

double potential(const PowerLawTrap& trap, double rho, double z) {
  return trap.u_perp * std::pow(rho, trap.alpha) + trap.u_z * std::pow(z, trap.beta);
}

double shape_eta(int alpha, int beta) {
  if (alpha < 2 || beta < 2 || alpha % 2 != 0 || beta % 2 != 0) {
    throw std::invalid_argument("shape_eta: alpha and beta must be even integers >= 2");
  }
  return 2.0 / alpha + 1.0 / beta + 0.5;
}

namespace {

double log_gamma_product(int alpha, int beta) {
  return std::lgamma(2.0 / alpha + 1.0) + std::lgamma(1.0 / beta + 1.0);
}

}  // namespace

double log_c_alpha_beta(const PowerLawTrap& trap) {
  trap.validate();
  return -2.0 / trap.alpha * std::log(trap.u_perp) - 1.0 / trap.beta * std::log(trap.u_z) +
         log_gamma_product(trap.alpha, trap.beta);
}

double c_alpha_beta(const PowerLawTrap& trap) { return std::exp(log_c_alpha_beta(trap)); }

double trap_volume(const PowerLawTrap& trap, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("trap_volume: epsilon must be positive");
  const double eta = trap.eta();
  return std::exp(std::log(2.0 * pi) + log_c_alpha_beta(trap) - std::lgamma(eta + 0.5) +
                  (eta - 0.5) * std::log(epsilon));
}

HalfWidths classical_half_widths(const PowerLawTrap& trap, double epsilon) {
  return {std::pow(epsilon / trap.u_perp, 1.0 / trap.alpha),
          std::pow(epsilon / trap.u_z, 1.0 / trap.beta)};
}

double mu_thomas_fermi_or_zero(const PowerLawTrap& trap, double n_c, double g) {
  if (n_c <= 0.0) return 0.0;
  const double eta = trap.eta();
  const double log_base = std::log(g) + std::lgamma(eta + 1.5) - std::log(2.0 * pi) -
                          log_c_alpha_beta(trap) + std::log(n_c);
  return std::exp(2.0 / (2.0 * eta + 1.0) * log_base);
}

double mu_thomas_fermi(const PowerLawTrap& trap, double n_c, double g) {
  if (!(g > 0.0)) throw std::invalid_argument("mu_thomas_fermi: undefined for g <= 0");
  if (!(n_c >= 1.0)) throw std::invalid_argument("mu_thomas_fermi: n_c must be >= 1");
  return mu_thomas_fermi_or_zero(trap, n_c, g);
}

double condensate_volume(const PowerLawTrap& trap, double n_c, double g) {
  return trap_volume(trap, mu_thomas_fermi(trap, n_c, g));
}

double condensate_volume_closed_form(const PowerLawTrap& trap, double n_c, double g) {
  if (!(g > 0.0)) throw std::invalid_argument("condensate_volume: undefined for g <= 0");
  const double eta = trap.eta();
  const double log_c = log_c_alpha_beta(trap);
  const double log_inner = std::log(g) + std::lgamma(eta + 1.5) - std::log(2.0 * pi) - log_c +
                           std::log(n_c);
  return std::exp(std::log(2.0 * pi) + log_c - std::lgamma(eta + 0.5) +
                  (2.0 * eta - 1.0) / (2.0 * eta + 1.0) * log_inner);
}

TrapConfiguration build_configuration(ConfigKind kind, int ell, const AtomSpecies& sp,
                                      double n_atoms, double target_vc, double tightness_ratio) {
  if (ell < 1) throw std::invalid_argument("build_configuration: ell must be >= 1");
  if (!(target_vc > 0.0)) throw std::invalid_argument("build_configuration: target volume must be positive");
  if (!(n_atoms >= 1.0)) throw std::invalid_argument("build_configuration: n_atoms must be >= 1");
  if (!(tightness_ratio > 0.0)) throw std::invalid_argument("build_configuration: tightness ratio must be positive");
  const double g = interaction_strength(sp);
  if (!(g > 0.0)) throw std::invalid_argument("build_configuration: requires a_s > 0");

  TrapConfiguration config;
  config.kind = kind;
  config.ell = ell;
  config.tightness_ratio = kind == ConfigKind::ThreeD_LG ? 1.0 : tightness_ratio;
  PowerLawTrap& trap = config.trap;
  switch (kind) {
    case ConfigKind::OneD_LG: trap.alpha = 2; trap.beta = 2 * ell; break;
    case ConfigKind::TwoD_LG: trap.alpha = 2 * ell; trap.beta = 2; break;
    case ConfigKind::ThreeD_LG: trap.alpha = 2 * ell; trap.beta = 2 * ell; break;
  }
  const double eta = trap.eta();

  // With V = mu at the half-widths (R_perp, R_z), the TF volume is
  // K R_perp^2 R_z independently of mu, and TF normalization gives
  // mu = g N (eta + 1/2) / V_c. Both conditions close in closed form.
  const double log_k = std::log(2.0 * pi) + log_gamma_product(trap.alpha, trap.beta) -
                       std::lgamma(eta + 0.5);
  const double log_v = std::log(target_vc);
  const double log_r = std::log(config.tightness_ratio);
  double log_r_perp = 0.0;
  double log_r_z = 0.0;
  switch (kind) {
    case ConfigKind::OneD_LG:  // z is the power-law (wide) direction
      log_r_perp = (log_v - log_k - log_r) / 3.0;
      log_r_z = log_r_perp + log_r;
      break;
    case ConfigKind::TwoD_LG:  // rho is the power-law (wide) direction
      log_r_z = (log_v - log_k - 2.0 * log_r) / 3.0;
      log_r_perp = log_r_z + log_r;
      break;
    case ConfigKind::ThreeD_LG:
      log_r_perp = (log_v - log_k) / 3.0;
      log_r_z = log_r_perp;
      break;
  }
  const double log_mu = std::log(g * n_atoms * (eta + 0.5)) - log_v;
  trap.u_perp = std::exp(log_mu - trap.alpha * log_r_perp);
  trap.u_z = std::exp(log_mu - trap.beta * log_r_z);
  if (kind == ConfigKind::ThreeD_LG) trap.u_z = trap.u_perp;
  trap.validate();
  return config;
}

std::vector<BeamWaist> required_waist(const TrapConfiguration& config, double power,
                                      double detuning, const AtomSpecies& sp) {
  if (!(power > 0.0) || !(detuning > 0.0)) {
    throw std::invalid_argument("required_waist: power and detuning must be positive");
  }
  std::vector<BeamWaist> out;
  auto add = [&](BeamRole role, int order, double u, bool approximate) {
    BeamWaist w;
    w.role = role;
    w.ell = order;
    w.coefficient = u;
    w.waist = waist_for_coefficient(order, power, detuning, sp, u);
    w.ring_radius = w.waist * std::sqrt(0.5 * order);
    w.approximate = approximate;
    out.push_back(w);
  };
  add(BeamRole::Circular, config.trap.alpha / 2, config.trap.u_perp, false);
  add(BeamRole::LightSheet, config.trap.beta / 2, config.trap.u_z, true);
  return out;
}

std::size_t power_law_beam_index(const TrapConfiguration& config) {
  return config.kind == ConfigKind::OneD_LG ? 1 : 0;
}

TrapConfiguration realize_beams(const TrapConfiguration& config, double power, double detuning,
                                double wavelength, const AtomSpecies& sp) {
  TrapConfiguration out = config;
  out.beams.clear();
  for (const BeamWaist& w : required_waist(config, power, detuning, sp)) {
    ConfiguredBeam cb;
    cb.role = w.role;
    cb.approximate = w.approximate;
    cb.beam = LGBeam{w.ell, power, w.waist, detuning, wavelength};
    out.beams.push_back(cb);
  }
  return out;
}

}  // namespace lgbec
