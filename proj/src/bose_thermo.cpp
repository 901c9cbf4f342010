#include "lgbec/bose_thermo.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "lgbec/constants.hpp"
#include "lgbec/keyvalue.hpp"
#include "lgbec/special_functions.hpp"

namespace lgbec {

using constants::boltzmann;
using constants::hbar;
using constants::pi;
using constants::planck;

double thermal_wavelength(double temperature, double mass) {
  if (!(temperature > 0.0)) throw std::invalid_argument("thermal_wavelength: T must be positive");
  if (!(mass > 0.0)) throw std::invalid_argument("thermal_wavelength: mass must be positive");
  return planck / std::sqrt(2.0 * pi * mass * boltzmann * temperature);
}

double peak_density_onset(double temperature, double mass) {
  const double lambda = thermal_wavelength(temperature, mass);
  return riemann_zeta(1.5) / (lambda * lambda * lambda);
}

double density_of_states(const PowerLawTrap& trap, double epsilon, double mass) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("density_of_states: epsilon must be positive");
  const double eta = trap.eta();
  return std::exp(1.5 * std::log(mass) + log_c_alpha_beta(trap) - 3.0 * std::log(hbar) -
                  0.5 * std::log(2.0 * pi) - std::lgamma(eta + 1.0) + eta * std::log(epsilon));
}

double state_count(const PowerLawTrap& trap, double epsilon, double mass) {
  return density_of_states(trap, epsilon, mass) * epsilon / (trap.eta() + 1.0);
}

double eos_total_number(const PowerLawTrap& trap, double temperature, double mu, double mass) {
  if (!(temperature > 0.0)) throw std::invalid_argument("eos_total_number: T must be positive");
  if (mu > 0.0) throw std::domain_error("eos_total_number: fugacity above 1");
  const double kt = boltzmann * temperature;
  const double w = -mu / kt;
  if (std::isinf(w)) return 0.0;
  const double eta = trap.eta();
  const double lambda = thermal_wavelength(temperature, mass);
  const double thermal = trap_volume(trap, kt) / (lambda * lambda * lambda) *
                         std::tgamma(eta + 0.5) * bose_g_exp(eta + 1.0, w);
  const double ground = w > 0.0 ? 1.0 / std::expm1(w) : 0.0;
  return ground + thermal;
}

double tc_ideal(const PowerLawTrap& trap, double n_atoms, double mass) {
  if (!(n_atoms >= 1.0)) throw std::invalid_argument("tc_ideal: n_atoms must be >= 1");
  const double eta = trap.eta();
  const double log_kt = (0.5 * std::log(2.0 * pi) + 3.0 * std::log(hbar) - 1.5 * std::log(mass) -
                         log_c_alpha_beta(trap) - std::log(riemann_zeta(eta + 1.0)) +
                         std::log(n_atoms)) /
                        (eta + 1.0);
  return std::exp(log_kt) / boltzmann;
}

TcCorrectionCoefficients::TcCorrectionCoefficients(std::vector<Row> rows, std::string source)
    : rows_(std::move(rows)), source_(std::move(source)) {
  if (rows_.empty()) throw std::invalid_argument("coefficient table is empty");
  std::sort(rows_.begin(), rows_.end(), [](const Row& a, const Row& b) { return a.eta < b.eta; });
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Row& r = rows_[i];
    if (!std::isfinite(r.eta) || !std::isfinite(r.d1) || !std::isfinite(r.d1_prime) ||
        !std::isfinite(r.d2)) {
      throw std::invalid_argument("coefficient table: non-finite entry");
    }
    if (i > 0 && r.eta == rows_[i - 1].eta) {
      throw std::invalid_argument("coefficient table: duplicate eta");
    }
    if (r.d2 != 0.0) has_d2_ = true;
  }
}

TcCorrectionCoefficients TcCorrectionCoefficients::parse(const std::string& text,
                                                         std::string source) {
  std::vector<Row> rows;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() < 3 || tokens.size() > 4) {
      throw std::invalid_argument("coefficient table line " + std::to_string(line_no) +
                                  ": expected 3 or 4 columns");
    }
    Row r{};
    r.eta = parse_double(tokens[0], "eta");
    r.d1 = parse_double(tokens[1], "D1");
    r.d1_prime = parse_double(tokens[2], "D1'");
    r.d2 = tokens.size() == 4 ? parse_double(tokens[3], "D2") : 0.0;
    rows.push_back(r);
  }
  return TcCorrectionCoefficients(std::move(rows), std::move(source));
}

TcCorrectionCoefficients TcCorrectionCoefficients::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open coefficient table " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

std::filesystem::path TcCorrectionCoefficients::shipped_path() {
  return std::filesystem::path(LGBEC_DATA_DIR) / "tc_coefficients.txt";
}

const TcCorrectionCoefficients& TcCorrectionCoefficients::shipped() {
  static const TcCorrectionCoefficients table = load(shipped_path());
  return table;
}

TcCorrectionCoefficients TcCorrectionCoefficients::zero() {
  return TcCorrectionCoefficients({{0.5, 0.0, 0.0, 0.0}, {2.0, 0.0, 0.0, 0.0}}, "zero");
}

TcCorrectionCoefficients::Row TcCorrectionCoefficients::at(double eta) const {
  if (rows_.empty()) throw std::logic_error("coefficient table is empty");
  const double tol = 1e-9;
  if (eta < rows_.front().eta - tol || eta > rows_.back().eta + tol) {
    throw std::out_of_range("coefficient table does not cover eta = " + std::to_string(eta));
  }
  Row out{};
  auto it = std::lower_bound(rows_.begin(), rows_.end(), eta,
                             [](const Row& r, double e) { return r.eta < e; });
  if (it != rows_.end() && std::abs(it->eta - eta) <= tol) {
    out = *it;
  } else if (it != rows_.begin() && std::abs(std::prev(it)->eta - eta) <= tol) {
    out = *std::prev(it);
  } else {
    const Row& hi = *it;
    const Row& lo = *std::prev(it);
    const double t = (eta - lo.eta) / (hi.eta - lo.eta);
    out.eta = eta;
    out.d1 = lo.d1 + t * (hi.d1 - lo.d1);
    out.d1_prime = lo.d1_prime + t * (hi.d1_prime - lo.d1_prime);
    out.d2 = lo.d2 + t * (hi.d2 - lo.d2);
  }
  if (!include_d2) out.d2 = 0.0;
  return out;
}

TcBreakdown tc_breakdown(const PowerLawTrap& trap, double n_atoms, const AtomSpecies& sp,
                         const TcCorrectionCoefficients& coeffs) {
  TcBreakdown b;
  b.eta = trap.eta();
  b.tc0 = tc_ideal(trap, n_atoms, sp.mass);
  b.q = sp.a_s / thermal_wavelength(b.tc0, sp.mass);
  if (b.q >= kMaxPerturbativeQ) {
    throw OutOfRegimeError("tc_interacting: q = " + std::to_string(b.q) +
                               " is outside the perturbative regime (q < 0.1)",
                           b.q);
  }
  b.coefficients = coeffs.at(b.eta);
  const auto& c = b.coefficients;
  const double shift =
      b.q > 0.0 ? c.d1 * b.q + c.d1_prime * std::pow(b.q, 2.0 * b.eta) + c.d2 * b.q * b.q : 0.0;
  b.tc = (1.0 + shift) * b.tc0;
  return b;
}

double tc_interacting(const PowerLawTrap& trap, double n_atoms, const AtomSpecies& sp,
                      const TcCorrectionCoefficients& coeffs) {
  return tc_breakdown(trap, n_atoms, sp, coeffs).tc;
}

}  // namespace lgbec
