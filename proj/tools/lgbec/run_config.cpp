#include "run_config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lgbec/constants.hpp"

namespace lgbec::cli {

std::string default_config_text() {
  return R"(# lgbec run configuration
[general]
species =
configurations = 1D_LG, 2D_LG, 3D_LG
ells = 1, 2, 3, 4, 5, 6
n_atoms = 1e6
target_vc_um3 = 5.3e3
power_W = 5
detuning_THz = 10
wavelength_nm = 760.4
tightness_ratio = 5
coefficients =
include_d2 = true

[levels]
ells = 1, 3, 6, INF
kt_over_hbar_omega = 2
n_levels = 8
total_number = 10

[scattering]
configurations = 3D_LG
temperature_uK = 1
detunings_GHz = 10, 100, 1000, 10000

[growth]
ells = 1, 6
f_eq = 0.1
t_end_s = 3
threshold = 0.9
samples = 601
rel_tol = 1e-8

[shapes]
ells = 1, 6
n_rho = 128
n_z = 256
tol = 1e-6
margin = 1.6
fractions = 0.1, 0.5
)";
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void merge(KeyValueDocument& into, const KeyValueDocument& from, const std::string& origin) {
  for (const auto& section : from.sections()) {
    for (const auto& [key, value] : from.entries(section)) {
      if (!into.get(section, key)) {
        throw std::invalid_argument(origin + ": unknown config key [" + section + "] " + key);
      }
      into.set(section, key, value);
    }
  }
}

}  // namespace

KeyValueDocument resolve_config(const std::string& config_path,
                                const std::vector<std::string>& overrides) {
  KeyValueDocument doc = KeyValueDocument::parse(default_config_text());
  if (!config_path.empty()) merge(doc, KeyValueDocument::parse(read_file(config_path)), config_path);
  for (const auto& item : overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--set expects section.key=value, got '" + item + "'");
    const std::string lhs = trim(item.substr(0, eq));
    const std::string value = trim(item.substr(eq + 1));
    const auto dot = lhs.find('.');
    const std::string section = dot == std::string::npos ? "general" : lhs.substr(0, dot);
    const std::string key = dot == std::string::npos ? lhs : lhs.substr(dot + 1);
    if (!doc.get(section, key)) throw std::invalid_argument("--set: unknown config key [" + section + "] " + key);
    doc.set(section, key, value);
  }
  return doc;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

bool parse_bool(const std::string& text, const std::string& what) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw std::invalid_argument(what + ": expected a boolean, got '" + text + "'");
}

std::string RunConfig::get(const std::string& section, const std::string& key) const {
  auto v = doc.get(section, key);
  if (!v) throw std::invalid_argument("missing config key [" + section + "] " + key);
  return *v;
}

double RunConfig::number(const std::string& section, const std::string& key) const {
  return parse_double(get(section, key), section + "." + key);
}

long RunConfig::integer(const std::string& section, const std::string& key) const {
  const double v = number(section, key);
  if (v != static_cast<double>(static_cast<long>(v))) {
    throw std::invalid_argument(section + "." + key + ": expected an integer");
  }
  return static_cast<long>(v);
}

std::vector<std::string> RunConfig::list(const std::string& section, const std::string& key) const {
  return split_list(get(section, key));
}

std::vector<double> RunConfig::numbers(const std::string& section, const std::string& key) const {
  std::vector<double> out;
  for (const auto& item : list(section, key)) out.push_back(parse_double(item, section + "." + key));
  return out;
}

TcCorrectionCoefficients RunConfig::coefficients() const {
  TcCorrectionCoefficients c = coefficients_path.empty()
                                   ? TcCorrectionCoefficients::shipped()
                                   : TcCorrectionCoefficients::load(coefficients_path);
  c.include_d2 = include_d2;
  return c;
}

RunConfig make_run_config(KeyValueDocument doc, const std::filesystem::path& out_dir,
                          unsigned threads, std::uint64_t seed) {
  RunConfig rc;
  rc.doc = std::move(doc);
  const std::string species = rc.get("general", "species");
  rc.species_path = species.empty() ? default_species_path() : std::filesystem::path(species);
  if (!std::filesystem::exists(rc.species_path)) {
    throw std::invalid_argument("species file does not exist: " + rc.species_path.string());
  }
  rc.species = load_species(rc.species_path);
  rc.doc.set("general", "species", rc.species_path.string());
  for (const auto& k : rc.list("general", "configurations")) rc.kinds.push_back(parse_config_kind(k));
  if (rc.kinds.empty()) throw std::invalid_argument("general.configurations is empty");
  for (const auto& e : rc.list("general", "ells")) {
    const double v = parse_double(e, "general.ells");
    if (v < 1 || v != static_cast<int>(v)) throw std::invalid_argument("general.ells: each ell must be an integer >= 1");
    rc.ells.push_back(static_cast<int>(v));
  }
  if (rc.ells.empty()) throw std::invalid_argument("general.ells is empty");
  rc.n_atoms = rc.number("general", "n_atoms");
  rc.target_vc = rc.number("general", "target_vc_um3") * 1e-18;
  rc.power = rc.number("general", "power_W");
  rc.detuning = constants::two_pi * rc.number("general", "detuning_THz") * 1e12;
  rc.wavelength = rc.number("general", "wavelength_nm") * 1e-9;
  rc.tightness = rc.number("general", "tightness_ratio");
  const std::string coeffs = rc.get("general", "coefficients");
  if (!coeffs.empty()) {
    rc.coefficients_path = coeffs;
    if (!std::filesystem::exists(rc.coefficients_path)) {
      throw std::invalid_argument("coefficient table does not exist: " + coeffs);
    }
  }
  rc.doc.set("general", "coefficients", rc.coefficients_path.empty()
                                            ? TcCorrectionCoefficients::shipped_path().string()
                                            : rc.coefficients_path.string());
  rc.include_d2 = parse_bool(rc.get("general", "include_d2"), "general.include_d2");
  if (!(rc.n_atoms >= 1.0) || !(rc.target_vc > 0.0) || !(rc.power > 0.0) || !(rc.detuning > 0.0) ||
      !(rc.wavelength > 0.0) || !(rc.tightness > 0.0)) {
    throw std::invalid_argument("general: n_atoms, target volume, power, detuning, wavelength and tightness must be positive");
  }
  rc.out_dir = out_dir;
  rc.threads = threads == 0 ? 1 : threads;
  rc.seed = seed;
  return rc;
}

}  // namespace lgbec::cli
