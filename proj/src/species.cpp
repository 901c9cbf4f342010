#include "lgbec/species.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lgbec/constants.hpp"
#include "lgbec/keyvalue.hpp"

namespace lgbec {

namespace {

struct UnitSuffix {
  std::string_view suffix;
  double to_si;
};

struct FieldSpec {
  std::string_view field;
  std::vector<UnitSuffix> units;
  double AtomSpecies::*member;
};

const std::vector<FieldSpec>& field_specs() {
  using constants::two_pi;
  static const std::vector<FieldSpec> specs = {
      {"mass", {{"kg", 1.0}, {"amu", constants::atomic_mass_unit}}, &AtomSpecies::mass},
      {"gamma_s",
       {{"over_2pi_Hz", two_pi}, {"over_2pi_MHz", two_pi * 1e6}, {"rad_per_s", 1.0}},
       &AtomSpecies::gamma_s},
      {"i_sat", {{"W_per_m2", 1.0}, {"mW_per_cm2", 10.0}}, &AtomSpecies::i_sat},
      {"a_s", {{"m", 1.0}, {"nm", 1e-9}, {"bohr", constants::bohr_radius}}, &AtomSpecies::a_s},
      {"lambda0", {{"m", 1.0}, {"nm", 1e-9}}, &AtomSpecies::lambda0},
  };
  return specs;
}

}  // namespace

void AtomSpecies::validate() const {
  const std::array<std::pair<const char*, double>, 5> fields = {{
      {"mass", mass}, {"gamma_s", gamma_s}, {"i_sat", i_sat}, {"a_s", a_s}, {"lambda0", lambda0}}};
  for (const auto& [label, value] : fields) {
    if (!(value > 0.0)) {
      throw std::invalid_argument(std::string("species field ") + label + " is non-positive");
    }
  }
  if (a_s >= 100e-9) {
    throw std::invalid_argument("species a_s exceeds the dilute-gas bound of 100 nm");
  }
}

AtomSpecies parse_species(std::string_view document) {
  const auto doc = KeyValueDocument::parse(document);
  AtomSpecies sp;
  std::array<bool, 5> seen{};
  for (const auto& [key, value] : doc.entries("")) {
    if (key == "name") {
      sp.name = value;
      continue;
    }
    bool matched = false;
    const auto& specs = field_specs();
    for (std::size_t f = 0; f < specs.size() && !matched; ++f) {
      const auto& spec = specs[f];
      const std::string prefix = std::string(spec.field) + "_";
      if (key.rfind(prefix, 0) != 0) continue;
      // a_s_... must not be confused with other fields sharing a prefix.
      const std::string suffix = key.substr(prefix.size());
      for (const auto& unit : spec.units) {
        if (suffix == unit.suffix) {
          sp.*spec.member = parse_double(value, key) * unit.to_si;
          seen[f] = true;
          matched = true;
          break;
        }
      }
      if (!matched) {
        throw std::invalid_argument("unknown unit suffix '" + suffix + "' for field " +
                                    std::string(spec.field));
      }
    }
    if (!matched) throw std::invalid_argument("unknown species key '" + key + "'");
  }
  for (std::size_t f = 0; f < seen.size(); ++f) {
    if (!seen[f]) {
      throw std::invalid_argument("missing field: " + std::string(field_specs()[f].field));
    }
  }
  sp.validate();
  return sp;
}

AtomSpecies load_species(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open species file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_species(buf.str());
}

std::filesystem::path default_species_path() {
  return std::filesystem::path(LGBEC_DATA_DIR) / "rb87.species";
}

AtomSpecies rubidium87() {
  static const AtomSpecies sp = load_species(default_species_path());
  return sp;
}

double interaction_strength(const AtomSpecies& sp) {
  using constants::hbar;
  return 4.0 * constants::pi * hbar * hbar * sp.a_s / sp.mass;
}

}  // namespace lgbec
