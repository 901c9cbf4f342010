#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "lgbec/bose_thermo.hpp"
#include "lgbec/keyvalue.hpp"
#include "lgbec/species.hpp"
#include "lgbec/trap_model.hpp"

namespace lgbec::cli {

/// Built-in defaults: the working point of the figures.
std::string default_config_text();

/// Defaults, then the config file, then command-line `section.key=value`
/// overrides. Unknown keys are rejected.
KeyValueDocument resolve_config(const std::string& config_path,
                                const std::vector<std::string>& overrides);

/// Typed view of the [general] section.
struct RunConfig {
  KeyValueDocument doc;
  std::filesystem::path species_path;
  AtomSpecies species;
  std::vector<ConfigKind> kinds;
  std::vector<int> ells;
  double n_atoms = 0.0;
  double target_vc = 0.0;    // m^3
  double power = 0.0;        // W
  double detuning = 0.0;     // rad/s
  double wavelength = 0.0;   // m
  double tightness = 0.0;
  std::filesystem::path coefficients_path;
  bool include_d2 = true;
  std::filesystem::path out_dir;
  unsigned threads = 1;
  std::uint64_t seed = 0;

  [[nodiscard]] std::string get(const std::string& section, const std::string& key) const;
  [[nodiscard]] double number(const std::string& section, const std::string& key) const;
  [[nodiscard]] long integer(const std::string& section, const std::string& key) const;
  [[nodiscard]] std::vector<std::string> list(const std::string& section, const std::string& key) const;
  [[nodiscard]] std::vector<double> numbers(const std::string& section, const std::string& key) const;
  [[nodiscard]] TcCorrectionCoefficients coefficients() const;
};

RunConfig make_run_config(KeyValueDocument doc, const std::filesystem::path& out_dir,
                          unsigned threads, std::uint64_t seed);

std::vector<std::string> split_list(const std::string& text);
bool parse_bool(const std::string& text, const std::string& what);

}  // namespace lgbec::cli
