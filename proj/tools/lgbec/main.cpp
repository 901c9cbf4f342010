#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "commands.hpp"
#include "run_config.hpp"

int main(int argc, char** argv) {
  CLI::App app{"lgbec: condensation in Laguerre-Gaussian power-law dark traps"};
  app.set_version_flag("--version", std::string("lgbec ") + LGBEC_VERSION);
  app.require_subcommand(1);
  app.fallthrough();  // global flags are also accepted after the verb

  std::string config_path;
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::vector<std::string> overrides;
  bool print_config = false;
  app.add_option("--config", config_path, "key = value config file")->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--seed", seed, "seed recorded in output metadata (all verbs are deterministic)");
  app.add_option("--threads", threads, "worker threads for row fan-out")->check(CLI::Range(1u, 256u));
  app.add_option("--set", overrides, "override a config value: section.key=value");
  app.add_flag("--print-config", print_config, "print the resolved config and exit");

  using lgbec::cli::RunConfig;
  const std::map<std::string, std::pair<std::string, std::function<int(const RunConfig&)>>> verbs = {
      {"tc-sweep", {"condensation temperature versus ell", lgbec::cli::cmd_tc_sweep}},
      {"levels", {"1D level populations", lgbec::cli::cmd_levels}},
      {"scattering", {"photon scattering and heating rates", lgbec::cli::cmd_scattering}},
      {"waists", {"beam waists and ring radii", lgbec::cli::cmd_waists}},
      {"growth", {"condensate growth curves", lgbec::cli::cmd_growth}},
      {"shapes", {"ground-state densities and iso-density contours", lgbec::cli::cmd_shapes}},
      {"species-check", {"validate a species file and print derived data", lgbec::cli::cmd_species_check}},
  };
  for (const auto& [name, verb] : verbs) app.add_subcommand(name, verb.first);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    auto doc = lgbec::cli::resolve_config(config_path, overrides);
    if (print_config) {
      std::cout << doc.to_string();
      return 0;
    }
    const auto rc = lgbec::cli::make_run_config(std::move(doc), out_dir, threads, seed);
    const std::string verb = app.get_subcommands().front()->get_name();
    const int flagged = verbs.at(verb).second(rc);
    return flagged == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "lgbec: " << e.what() << "\n";
    return 1;
  }
}
