#include "commands.hpp"

#include <cmath>
#include <iostream>
#include <sstream>

#include "lgbec/bose_thermo.hpp"
#include "lgbec/constants.hpp"
#include "lgbec/gpe_solver.hpp"
#include "lgbec/heating.hpp"
#include "lgbec/kinetics.hpp"
#include "lgbec/levels.hpp"
#include "lgbec/lg_optics.hpp"
#include "lgbec/trap_model.hpp"
#include "output.hpp"
#include "parallel.hpp"

namespace lgbec::cli {

namespace {

using nlohmann::json;
namespace c = lgbec::constants;

struct Row {
  std::vector<std::string> cells;
  bool error = false;
  json extra;
};

struct Case {
  ConfigKind kind;
  int ell;
};

std::vector<Case> cases(const std::vector<ConfigKind>& kinds, const std::vector<int>& ells) {
  std::vector<Case> out;
  for (auto k : kinds)
    for (int l : ells) out.push_back({k, l});
  return out;
}

std::vector<int> ells_from(const RunConfig& rc, const std::string& section) {
  std::vector<int> out;
  for (const auto& item : rc.list(section, "ells")) {
    const int l = parse_ell(item);
    if (l != kEllInfinity && l < 1) throw std::invalid_argument(section + ".ells: each ell must be >= 1");
    out.push_back(l);
  }
  if (out.empty()) throw std::invalid_argument(section + ".ells is empty");
  return out;
}

std::vector<int> finite_ells(const RunConfig& rc, const std::string& section) {
  auto out = ells_from(rc, section);
  for (int l : out)
    if (l == kEllInfinity) throw std::invalid_argument(section + ".ells: the box limit is only meaningful for levels");
  return out;
}

// Decisions every trap-building command depends on.
void trap_decisions(RunMetadata& meta, const RunConfig& rc) {
  meta.decision("tightness_ratio", rc.tightness);
  meta.decision("tightness_definition",
                "classical turning-point half-width at mu_TF(N), harmonic direction(s) tighter");
  meta.decision("working_volume_um3", rc.target_vc * 1e18);
  meta.decision("inverse_solve", "closed form; else log-bracket bisection rel 1e-12, 200 iterations");
}

void optics_decisions(RunMetadata& meta, const RunConfig& rc) {
  meta.decision("power_W", rc.power);
  meta.decision("beam_power_rule", "same power P assumed for both beams when two beams are present");
  meta.decision("light_sheet_waist", "circular-beam formula applied to the light sheet; approximate");
  meta.decision("wavelength_nm", rc.wavelength * 1e9);
  meta.decision("detuning_over_2pi_THz", rc.detuning / c::two_pi * 1e-12);
}

int count_errors(const std::vector<Row>& rows) {
  int n = 0;
  for (const auto& r : rows) n += r.error ? 1 : 0;
  return n;
}

CsvTable table(std::vector<std::string> columns, const std::vector<Row>& rows) {
  CsvTable t{std::move(columns), {}};
  for (const auto& r : rows) t.rows.push_back(r.cells);
  return t;
}

std::string kind_tag(ConfigKind k) { return std::string(to_string(k)); }

std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (const auto& i : items) s += (s.empty() ? "" : "; ") + i;
  return s;
}

void report(const std::string& what, const std::vector<Row>& rows) {
  const int bad = count_errors(rows);
  std::cerr << what << ": " << rows.size() << " rows";
  if (bad) std::cerr << ", " << bad << " flagged";
  std::cerr << "\n";
}

}  // namespace

int cmd_tc_sweep(const RunConfig& rc) {
  const auto coeffs = rc.coefficients();
  const auto grid = cases(rc.kinds, rc.ells);
  const auto rows = parallel_map<Row>(grid.size(), rc.threads, [&](std::size_t i) {
    const Case cs = grid[i];
    Row r;
    r.cells = {kind_tag(cs.kind), std::to_string(cs.ell), "", "", "", "", "", kOk};
    try {
      const auto cfg = build_configuration(cs.kind, cs.ell, rc.species, rc.n_atoms, rc.target_vc, rc.tightness);
      const double eta = cfg.trap.eta();
      r.cells[2] = fmt(eta, 12);
      r.cells[3] = fmt(tc_ideal(cfg.trap, rc.n_atoms, rc.species.mass) * 1e9);
      const auto b = tc_breakdown(cfg.trap, rc.n_atoms, rc.species, coeffs);
      r.cells[4] = fmt(b.tc * 1e9);
      r.cells[5] = fmt(b.q);
      r.cells[6] = fmt(b.tc / b.tc0 - 1.0);
    } catch (const OutOfRegimeError& e) {
      r.cells[5] = fmt(e.q());
      r.cells[7] = std::string("out_of_regime: ") + e.what();
      r.error = true;
    } catch (const std::exception& e) {
      r.cells[7] = std::string("error: ") + e.what();
      r.error = true;
    }
    return r;
  });

  RunMetadata meta("tc-sweep", rc);
  trap_decisions(meta, rc);
  meta.decision("n_atoms", rc.n_atoms);
  meta.decision("coefficient_table", coeffs.source());
  meta.decision("include_d2", coeffs.include_d2 && coeffs.has_d2() ? "true" : "false");
  meta.decision("max_perturbative_q", kMaxPerturbativeQ);
  write_csv(rc.out_dir / "tc_sweep.csv", meta,
            table({"configuration", "ell", "eta", "Tc0_nK", "Tc_nK", "q", "shift", "flag"}, rows));

  json body;
  body["coefficient_table"] = {{"source", coeffs.source()},
                               {"include_d2", coeffs.include_d2},
                               {"has_d2", coeffs.has_d2()},
                               {"rows", coeffs.rows().size()},
                               {"form", "Tc/Tc0 = 1 + D1 q + D1' q^(2 eta) + D2 q^2, q = a_s / lambda_T(Tc0)"}};
  json used = json::array();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (rows[i].error) continue;
    const double eta = std::stod(rows[i].cells[2]);
    const auto row = coeffs.at(eta);
    used.push_back({{"configuration", rows[i].cells[0]}, {"ell", grid[i].ell}, {"eta", eta},
                    {"D1", row.d1}, {"D1_prime", row.d1_prime}, {"D2", row.d2}});
  }
  body["coefficients_used"] = used;
  body["flagged_rows"] = count_errors(rows);
  write_json(rc.out_dir / "tc_sweep.json", meta, body);
  report("tc-sweep", rows);
  return count_errors(rows);
}

int cmd_levels(const RunConfig& rc) {
  const auto ells = ells_from(rc, "levels");
  const double kt = rc.number("levels", "kt_over_hbar_omega");
  const long n_levels = rc.integer("levels", "n_levels");
  const double total = rc.number("levels", "total_number");
  if (n_levels < 1) throw std::invalid_argument("levels.n_levels must be >= 1");

  struct Result {
    std::vector<Row> rows;
    Row summary;
  };
  const auto results = parallel_map<Result>(ells.size(), rc.threads, [&](std::size_t i) {
    Result out;
    const std::string label = ell_label(ells[i]);
    try {
      const auto pops = level_populations_1d(ells[i], kt, static_cast<int>(n_levels), total);
      for (std::size_t n = 0; n < pops.populations.size(); ++n) {
        Row r;
        r.cells = {label, std::to_string(n), fmt(pops.spectrum.energies[n], 12),
                   fmt(pops.populations[n], 12), fmt(pops.populations[n] / total, 12)};
        out.rows.push_back(r);
      }
      out.summary.cells = {label, fmt(pops.mu, 12), fmt(pops.ground_fraction(), 12),
                           fmt(pops.spectrum.coefficient, 12), kOk};
    } catch (const std::exception& e) {
      out.summary.cells = {label, "", "", "", std::string("error: ") + e.what()};
      out.summary.error = true;
    }
    return out;
  });

  std::vector<Row> rows;
  std::vector<Row> summary;
  for (const auto& r : results) {
    rows.insert(rows.end(), r.rows.begin(), r.rows.end());
    summary.push_back(r.summary);
  }
  RunMetadata meta("levels", rc);
  meta.decision("energy_unit", "hbar omega of the harmonic trap sharing the ground-state turning points");
  meta.decision("turning_points", "ground-level classical turning points fixed at +-1 for every ell");
  meta.decision("eigen_solver", "finite differences with Sturm bisection and Richardson extrapolation");
  meta.decision("kt_over_hbar_omega", kt);
  meta.decision("total_number", total);
  write_csv(rc.out_dir / "levels.csv", meta,
            table({"ell", "level", "energy_hbar_omega", "population", "fraction"}, rows));
  write_csv(rc.out_dir / "levels_summary.csv", meta,
            table({"ell", "mu_hbar_omega", "ground_fraction", "potential_coefficient", "flag"}, summary));
  report("levels", summary);
  return count_errors(summary);
}

int cmd_scattering(const RunConfig& rc) {
  const double temperature = rc.number("scattering", "temperature_uK") * 1e-6;
  std::vector<double> detunings;
  for (double d : rc.numbers("scattering", "detunings_GHz")) detunings.push_back(c::two_pi * d * 1e9);
  if (detunings.empty()) throw std::invalid_argument("scattering.detunings_GHz is empty");
  std::vector<ConfigKind> kinds;
  for (const auto& k : rc.list("scattering", "configurations")) kinds.push_back(parse_config_kind(k));

  struct Item {
    ConfigKind kind;
    double detuning;
    int ell;
  };
  std::vector<Item> items;
  for (auto k : kinds)
    for (int l : rc.ells)
      for (double d : detunings) items.push_back({k, d, l});

  const double t_rec = recoil_temperature(rc.species);
  const auto rows = parallel_map<Row>(items.size(), rc.threads, [&](std::size_t i) {
    const Item it = items[i];
    Row r;
    r.cells = {kind_tag(it.kind), fmt(it.detuning / c::two_pi * 1e-9), std::to_string(it.ell),
               "", "", "", "", "", "", "", "", "", kOk};
    try {
      const auto base = build_configuration(it.kind, it.ell, rc.species, rc.n_atoms, rc.target_vc, rc.tightness);
      const auto cfg = realize_beams(base, rc.power, it.detuning, rc.wavelength, rc.species);
      const LGBeam& beam = cfg.beams.front().beam;
      const auto cloud = make_thermal_cloud(cfg.trap, rc.n_atoms, temperature, rc.species.mass);
      double avg = 0.0;
      std::string method;
      if (it.kind == ConfigKind::ThreeD_LG) {
        avg = average_intensity_3dlg(cloud, beam, rc.species);
        r.cells[11] = fmt(average_intensity_3dlg_printed_prefactor(cloud, beam, rc.species) / avg, 8);
        method = "closed_form";
      } else {
        avg = average_intensity_quadrature(cloud, beam);
        method = "quadrature_circular_beam";
      }
      const double eta_sc = scattering_rate(avg, rc.species, it.detuning);
      r.cells[3] = fmt(cfg.trap.eta(), 12);
      r.cells[4] = fmt(beam.waist * 1e6);
      r.cells[5] = fmt(avg);
      r.cells[6] = fmt(eta_sc);
      r.cells[7] = fmt(heating_rate(eta_sc, rc.species) * 1e9);
      r.cells[8] = method;
      auto warnings = heating_warnings(cloud, beam, rc.species);
      if (it.kind == ConfigKind::TwoD_LG) warnings.push_back("light-sheet beam contribution not included");
      r.cells[9] = fmt(c::boltzmann * temperature / barrier_height(beam, rc.species), 8);
      r.cells[10] = join(warnings);
    } catch (const std::exception& e) {
      r.cells[12] = std::string("error: ") + e.what();
      r.error = true;
    }
    return r;
  });

  RunMetadata meta("scattering", rc);
  trap_decisions(meta, rc);
  optics_decisions(meta, rc);
  meta.decision("temperature_uK", temperature * 1e6);
  meta.decision("heating_rule", "dT/dt = (2/3) T_rec eta_sc");
  meta.decision("recoil_temperature_nK", t_rec * 1e9);
  meta.decision("intensity_model", "power-law part of the circular beam inside the ring; rho > rho0 neglected");
  meta.decision("intensity_prefactor",
                "derived normalization used; printed_prefactor_ratio column reports the alternative printed form");
  write_csv(rc.out_dir / "scattering.csv", meta,
            table({"configuration", "detuning_GHz", "ell", "eta", "waist_um", "avg_intensity_W_per_m2",
                   "eta_sc_per_s", "heating_nK_per_s", "method", "kT_over_barrier", "warnings",
                   "printed_prefactor_ratio", "flag"},
                  rows));
  report("scattering", rows);
  return count_errors(rows);
}

int cmd_waists(const RunConfig& rc) {
  const auto grid = cases(rc.kinds, rc.ells);
  const auto results = parallel_map<std::vector<Row>>(grid.size(), rc.threads, [&](std::size_t i) {
    const Case cs = grid[i];
    std::vector<Row> out;
    try {
      const auto cfg = build_configuration(cs.kind, cs.ell, rc.species, rc.n_atoms, rc.target_vc, rc.tightness);
      const auto waists = required_waist(cfg, rc.power, rc.detuning, rc.species);
      for (const auto& w : waists) {
        LGBeam beam{w.ell, rc.power, w.waist, rc.detuning, rc.wavelength};
        Row r;
        r.cells = {kind_tag(cs.kind), std::to_string(cs.ell),
                   w.role == BeamRole::Circular ? "circular" : "light_sheet", std::to_string(w.ell),
                   fmt(w.waist * 1e6), fmt(w.ring_radius * 1e6),
                   fmt(barrier_height(beam, rc.species) / c::boltzmann * 1e6),
                   fmt(rayleigh_range(beam) * 1e3), w.approximate ? "true" : "false", kOk};
        out.push_back(r);
      }
    } catch (const std::exception& e) {
      Row r;
      r.cells = {kind_tag(cs.kind), std::to_string(cs.ell), "", "", "", "", "", "", "",
                 std::string("error: ") + e.what()};
      r.error = true;
      out.push_back(r);
    }
    return out;
  });
  std::vector<Row> rows;
  for (const auto& r : results) rows.insert(rows.end(), r.begin(), r.end());

  RunMetadata meta("waists", rc);
  trap_decisions(meta, rc);
  optics_decisions(meta, rc);
  write_csv(rc.out_dir / "waists.csv", meta,
            table({"configuration", "ell", "beam", "beam_order", "waist_um", "ring_radius_um", "barrier_uK",
                   "rayleigh_range_mm", "approximate", "flag"},
                  rows));
  report("waists", rows);
  return count_errors(rows);
}

int cmd_growth(const RunConfig& rc) {
  const auto ells = finite_ells(rc, "growth");
  const double f_eq = rc.number("growth", "f_eq");
  const double t_end = rc.number("growth", "t_end_s");
  const double threshold = rc.number("growth", "threshold");
  const long samples = rc.integer("growth", "samples");
  GrowthOptions opts;
  opts.rel_tol = rc.number("growth", "rel_tol");
  if (!(t_end > 0.0)) throw std::invalid_argument("growth.t_end_s must be positive");
  if (samples < 2) throw std::invalid_argument("growth.samples must be >= 2");
  const auto coeffs = rc.coefficients();
  const auto grid = cases(rc.kinds, ells);

  RunMetadata meta("growth", rc);
  trap_decisions(meta, rc);
  meta.decision("n_atoms", rc.n_atoms);
  meta.decision("f_eq", f_eq);
  meta.decision("threshold", threshold);
  meta.decision("operating_point",
                "T from the ideal-gas condensate fraction law at f_eq; bath mu from the Thomas-Fermi mu at n_eq");
  meta.decision("series_truncation_rel", kSeriesRelTol);
  meta.decision("ode", "Dormand-Prince 5(4), Hermite dense output");
  meta.decision("rel_tol", opts.rel_tol);
  meta.decision("abs_tol_fraction_of_n_eq", opts.abs_tol_fraction);

  struct Result {
    Row row;
    std::string file;
    std::string curve;
  };
  const auto results = parallel_map<Result>(grid.size(), rc.threads, [&](std::size_t i) {
    const Case cs = grid[i];
    Result out;
    out.file = "growth_" + kind_tag(cs.kind) + "_l" + std::to_string(cs.ell) + ".txt";
    out.row.cells = {kind_tag(cs.kind), std::to_string(cs.ell), "", "", "", "", "", "", out.file, kOk};
    try {
      const auto cfg = build_configuration(cs.kind, cs.ell, rc.species, rc.n_atoms, rc.target_vc, rc.tightness);
      const auto params = growth_params_for(cfg.trap, rc.species, rc.n_atoms, f_eq, coeffs);
      const auto series = simulate_growth(params, t_end, opts);
      out.curve = growth_series_text(series, static_cast<std::size_t>(samples));
      out.row.cells[2] = fmt(cfg.trap.eta(), 12);
      out.row.cells[3] = fmt(params.temperature * 1e9);
      out.row.cells[4] = fmt(params.mu_bath / c::boltzmann * 1e9);
      out.row.cells[5] = fmt(params.n_eq);
      out.row.cells[7] = series.clamped ? "true" : "false";
      std::vector<std::string> notes = params.warnings;
      if (series.clamped) notes.push_back("growth exponent clamped at equilibrium");
      try {
        out.row.cells[6] = fmt(condensation_time(series, threshold));
      } catch (const std::runtime_error&) {
        out.row.error = true;
        notes.push_back("threshold not reached before t_end");
      }
      if (out.row.error) out.row.cells[9] = "error: " + join(notes);
      else if (!notes.empty()) out.row.cells[9] = "ok; " + join(notes);
    } catch (const std::exception& e) {
      out.row.cells[9] = std::string("error: ") + e.what();
      out.row.error = true;
    }
    return out;
  });

  std::vector<Row> rows;
  for (const auto& r : results) {
    rows.push_back(r.row);
    if (!r.curve.empty()) {
      write_data(rc.out_dir / r.file, meta, "# columns: t_s N_c_over_N\n" + r.curve);
    }
  }
  write_csv(rc.out_dir / "growth_summary.csv", meta,
            table({"configuration", "ell", "eta", "T_nK", "mu_bath_nK", "n_eq", "t_cond_s", "clamped", "curve",
                   "flag"},
                  rows));
  report("growth", rows);
  return count_errors(rows);
}

int cmd_shapes(const RunConfig& rc) {
  const auto ells = finite_ells(rc, "shapes");
  const long n_rho = rc.integer("shapes", "n_rho");
  const long n_z = rc.integer("shapes", "n_z");
  const double tol = rc.number("shapes", "tol");
  const double margin = rc.number("shapes", "margin");
  const auto fractions = rc.numbers("shapes", "fractions");
  if (n_rho < 32 || n_z < 32) throw std::invalid_argument("shapes: n_rho and n_z must be >= 32");
  const auto grid = cases(rc.kinds, ells);

  RunMetadata meta("shapes", rc);
  trap_decisions(meta, rc);
  meta.decision("n_c", rc.n_atoms);
  meta.decision("grid", std::to_string(n_rho) + " x " + std::to_string(n_z) + " (rho x z)");
  meta.decision("grid_margin_over_tf_halfwidth", margin);
  meta.decision("tolerance", tol);
  meta.decision("iso_density_fractions", rc.get("shapes", "fractions"));
  meta.decision("scheme", "imaginary-time backward Euler, Jacobi-preconditioned CG, adaptive step");
  meta.decision("discretization", "fourth-order (rho, z) finite differences, axis quadrature weight 11/24 d_rho^2");
  meta.decision("flatness_region", "volume-weighted std/mean of |psi|^2 over cells with V <= mu_c / 2");

  struct Result {
    Row row;
    std::string stem;
    std::string density;
    std::string contours;
    json summary;
  };
  const auto results = parallel_map<Result>(grid.size(), rc.threads, [&](std::size_t i) {
    const Case cs = grid[i];
    Result out;
    out.stem = "shapes_" + kind_tag(cs.kind) + "_l" + std::to_string(cs.ell);
    out.row.cells = {kind_tag(cs.kind), std::to_string(cs.ell), "", "", "", "", "", "", "", "", kOk};
    try {
      const auto cfg = build_configuration(cs.kind, cs.ell, rc.species, rc.n_atoms, rc.target_vc, rc.tightness);
      const auto g = grid_for_trap(cfg.trap, rc.n_atoms, rc.species, static_cast<std::size_t>(n_rho),
                                   static_cast<std::size_t>(n_z), margin);
      const auto res = solve_ground_state(cfg.trap, rc.n_atoms, rc.species, g, tol);
      const double mu_tf = mu_thomas_fermi(cfg.trap, rc.n_atoms, interaction_strength(rc.species));
      const auto contours = iso_density_levels(res, fractions);
      out.density = density_grid_text(res);
      out.contours = contours_text(contours);
      out.row.cells[2] = fmt(cfg.trap.eta(), 12);
      out.row.cells[3] = fmt(res.mu_c / c::boltzmann * 1e9);
      out.row.cells[4] = fmt(mu_tf / c::boltzmann * 1e9);
      out.row.cells[5] = fmt(flatness_metric(res), 8);
      out.row.cells[6] = std::to_string(res.iterations);
      out.row.cells[7] = fmt(res.residual, 4);
      out.row.cells[8] = res.kernels;
      out.row.cells[9] = fmt(res.energy / c::boltzmann * 1e9);
      json cj = json::array();
      for (const auto& ct : contours) {
        cj.push_back({{"fraction", ct.fraction},
                      {"level_per_um3", ct.level * 1e-18},
                      {"polylines", ct.lines.size()},
                      {"rho_extent_um", ct.rho_extent() * 1e6},
                      {"z_extent_um", ct.z_extent() * 1e6}});
      }
      out.summary = {{"configuration", kind_tag(cs.kind)},
                     {"ell", cs.ell},
                     {"rho_max_um", g.rho_max * 1e6},
                     {"z_max_um", g.z_max * 1e6},
                     {"n_rho", g.n_rho},
                     {"n_z", g.n_z},
                     {"dt_halvings", res.dt_halvings},
                     {"cg_iterations", res.cg_iterations},
                     {"contours", cj}};
    } catch (const std::exception& e) {
      out.row.cells[10] = std::string("error: ") + e.what();
      out.row.error = true;
    }
    return out;
  });

  std::vector<Row> rows;
  json panels = json::array();
  for (const auto& r : results) {
    rows.push_back(r.row);
    if (r.row.error) continue;
    write_data(rc.out_dir / (r.stem + "_density.txt"), meta, r.density);
    write_data(rc.out_dir / (r.stem + "_contours.txt"), meta, r.contours);
    panels.push_back(r.summary);
  }
  write_csv(rc.out_dir / "shapes_summary.csv", meta,
            table({"configuration", "ell", "eta", "mu_c_nK", "mu_tf_nK", "flatness", "iterations", "residual",
                   "kernels", "energy_per_atom_nK", "flag"},
                  rows));
  json body;
  body["panels"] = panels;
  write_json(rc.out_dir / "shapes.json", meta, body);
  report("shapes", rows);
  return count_errors(rows);
}

int cmd_species_check(const RunConfig& rc) {
  const AtomSpecies& sp = rc.species;
  std::vector<Row> rows;
  auto add = [&](const std::string& q, double v, const std::string& unit) {
    rows.push_back({{q, fmt(v, 12), unit, kOk}, false, {}});
  };
  add("mass", sp.mass, "kg");
  add("mass", sp.mass / c::atomic_mass_unit, "amu");
  add("gamma_s_over_2pi", sp.gamma_s / c::two_pi * 1e-6, "MHz");
  add("i_sat", sp.i_sat * 0.1, "mW/cm^2");
  add("a_s", sp.a_s * 1e9, "nm");
  add("a_s", sp.a_s / c::bohr_radius, "bohr");
  add("lambda0", sp.lambda0 * 1e9, "nm");
  add("interaction_strength", interaction_strength(sp), "J m^3");
  add("recoil_temperature", recoil_temperature(sp) * 1e9, "nK");
  add("thermal_wavelength_1uK", thermal_wavelength(1e-6, sp.mass) * 1e9, "nm");
  add("dipole_factor_at_detuning", dipole_factor(rc.detuning, sp), "J m^2/W");
  const double laser_detuning = c::two_pi * c::speed_of_light * (1.0 / rc.wavelength - 1.0 / sp.lambda0);
  add("laser_minus_resonance_over_2pi", laser_detuning / c::two_pi * 1e-12, "THz");
  if (laser_detuning <= 0.0) {
    rows.push_back({{"laser_wavelength", fmt(rc.wavelength * 1e9, 12), "nm",
                     "error: laser is red-detuned; the dark trap needs blue detuning"},
                    true,
                    {}});
  }

  RunMetadata meta("species-check", rc);
  meta.decision("species_file", rc.species_path.string());
  write_csv(rc.out_dir / "species_check.csv", meta, table({"quantity", "value", "unit", "flag"}, rows));
  std::cout << "species " << sp.name << " from " << rc.species_path.string() << "\n";
  for (const auto& r : rows) std::cout << "  " << r.cells[0] << " = " << r.cells[1] << " " << r.cells[2] << "\n";
  return count_errors(rows);
}

}  // namespace lgbec::cli
