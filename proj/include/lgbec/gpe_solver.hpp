#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lgbec/cyl_kernels.hpp"
#include "lgbec/species.hpp"
#include "lgbec/trap_model.hpp"

namespace lgbec {

/// Uniform cell-centred grid: rho_i = (i + 1/2) d_rho on (0, rho_max],
/// z_j = -z_max + (j + 1/2) d_z on [-z_max, z_max].
struct CylGrid {
  double rho_max = 0.0;  // m
  double z_max = 0.0;    // m
  std::size_t n_rho = 0;
  std::size_t n_z = 0;

  void validate() const;
  [[nodiscard]] double d_rho() const { return rho_max / static_cast<double>(n_rho); }
  [[nodiscard]] double d_z() const { return 2.0 * z_max / static_cast<double>(n_z); }
  [[nodiscard]] double rho(std::size_t i) const { return (static_cast<double>(i) + 0.5) * d_rho(); }
  [[nodiscard]] double z(std::size_t j) const { return -z_max + (static_cast<double>(j) + 0.5) * d_z(); }
  [[nodiscard]] std::size_t size() const { return n_rho * n_z; }
  /// Volume 2 pi rho_i d_rho d_z of a cell in row i (axis row corrected,
  /// see kernels::radial_weight).
  [[nodiscard]] double cell_volume(std::size_t i) const;
  /// Grid doubled in both directions over the same extent.
  [[nodiscard]] CylGrid refined() const { return {rho_max, z_max, 2 * n_rho, 2 * n_z}; }
};

/// Grid covering `margin` times the Thomas-Fermi half-widths of n_c atoms.
CylGrid grid_for_trap(const PowerLawTrap& trap, double n_c, const AtomSpecies& sp,
                      std::size_t n_rho, std::size_t n_z, double margin = 1.6);

/// Real amplitudes psi(rho_i, z_j) [m^{-3/2}], index i * n_z + j, normalized
/// so that sum_ij cell_volume(i) psi_ij^2 = 1.
struct CylField {
  CylGrid grid;
  std::vector<double> values;

  [[nodiscard]] double at(std::size_t i, std::size_t j) const { return values[i * grid.n_z + j]; }
  [[nodiscard]] double norm() const;
};

struct GroundStateOptions {
  std::size_t max_iterations = 100000;
  /// Initial step in units of hbar / mu_TF (or the initial energy for g = 0).
  double dt_initial = 0.1;
  /// Growth factor after an accepted step and the cap, same units.
  double dt_growth = 1.25;
  double dt_max = 200.0;
  /// Forces the scalar reference kernels when false.
  bool allow_simd = true;
  /// Records the energy after every accepted step.
  bool record_history = false;
};

struct GroundStateResult {
  CylField psi;
  double mu_c = 0.0;    // J
  double energy = 0.0;  // J per particle
  std::size_t iterations = 0;
  double residual = 0.0;
  double n_c = 0.0;
  PowerLawTrap trap;
  double dt_initial = 0.0;  // s
  double dt_final = 0.0;    // s
  std::size_t dt_halvings = 0;
  std::size_t cg_iterations = 0;
  std::string kernels;
  std::vector<double> energy_history;  // J per particle
  /// Kinetic and potential parts of the energy per particle [J].
  double kinetic = 0.0;
  double potential = 0.0;
  double interaction = 0.0;
};

/// Imaginary-time relaxation towards the GP ground state of n_c atoms.
/// Throws numerics::ConvergenceError after max_iterations and
/// std::invalid_argument when the grid does not cover the condensate.
GroundStateResult solve_ground_state(const PowerLawTrap& trap, double n_c, const AtomSpecies& sp,
                                     const CylGrid& grid, double tol,
                                     const GroundStateOptions& options = {});

struct ContourPoint {
  double rho;  // m
  double z;    // m
};
using Polyline = std::vector<ContourPoint>;

struct IsoContour {
  double fraction = 0.0;
  double level = 0.0;  // |psi|^2 [m^-3]
  std::vector<Polyline> lines;
  /// Half-extents of all contour points (0 when empty).
  [[nodiscard]] double rho_extent() const;
  [[nodiscard]] double z_extent() const;
};

/// Contours |psi|^2 = f max|psi|^2 by marching squares over the cell centres.
std::vector<IsoContour> iso_density_levels(const GroundStateResult& result,
                                           const std::vector<double>& fractions);

/// Volume-weighted std/mean of |psi|^2 over the cells with V <= 0.5 mu_c.
double flatness_metric(const GroundStateResult& result);
/// Same statistic for an arbitrary field and region threshold.
double flatness_metric(const CylField& field, const PowerLawTrap& trap, double threshold);

/// Text grid: '#' header (dimensions, spacings, units) then one line per rho
/// row holding the n_z densities N_c |psi|^2 in atoms / um^3.
std::string density_grid_text(const GroundStateResult& result);

/// Contours as text blocks: '#' header per polyline, then "rho_um z_um" pairs.
std::string contours_text(const std::vector<IsoContour>& contours);

}  // namespace lgbec
