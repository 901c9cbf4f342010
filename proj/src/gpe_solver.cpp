#include "lgbec/gpe_solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "lgbec/constants.hpp"
#include "lgbec/numerics.hpp"

namespace lgbec {

using constants::hbar;
using constants::pi;

void CylGrid::validate() const {
  if (n_rho < 32 || n_z < 32) throw std::invalid_argument("CylGrid: need at least 32 points per axis");
  if (!(rho_max > 0.0) || !(z_max > 0.0)) throw std::invalid_argument("CylGrid: extents must be positive");
}

double CylGrid::cell_volume(std::size_t i) const { return 2.0 * pi * kernels::radial_weight(i, d_rho()) * d_z(); }

CylGrid grid_for_trap(const PowerLawTrap& trap, double n_c, const AtomSpecies& sp,
                      std::size_t n_rho, std::size_t n_z, double margin) {
  const double mu = mu_thomas_fermi(trap, n_c, interaction_strength(sp));
  const HalfWidths hw = classical_half_widths(trap, mu);
  return {margin * hw.rho, margin * hw.z, n_rho, n_z};
}

double CylField::norm() const {
  double total = 0.0;
  for (std::size_t i = 0; i < grid.n_rho; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < grid.n_z; ++j) row += at(i, j) * at(i, j);
    total += grid.cell_volume(i) * row;
  }
  return total;
}

namespace {

// Dimensionless problem: lengths in L = rho_max, energies in hbar^2/(m L^2).
struct Problem {
  CylGrid grid;
  std::optional<kernels::CylOperator> op;
  std::vector<double> weights;  // cell volumes
  std::vector<double> v;        // potential
  std::vector<double> zeros;
  double gamma = 0.0;           // g N / (E L^3)
  kernels::CylStencil stencil;
  const kernels::KernelSet* k = nullptr;

  [[nodiscard]] std::size_t n() const { return grid.size(); }
  [[nodiscard]] double dot(const std::vector<double>& x, const std::vector<double>& y) const {
    return k->dot_weighted(stencil, weights.data(), x.data(), y.data());
  }
};

struct Energies {
  double kinetic;
  double potential;
  double interaction;
  [[nodiscard]] double total() const { return kinetic + potential + interaction; }
  [[nodiscard]] double mu() const { return kinetic + potential + 2.0 * interaction; }
};

Energies energies(const Problem& p, const std::vector<double>& psi, std::vector<double>& work,
                  std::vector<double>& dens) {
  p.k->apply(p.stencil, p.zeros.data(), 1.0, psi.data(), work.data());
  Energies e{};
  e.kinetic = p.dot(psi, work);
  p.k->multiply(p.n(), psi.data(), psi.data(), dens.data());
  e.potential = p.dot(dens, p.v);
  e.interaction = 0.5 * p.gamma * p.dot(dens, dens);
  return e;
}

// Preconditioned CG for (diag + dt K) x = b in the weighted inner product.
std::size_t solve_cg(const Problem& p, const std::vector<double>& diag, double dt,
                     const std::vector<double>& b, std::vector<double>& x, double rel_tol,
                     std::size_t max_iter, bool& indefinite) {
  const std::size_t n = p.n();
  std::vector<double> r(n), z(n), q(n), dinv(n), s(n);
  p.k->operator_diagonal(p.stencil, diag.data(), dt, dinv.data());
  for (std::size_t i = 0; i < n; ++i) dinv[i] = 1.0 / dinv[i];
  p.k->apply(p.stencil, diag.data(), dt, x.data(), q.data());
  for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - q[i];
  const double b_norm = std::sqrt(p.dot(b, b));
  p.k->multiply(n, dinv.data(), r.data(), z.data());
  s = z;
  double rz = p.dot(r, z);
  indefinite = false;
  std::size_t it = 0;
  for (; it < max_iter; ++it) {
    if (std::sqrt(p.dot(r, r)) <= rel_tol * b_norm) break;
    p.k->apply(p.stencil, diag.data(), dt, s.data(), q.data());
    const double sq = p.dot(s, q);
    if (!(sq > 0.0)) {
      indefinite = true;
      break;
    }
    const double alpha = rz / sq;
    p.k->axpy(n, alpha, s.data(), x.data());
    p.k->axpy(n, -alpha, q.data(), r.data());
    p.k->multiply(n, dinv.data(), r.data(), z.data());
    const double rz_new = p.dot(r, z);
    p.k->xpay(n, z.data(), rz_new / rz, s.data());
    rz = rz_new;
  }
  return it;
}

void normalize(const Problem& p, std::vector<double>& psi) {
  const double s = 1.0 / std::sqrt(p.dot(psi, psi));
  for (double& x : psi) x *= s;
}

}  // namespace

GroundStateResult solve_ground_state(const PowerLawTrap& trap, double n_c, const AtomSpecies& sp,
                                     const CylGrid& grid, double tol,
                                     const GroundStateOptions& options) {
  trap.validate();
  grid.validate();
  if (!(tol >= 1e-12 && tol <= 1e-4)) throw std::invalid_argument("solve_ground_state: tol must lie in [1e-12, 1e-4]");
  if (!(n_c >= 1.0)) throw std::invalid_argument("solve_ground_state: n_c must be >= 1");
  const double g = interaction_strength(sp);
  if (g < 0.0) throw std::invalid_argument("solve_ground_state: attractive interactions are not supported");

  double mu_tf = 0.0;
  if (g > 0.0) {
    mu_tf = mu_thomas_fermi(trap, n_c, g);
    const HalfWidths hw = classical_half_widths(trap, mu_tf);
    if (grid.rho_max < 1.5 * hw.rho || grid.z_max < 1.5 * hw.z) {
      throw std::invalid_argument("solve_ground_state: grid must extend 1.5x beyond the Thomas-Fermi half-widths");
    }
  }

  Problem p;
  p.grid = grid;
  p.k = options.allow_simd ? &kernels::active_kernels() : &kernels::scalar_kernels();
  const double length = grid.rho_max;
  const double e_unit = hbar * hbar / (sp.mass * length * length);
  const double dr = grid.d_rho() / length;
  const double dz = grid.d_z() / length;
  p.op.emplace(grid.n_rho, grid.n_z, dr, dz);
  p.weights.resize(grid.n_rho);
  for (std::size_t i = 0; i < grid.n_rho; ++i) p.weights[i] = 2.0 * pi * p.op->row_weights()[i] * dz;
  p.v.resize(grid.size());
  for (std::size_t i = 0; i < grid.n_rho; ++i) {
    for (std::size_t j = 0; j < grid.n_z; ++j) {
      p.v[i * grid.n_z + j] = potential(trap, grid.rho(i), grid.z(j)) / e_unit;
    }
  }
  p.zeros.assign(grid.size(), 0.0);
  p.gamma = g * n_c / (e_unit * length * length * length);
  p.stencil = p.op->stencil();

  const std::size_t n = grid.size();
  std::vector<double> psi(n);
  if (g > 0.0) {
    const double mu = mu_tf / e_unit;
    double peak = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      psi[k] = std::max(mu - p.v[k], 0.0) / p.gamma;
      peak = std::max(peak, psi[k]);
    }
    for (double& x : psi) x = std::sqrt(x + 1e-6 * peak);
  } else {
    const double sr = 0.25;
    const double sz = 0.25 * grid.z_max / length;
    for (std::size_t i = 0; i < grid.n_rho; ++i) {
      for (std::size_t j = 0; j < grid.n_z; ++j) {
        const double r = grid.rho(i) / length;
        const double z = grid.z(j) / length;
        psi[i * grid.n_z + j] = std::exp(-0.5 * (r * r / (sr * sr) + z * z / (sz * sz)));
      }
    }
  }
  normalize(p, psi);

  std::vector<double> work(n), dens(n), diag(n), next(n), hpsi(n);
  Energies e = energies(p, psi, work, dens);
  const double mu_ref = g > 0.0 ? mu_tf / e_unit : e.mu();
  double dt = options.dt_initial / mu_ref;
  // Lowered after each rejected step so growth stays below the stability edge.
  double dt_cap = options.dt_max / mu_ref;

  GroundStateResult result;
  result.kernels = std::string(p.k->name);
  result.dt_initial = dt * hbar / e_unit;
  if (options.record_history) result.energy_history.push_back(e.total() * e_unit);

  auto residual_of = [&](const std::vector<double>& f, double mu) {
    // work holds K f from energies(); H f - mu f
    for (std::size_t k = 0; k < n; ++k) {
      hpsi[k] = work[k] + (p.v[k] + p.gamma * f[k] * f[k] - mu) * f[k];
    }
    return std::sqrt(p.dot(hpsi, hpsi)) / std::abs(mu);
  };

  double residual = residual_of(psi, e.mu());
  std::size_t iter = 0;
  while (residual > tol) {
    if (iter >= options.max_iterations) {
      throw numerics::ConvergenceError("solve_ground_state: no convergence within iteration cap (residual " +
                                           std::to_string(residual) + ")",
                                       residual);
    }
    const double mu = e.mu();
    // Backward-Euler step of the normalized gradient flow with the current
    // chemical potential subtracted: (1 + dt (H[psi] - mu)) next = psi.
    for (std::size_t k = 0; k < n; ++k) diag[k] = 1.0 + dt * (p.v[k] + p.gamma * dens[k] - mu);
    next = psi;
    bool indefinite = false;
    const double cg_tol = std::clamp(1e-3 * residual, 1e-14, 1e-6);
    result.cg_iterations += solve_cg(p, diag, dt, psi, next, cg_tol, 20000, indefinite);
    if (indefinite) {
      dt *= 0.5;
      ++result.dt_halvings;
      continue;
    }
    normalize(p, next);
    std::vector<double> dens_next(n);
    const Energies e_next = energies(p, next, work, dens_next);
    // Close to convergence the energy only moves at rounding level, so an
    // oscillating step is caught by the residual instead.
    const double residual_next = residual_of(next, e_next.mu());
    if (e_next.total() > e.total() + 1e-12 * std::abs(e.total()) || residual_next > 2.0 * residual) {
      dt_cap = std::min(dt_cap, 0.7 * dt);
      dt *= 0.5;
      ++result.dt_halvings;
      // restore K psi in work for the residual bookkeeping
      e = energies(p, psi, work, dens);
      if (dt * mu_ref < 1e-12) {
        throw numerics::ConvergenceError("solve_ground_state: time step underflow", residual);
      }
      continue;
    }
    psi.swap(next);
    dens.swap(dens_next);
    e = e_next;
    ++iter;
    residual = residual_next;
    if (options.record_history) result.energy_history.push_back(e.total() * e_unit);
    dt = std::min(dt * options.dt_growth, dt_cap);
  }

  // Back to SI: psi_SI = psi / L^{3/2}.
  const double to_si = std::pow(length, -1.5);
  result.psi.grid = grid;
  result.psi.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) result.psi.values[k] = psi[k] * to_si;
  result.mu_c = e.mu() * e_unit;
  result.energy = e.total() * e_unit;
  result.kinetic = e.kinetic * e_unit;
  result.potential = e.potential * e_unit;
  result.interaction = e.interaction * e_unit;
  result.iterations = iter;
  result.residual = residual;
  result.n_c = n_c;
  result.trap = trap;
  result.dt_final = dt * hbar / e_unit;
  return result;
}

double IsoContour::rho_extent() const {
  double m = 0.0;
  for (const auto& line : lines) for (const auto& pt : line) m = std::max(m, pt.rho);
  return m;
}

double IsoContour::z_extent() const {
  double m = 0.0;
  for (const auto& line : lines) for (const auto& pt : line) m = std::max(m, std::abs(pt.z));
  return m;
}

namespace {

// Edge identifiers on the node lattice: horizontal edge (i, j)-(i, j+1) and
// vertical edge (i, j)-(i+1, j).
std::uint64_t edge_key(std::size_t i, std::size_t j, bool vertical) {
  return (static_cast<std::uint64_t>(i) << 33) | (static_cast<std::uint64_t>(j) << 1) |
         (vertical ? 1u : 0u);
}

std::vector<Polyline> march(const CylGrid& grid, const std::vector<double>& f, double level) {
  const std::size_t nr = grid.n_rho;
  const std::size_t nz = grid.n_z;
  auto val = [&](std::size_t i, std::size_t j) { return f[i * nz + j]; };
  auto point_on = [&](std::uint64_t key) {
    const bool vertical = key & 1u;
    const std::size_t j = (key >> 1) & 0xffffffffu;
    const std::size_t i = key >> 33;
    const std::size_t i2 = vertical ? i + 1 : i;
    const std::size_t j2 = vertical ? j : j + 1;
    const double a = val(i, j);
    const double b = val(i2, j2);
    const double t = (level - a) / (b - a);
    return ContourPoint{grid.rho(i) + t * (grid.rho(i2) - grid.rho(i)),
                        grid.z(j) + t * (grid.z(j2) - grid.z(j))};
  };

  std::vector<std::pair<std::uint64_t, std::uint64_t>> segments;
  for (std::size_t i = 0; i + 1 < nr; ++i) {
    for (std::size_t j = 0; j + 1 < nz; ++j) {
      // corners: 0 = (i, j), 1 = (i, j+1), 2 = (i+1, j+1), 3 = (i+1, j)
      const double c0 = val(i, j), c1 = val(i, j + 1), c2 = val(i + 1, j + 1), c3 = val(i + 1, j);
      const int code = (c0 >= level) | ((c1 >= level) << 1) | ((c2 >= level) << 2) | ((c3 >= level) << 3);
      if (code == 0 || code == 15) continue;
      const std::uint64_t e01 = edge_key(i, j, false);
      const std::uint64_t e12 = edge_key(i, j + 1, true);
      const std::uint64_t e32 = edge_key(i + 1, j, false);
      const std::uint64_t e03 = edge_key(i, j, true);
      const bool center_high = 0.25 * (c0 + c1 + c2 + c3) >= level;
      switch (code) {
        case 1: case 14: segments.emplace_back(e03, e01); break;
        case 2: case 13: segments.emplace_back(e01, e12); break;
        case 3: case 12: segments.emplace_back(e03, e12); break;
        case 4: case 11: segments.emplace_back(e12, e32); break;
        case 6: case 9: segments.emplace_back(e01, e32); break;
        case 7: case 8: segments.emplace_back(e03, e32); break;
        case 5:
          if (center_high) { segments.emplace_back(e03, e32); segments.emplace_back(e01, e12); }
          else { segments.emplace_back(e03, e01); segments.emplace_back(e12, e32); }
          break;
        case 10:
          if (center_high) { segments.emplace_back(e03, e01); segments.emplace_back(e12, e32); }
          else { segments.emplace_back(e01, e12); segments.emplace_back(e03, e32); }
          break;
        default: break;
      }
    }
  }

  // Join segments sharing an edge point.
  std::multimap<std::uint64_t, std::size_t> by_edge;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    by_edge.emplace(segments[s].first, s);
    by_edge.emplace(segments[s].second, s);
  }
  std::vector<bool> used(segments.size(), false);
  auto take_next = [&](std::uint64_t edge) -> std::ptrdiff_t {
    auto [lo, hi] = by_edge.equal_range(edge);
    for (auto it = lo; it != hi; ++it) {
      if (!used[it->second]) return static_cast<std::ptrdiff_t>(it->second);
    }
    return -1;
  };
  std::vector<Polyline> lines;
  for (std::size_t s0 = 0; s0 < segments.size(); ++s0) {
    if (used[s0]) continue;
    used[s0] = true;
    std::vector<std::uint64_t> chain = {segments[s0].first, segments[s0].second};
    for (int dir = 0; dir < 2; ++dir) {
      while (true) {
        const std::uint64_t tail = chain.back();
        const std::ptrdiff_t s = take_next(tail);
        if (s < 0) break;
        used[s] = true;
        chain.push_back(segments[s].first == tail ? segments[s].second : segments[s].first);
        if (chain.back() == chain.front()) break;
      }
      if (chain.back() == chain.front()) break;
      std::reverse(chain.begin(), chain.end());
    }
    Polyline line;
    for (std::uint64_t key : chain) line.push_back(point_on(key));
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace

std::vector<IsoContour> iso_density_levels(const GroundStateResult& result,
                                           const std::vector<double>& fractions) {
  const CylField& field = result.psi;
  std::vector<double> dens(field.values.size());
  std::size_t argmax = 0;
  for (std::size_t k = 0; k < dens.size(); ++k) {
    dens[k] = field.values[k] * field.values[k];
    if (dens[k] > dens[argmax]) argmax = k;
  }
  const double peak = dens.empty() ? 0.0 : dens[argmax];
  std::vector<IsoContour> out;
  for (double f : fractions) {
    if (!(f > 0.0 && f <= 1.0)) throw std::invalid_argument("iso_density_levels: fraction must lie in (0, 1]");
    IsoContour c;
    c.fraction = f;
    c.level = f * peak;
    if (f == 1.0) {
      const std::size_t i = argmax / field.grid.n_z;
      const std::size_t j = argmax % field.grid.n_z;
      c.lines.push_back({{field.grid.rho(i), field.grid.z(j)}});
    } else {
      c.lines = march(field.grid, dens, c.level);
    }
    out.push_back(std::move(c));
  }
  return out;
}

double flatness_metric(const CylField& field, const PowerLawTrap& trap, double threshold) {
  const CylGrid& g = field.grid;
  double w_sum = 0.0;
  double m1 = 0.0;
  for (std::size_t i = 0; i < g.n_rho; ++i) {
    for (std::size_t j = 0; j < g.n_z; ++j) {
      if (potential(trap, g.rho(i), g.z(j)) > threshold) continue;
      const double w = g.cell_volume(i);
      const double d = field.at(i, j) * field.at(i, j);
      w_sum += w;
      m1 += w * d;
    }
  }
  if (w_sum == 0.0) throw std::invalid_argument("flatness_metric: empty region");
  const double mean = m1 / w_sum;
  double var = 0.0;
  for (std::size_t i = 0; i < g.n_rho; ++i) {
    for (std::size_t j = 0; j < g.n_z; ++j) {
      if (potential(trap, g.rho(i), g.z(j)) > threshold) continue;
      const double d = field.at(i, j) * field.at(i, j) - mean;
      var += g.cell_volume(i) * d * d;
    }
  }
  return std::sqrt(var / w_sum) / mean;
}

double flatness_metric(const GroundStateResult& result) {
  return flatness_metric(result.psi, result.trap, 0.5 * result.mu_c);
}

std::string density_grid_text(const GroundStateResult& result) {
  const CylGrid& g = result.psi.grid;
  std::ostringstream os;
  char buf[64];
  os << "# lgbec density grid\n";
  os << "# n_rho " << g.n_rho << "\n# n_z " << g.n_z << "\n";
  std::snprintf(buf, sizeof buf, "%.12e", g.d_rho() * 1e6);
  os << "# d_rho_um " << buf << "\n";
  std::snprintf(buf, sizeof buf, "%.12e", g.d_z() * 1e6);
  os << "# d_z_um " << buf << "\n";
  std::snprintf(buf, sizeof buf, "%.12e", g.rho(0) * 1e6);
  os << "# rho0_um " << buf << "\n";
  std::snprintf(buf, sizeof buf, "%.12e", g.z(0) * 1e6);
  os << "# z0_um " << buf << "\n";
  os << "# layout: one line per rho row, n_z values along z\n";
  os << "# units: atoms/um^3 (N_c |psi|^2)\n";
  const double scale = result.n_c * 1e-18;
  for (std::size_t i = 0; i < g.n_rho; ++i) {
    for (std::size_t j = 0; j < g.n_z; ++j) {
      const double v = result.psi.at(i, j);
      std::snprintf(buf, sizeof buf, "%.9e", v * v * scale);
      if (j > 0) os << ' ';
      os << buf;
    }
    os << '\n';
  }
  return os.str();
}

std::string contours_text(const std::vector<IsoContour>& contours) {
  std::ostringstream os;
  char buf[96];
  os << "# lgbec iso-density contours (rho_um z_um)\n";
  for (const auto& c : contours) {
    for (std::size_t l = 0; l < c.lines.size(); ++l) {
      std::snprintf(buf, sizeof buf, "# fraction %.6g polyline %zu points %zu\n", c.fraction, l,
                    c.lines[l].size());
      os << buf;
      for (const auto& pt : c.lines[l]) {
        std::snprintf(buf, sizeof buf, "%.9e %.9e\n", pt.rho * 1e6, pt.z * 1e6);
        os << buf;
      }
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace lgbec
