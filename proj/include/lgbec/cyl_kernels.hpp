#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace lgbec::kernels {

/// Coefficients per rho row of the radial stencil (rows i-3 .. i+3).
inline constexpr std::size_t kRhoTaps = 7;

/// Fourth-order stencil of -1/2 Laplacian on a cell-centred (rho, z) grid,
/// stored row-major with z contiguous: index i * n_z + j. Radially it is the
/// symmetric flux form built from four-point face gradients, mirrored evenly
/// across the axis; along z it is the five-point stencil. Both directions
/// mirror oddly across the outer walls (psi = 0 at rho_max and +-z_max).
/// The operator is symmetric in the inner product weighted by radial_weight.
struct CylStencil {
  std::size_t n_rho = 0;
  std::size_t n_z = 0;
  const double* rho_coef = nullptr;  // kRhoTaps per row, entries outside the grid are zero
  double c_z = 0.0;                  // 1 / (24 dz^2)
};

/// Quadrature weight of row i for the integral of rho f(rho): rho_i d_rho,
/// with the axis row lowered to 11/24 d_rho^2 so that smooth even f is
/// integrated to fourth order.
double radial_weight(std::size_t i, double d_rho);

/// Owns the coefficients behind a CylStencil.
class CylOperator {
 public:
  CylOperator(std::size_t n_rho, std::size_t n_z, double d_rho, double d_z);
  [[nodiscard]] CylStencil stencil() const { return {n_rho_, n_z_, rho_coef_.data(), c_z_}; }
  /// radial_weight of every row.
  [[nodiscard]] const std::vector<double>& row_weights() const { return row_weights_; }

 private:
  std::size_t n_rho_;
  std::size_t n_z_;
  std::vector<double> rho_coef_;
  std::vector<double> row_weights_;
  double c_z_;
};

/// Function table for one instruction-set level.
struct KernelSet {
  std::string_view name;
  /// out = diag * in + scale * (-1/2 Laplacian) in
  void (*apply)(const CylStencil& s, const double* diag, double scale, const double* in,
                double* out);
  /// Diagonal of the operator above.
  void (*operator_diagonal)(const CylStencil& s, const double* diag, double scale, double* out);
  /// sum_i w_i sum_j x_ij y_ij with one weight per rho row.
  double (*dot_weighted)(const CylStencil& s, const double* row_weights, const double* x,
                         const double* y);
  /// y += a x
  void (*axpy)(std::size_t n, double a, const double* x, double* y);
  /// y = x + b y
  void (*xpay)(std::size_t n, const double* x, double b, double* y);
  /// out = x * y (elementwise)
  void (*multiply)(std::size_t n, const double* x, const double* y, double* out);
};

enum class Backend { Scalar, Avx2 };

const KernelSet& scalar_kernels();
/// Throws std::runtime_error when the AVX2 variant is not compiled in or
/// the CPU lacks AVX2/FMA.
const KernelSet& avx2_kernels();
bool avx2_available();

/// Best available set; LGBEC_KERNELS=scalar in the environment forces the
/// reference kernels.
const KernelSet& active_kernels();
const KernelSet& kernels_for(Backend backend);

/// Five-point z stencil at column j with odd mirroring past both ends
/// (shared by the scalar path and the edges of the vector path).
inline double z_stencil(const double* row, std::size_t j, std::size_t n_z) {
  auto at = [&](std::ptrdiff_t m) {
    const auto n = static_cast<std::ptrdiff_t>(n_z);
    if (m < 0) return -row[-1 - m];
    if (m >= n) return -row[2 * n - 1 - m];
    return row[m];
  };
  const auto jj = static_cast<std::ptrdiff_t>(j);
  return at(jj - 2) - 16.0 * at(jj - 1) + 30.0 * row[j] - 16.0 * at(jj + 1) + at(jj + 2);
}

/// Diagonal entry of the z stencil in units of c_z.
inline double z_diagonal(std::size_t j, std::size_t n_z) { return j == 0 || j + 1 == n_z ? 46.0 : 30.0; }

}  // namespace lgbec::kernels
