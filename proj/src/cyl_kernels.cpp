#include "lgbec/cyl_kernels.hpp"

#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace lgbec::kernels {

#if defined(LGBEC_HAVE_AVX2_KERNELS)
const KernelSet& avx2_kernel_table();
#endif

namespace {

void apply_scalar(const CylStencil& s, const double* diag, double scale, const double* in,
                  double* out) {
  const std::size_t nz = s.n_z;
  for (std::size_t i = 0; i < s.n_rho; ++i) {
    const double* rc = s.rho_coef + kRhoTaps * i;
    const double* c = in + i * nz;
    const double* d = diag + i * nz;
    double* o = out + i * nz;
    for (std::size_t j = 0; j < nz; ++j) {
      double radial = 0.0;
      for (std::size_t t = 0; t < kRhoTaps; ++t) {
        if (i + t < 3 || i + t - 3 >= s.n_rho) continue;
        radial += rc[t] * in[(i + t - 3) * nz + j];
      }
      o[j] = d[j] * c[j] + scale * (radial + s.c_z * z_stencil(c, j, nz));
    }
  }
}

void diagonal_scalar(const CylStencil& s, const double* diag, double scale, double* out) {
  const std::size_t nz = s.n_z;
  for (std::size_t i = 0; i < s.n_rho; ++i) {
    const double r = s.rho_coef[kRhoTaps * i + 3];
    for (std::size_t j = 0; j < nz; ++j) {
      out[i * nz + j] = diag[i * nz + j] + scale * (r + s.c_z * z_diagonal(j, nz));
    }
  }
}

double dot_weighted_scalar(const CylStencil& s, const double* w, const double* x,
                           const double* y) {
  const std::size_t nz = s.n_z;
  double total = 0.0;
  for (std::size_t i = 0; i < s.n_rho; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < nz; ++j) row += x[i * nz + j] * y[i * nz + j];
    total += w[i] * row;
  }
  return total;
}

void axpy_scalar(std::size_t n, double a, const double* x, double* y) {
  for (std::size_t k = 0; k < n; ++k) y[k] += a * x[k];
}

void xpay_scalar(std::size_t n, const double* x, double b, double* y) {
  for (std::size_t k = 0; k < n; ++k) y[k] = x[k] + b * y[k];
}

void multiply_scalar(std::size_t n, const double* x, const double* y, double* out) {
  for (std::size_t k = 0; k < n; ++k) out[k] = x[k] * y[k];
}

const KernelSet kScalar{"scalar",     apply_scalar, diagonal_scalar, dot_weighted_scalar,
                        axpy_scalar, xpay_scalar,  multiply_scalar};

}  // namespace

double radial_weight(std::size_t i, double d_rho) {
  return i == 0 ? 11.0 / 24.0 * d_rho * d_rho : (static_cast<double>(i) + 0.5) * d_rho * d_rho;
}

CylOperator::CylOperator(std::size_t n_rho, std::size_t n_z, double d_rho, double d_z)
    : n_rho_(n_rho), n_z_(n_z), rho_coef_(kRhoTaps * n_rho, 0.0), row_weights_(n_rho), c_z_(1.0 / (24.0 * d_z * d_z)) {
  if (n_rho < 4 || n_z < 4) throw std::invalid_argument("CylOperator: need at least 4 points per axis");
  for (std::size_t i = 0; i < n_rho; ++i) row_weights_[i] = radial_weight(i, d_rho);
  // Face f sits at rho = (f + 1) d_rho between rows f and f + 1; its gradient
  // uses rows f - 1 .. f + 2, mirrored evenly at the axis and oddly at the wall.
  const auto n = static_cast<std::ptrdiff_t>(n_rho);
  constexpr std::array<double, 4> taps = {1.0, -27.0, 27.0, -1.0};
  for (std::ptrdiff_t f = 0; f < n; ++f) {
    std::array<std::ptrdiff_t, 4> row{};
    std::array<double, 4> g{};
    for (std::ptrdiff_t t = 0; t < 4; ++t) {
      std::ptrdiff_t r = f - 1 + t;
      double sign = 1.0;
      if (r < 0) r = -1 - r;
      if (r >= n) {
        r = 2 * n - 1 - r;
        sign = -1.0;
      }
      row[t] = r;
      g[t] = sign * taps[t] / (24.0 * d_rho);
    }
    const double face_weight = static_cast<double>(f + 1) * d_rho * d_rho;
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = 0; b < 4; ++b) {
        const std::ptrdiff_t offset = row[b] - row[a] + 3;
        rho_coef_[kRhoTaps * row[a] + offset] += 0.5 * face_weight * g[a] * g[b] / row_weights_[row[a]];
      }
    }
  }
}

const KernelSet& scalar_kernels() { return kScalar; }

bool avx2_available() {
#if defined(LGBEC_HAVE_AVX2_KERNELS)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelSet& avx2_kernels() {
#if defined(LGBEC_HAVE_AVX2_KERNELS)
  if (avx2_available()) return avx2_kernel_table();
#endif
  throw std::runtime_error("AVX2 kernels are not available on this build or CPU");
}

const KernelSet& kernels_for(Backend backend) {
  return backend == Backend::Avx2 ? avx2_kernels() : scalar_kernels();
}

const KernelSet& active_kernels() {
  static const KernelSet* chosen = [] {
    const char* env = std::getenv("LGBEC_KERNELS");
    if (env != nullptr && std::string(env) == "scalar") return &kScalar;
    return avx2_available() ? &avx2_kernels() : &kScalar;
  }();
  return *chosen;
}

}  // namespace lgbec::kernels
