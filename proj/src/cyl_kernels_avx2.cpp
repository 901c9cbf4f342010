#include <immintrin.h>

#include <algorithm>

#include "lgbec/cyl_kernels.hpp"

namespace lgbec::kernels {

namespace {

void apply_avx2(const CylStencil& s, const double* diag, double scale, const double* in,
                double* out) {
  const std::size_t nz = s.n_z;
  const __m256d vscale = _mm256_set1_pd(scale);
  const __m256d vcz = _mm256_set1_pd(s.c_z);
  const __m256d sixteen = _mm256_set1_pd(16.0);
  const __m256d thirty = _mm256_set1_pd(30.0);
  for (std::size_t i = 0; i < s.n_rho; ++i) {
    const double* rc = s.rho_coef + kRhoTaps * i;
    const std::size_t t_lo = i < 3 ? 3 - i : 0;
    const std::size_t t_hi = std::min(kRhoTaps, s.n_rho + 3 - i);
    const double* c = in + i * nz;
    const double* d = diag + i * nz;
    double* o = out + i * nz;
    auto scalar_point = [&](std::size_t j) {
      double radial = 0.0;
      for (std::size_t t = t_lo; t < t_hi; ++t) radial += rc[t] * in[(i + t - 3) * nz + j];
      o[j] = d[j] * c[j] + scale * (radial + s.c_z * z_stencil(c, j, nz));
    };
    scalar_point(0);
    scalar_point(1);
    std::size_t j = 2;
    for (; j + 6 <= nz; j += 4) {
      __m256d radial = _mm256_setzero_pd();
      for (std::size_t t = t_lo; t < t_hi; ++t) {
        radial = _mm256_fmadd_pd(_mm256_set1_pd(rc[t]), _mm256_loadu_pd(in + (i + t - 3) * nz + j), radial);
      }
      const __m256d v = _mm256_loadu_pd(c + j);
      const __m256d outer = _mm256_add_pd(_mm256_loadu_pd(c + j - 2), _mm256_loadu_pd(c + j + 2));
      const __m256d inner = _mm256_add_pd(_mm256_loadu_pd(c + j - 1), _mm256_loadu_pd(c + j + 1));
      const __m256d lap = _mm256_fmadd_pd(thirty, v, _mm256_fnmadd_pd(sixteen, inner, outer));
      const __m256d op = _mm256_fmadd_pd(vcz, lap, radial);
      _mm256_storeu_pd(o + j, _mm256_fmadd_pd(vscale, op, _mm256_mul_pd(_mm256_loadu_pd(d + j), v)));
    }
    for (; j < nz; ++j) scalar_point(j);
  }
}

void diagonal_avx2(const CylStencil& s, const double* diag, double scale, double* out) {
  const std::size_t nz = s.n_z;
  for (std::size_t i = 0; i < s.n_rho; ++i) {
    const double r = s.rho_coef[kRhoTaps * i + 3];
    const double k = scale * (r + 30.0 * s.c_z);
    const __m256d vk = _mm256_set1_pd(k);
    const double* d = diag + i * nz;
    double* o = out + i * nz;
    std::size_t j = 0;
    for (; j + 4 <= nz; j += 4) _mm256_storeu_pd(o + j, _mm256_add_pd(_mm256_loadu_pd(d + j), vk));
    for (; j < nz; ++j) o[j] = d[j] + k;
    // the wall columns carry the mirrored neighbour
    o[0] = d[0] + scale * (r + z_diagonal(0, nz) * s.c_z);
    o[nz - 1] = d[nz - 1] + scale * (r + z_diagonal(nz - 1, nz) * s.c_z);
  }
}

double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double dot_weighted_avx2(const CylStencil& s, const double* w, const double* x,
                         const double* y) {
  const std::size_t nz = s.n_z;
  double total = 0.0;
  for (std::size_t i = 0; i < s.n_rho; ++i) {
    const double* xr = x + i * nz;
    const double* yr = y + i * nz;
    __m256d a0 = _mm256_setzero_pd();
    __m256d a1 = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 8 <= nz; j += 8) {
      a0 = _mm256_fmadd_pd(_mm256_loadu_pd(xr + j), _mm256_loadu_pd(yr + j), a0);
      a1 = _mm256_fmadd_pd(_mm256_loadu_pd(xr + j + 4), _mm256_loadu_pd(yr + j + 4), a1);
    }
    double row = hsum(_mm256_add_pd(a0, a1));
    for (; j < nz; ++j) row += xr[j] * yr[j];
    total += w[i] * row;
  }
  return total;
}

void axpy_avx2(std::size_t n, double a, const double* x, double* y) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    _mm256_storeu_pd(y + k, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + k), _mm256_loadu_pd(y + k)));
  }
  for (; k < n; ++k) y[k] += a * x[k];
}

void xpay_avx2(std::size_t n, const double* x, double b, double* y) {
  const __m256d vb = _mm256_set1_pd(b);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    _mm256_storeu_pd(y + k, _mm256_fmadd_pd(vb, _mm256_loadu_pd(y + k), _mm256_loadu_pd(x + k)));
  }
  for (; k < n; ++k) y[k] = x[k] + b * y[k];
}

void multiply_avx2(std::size_t n, const double* x, const double* y, double* out) {
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    _mm256_storeu_pd(out + k, _mm256_mul_pd(_mm256_loadu_pd(x + k), _mm256_loadu_pd(y + k)));
  }
  for (; k < n; ++k) out[k] = x[k] * y[k];
}

const KernelSet kAvx2{"avx2",    apply_avx2, diagonal_avx2, dot_weighted_avx2,
                      axpy_avx2, xpay_avx2,  multiply_avx2};

}  // namespace

const KernelSet& avx2_kernel_table() { return kAvx2; }

}  // namespace lgbec::kernels
