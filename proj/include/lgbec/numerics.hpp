#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgbec::numerics {

/// Raised when an iterative method exhausts its budget.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double last_residual)
      : std::runtime_error(what), last_residual_(last_residual) {}
  [[nodiscard]] double last_residual() const noexcept { return last_residual_; }

 private:
  double last_residual_;
};

inline constexpr double kRootRelTol = 1e-12;
inline constexpr int kRootMaxIter = 200;

/// Bisection for an increasing-or-decreasing f with a sign change on [lo, hi].
/// Stops when the bracket is below rel_tol * |mid| (or abs_floor) or after
/// max_iter halvings; the sequence of evaluated points depends only on the
/// inputs, so the result is bitwise reproducible.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double rel_tol = kRootRelTol, int max_iter = kRootMaxIter, double abs_floor = 0.0);

/// Bisection on log(x) for positive roots spanning many decades.
double bisect_log(const std::function<double(double)>& f, double lo, double hi,
                  double rel_tol = kRootRelTol, int max_iter = kRootMaxIter);

/// Gauss-Legendre nodes/weights on [-1, 1] for the given order (cached).
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre(int order);

/// Composite Gauss-Legendre with `panels` equal panels of order 16.
double integrate_panels(const std::function<double(double)>& f, double a, double b, int panels);

/// Globally adaptive Gauss-Kronrod (7/15) on a finite interval; returns the
/// best estimate once max_intervals is reached.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-10, double abs_tol = 0.0, int max_intervals = 2000);

/// Adaptive integral over [a, inf) via x = a + t / (1 - t).
double integrate_to_infinity(const std::function<double(double)>& f, double a,
                             double rel_tol = 1e-10, double abs_tol = 0.0);

/// Least-squares slope of log(y) against log(x).
double log_log_slope(std::span<const double> x, std::span<const double> y);

}  // namespace lgbec::numerics
