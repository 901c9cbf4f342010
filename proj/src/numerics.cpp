#include "lgbec/numerics.hpp"

#include <array>
#include <map>
#include <queue>
#include <mutex>
#include <numbers>

namespace lgbec::numerics {

double bisect(const std::function<double(double)>& f, double lo, double hi, double rel_tol,
              int max_iter, double abs_floor) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw std::invalid_argument("bisect: root is not bracketed");
  }
  for (int it = 0; it < max_iter; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (std::abs(hi - lo) <= std::max(rel_tol * std::abs(mid), abs_floor)) return mid;
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if (std::signbit(fmid) == std::signbit(flo)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double bisect_log(const std::function<double(double)>& f, double lo, double hi, double rel_tol,
                  int max_iter) {
  if (!(lo > 0.0 && hi > lo)) throw std::invalid_argument("bisect_log: need 0 < lo < hi");
  // A bracket of width rel_tol in log space is a relative tolerance in x.
  const double y = bisect([&](double t) { return f(std::exp(t)); }, std::log(lo), std::log(hi),
                          0.0, max_iter, rel_tol);
  return std::exp(y);
}

namespace {

GaussRule make_gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

// Kronrod 15-point extension of the 7-point Gauss rule.
constexpr std::array<double, 8> kXgk = {0.991455371120812639206854697526329,
                                        0.949107912342758524526189684047851,
                                        0.864864423359769072789712788640926,
                                        0.741531185599394439863864773280788,
                                        0.586087235467691130294144845693013,
                                        0.405845151377397166906606412076961,
                                        0.207784955007898467600689403773245,
                                        0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {0.022935322010529224963732008058970,
                                        0.063092092629978553290700663189204,
                                        0.104790010322250183839876322541518,
                                        0.140653259715525918745189590510238,
                                        0.169004726639267902826583426598550,
                                        0.190350578064785409913256402421014,
                                        0.204432940075298892414161999234649,
                                        0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082,
                                       0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975,
                                       0.417959183673469387755102040816327};

struct GkResult {
  double value;
  double error;
};

GkResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    kronrod += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  return {kronrod * h, std::abs((kronrod - gauss) * h)};
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, make_gauss_legendre(order)).first;
  return it->second;
}

double integrate_panels(const std::function<double(double)>& f, double a, double b, int panels) {
  const GaussRule& rule = gauss_legendre(16);
  const double width = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    const double c = lo + 0.5 * width;
    double s = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      s += rule.weights[k] * f(c + 0.5 * width * rule.nodes[k]);
    }
    total += 0.5 * width * s;
  }
  return total;
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, double abs_tol, int max_intervals) {
  if (a == b) return 0.0;
  // Global adaptive bisection: always split the interval with the largest
  // error estimate until the summed estimate meets the tolerance.
  struct Piece {
    double a, b;
    GkResult r;
    bool operator<(const Piece& o) const { return r.error < o.r.error; }
  };
  std::priority_queue<Piece> heap;
  const GkResult whole = gk15(f, a, b);
  heap.push({a, b, whole});
  double value = whole.value;
  double error = whole.error;
  for (int n = 1; n < max_intervals; ++n) {
    const double tol = std::max(abs_tol, rel_tol * std::abs(value));
    if (error <= tol) break;
    const Piece top = heap.top();
    // Below this the estimate is rounding noise.
    if (top.r.error <= 1e-15 * std::abs(top.r.value)) break;
    heap.pop();
    const double m = 0.5 * (top.a + top.b);
    const GkResult left = gk15(f, top.a, m);
    const GkResult right = gk15(f, m, top.b);
    value += left.value + right.value - top.r.value;
    error += left.error + right.error - top.r.error;
    heap.push({top.a, m, left});
    heap.push({m, top.b, right});
  }
  // Re-sum to avoid drift from the running updates.
  double total = 0.0;
  while (!heap.empty()) {
    total += heap.top().r.value;
    heap.pop();
  }
  return total;
}

double integrate_to_infinity(const std::function<double(double)>& f, double a, double rel_tol,
                             double abs_tol) {
  auto g = [&](double t) {
    if (t >= 1.0) return 0.0;
    const double one_minus = 1.0 - t;
    return f(a + t / one_minus) / (one_minus * one_minus);
  };
  return integrate_adaptive(g, 0.0, 1.0, rel_tol, abs_tol);
}

double log_log_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("log_log_slope: size");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace lgbec::numerics
