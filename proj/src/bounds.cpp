#include "cgap/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace cgap {
namespace {

constexpr double kGridEnd = 50.0;

// Scan grid on [-1, 50]: geometric spacing away from t = -1 (where the
// weight degenerates) plus a symmetric geometric cluster around t = 0, where
// the maximizer of the high-dimensional objective accumulates like c0 / n.
std::vector<double> scan_grid() {
  std::vector<double> g;
  g.push_back(-1.0);
  const int n_main = 224;
  const double delta = 1e-6;
  const double ratio = std::pow((kGridEnd + 1.0) / delta, 1.0 / (n_main - 1));
  for (int i = 0; i < n_main; ++i) g.push_back(-1.0 + delta * std::pow(ratio, i));
  for (int i = 0; i <= 15; ++i) {
    const double eta = std::pow(10.0, -8.0 + 0.5 * i);
    g.push_back(-eta);
    g.push_back(eta);
  }
  g.push_back(0.0);
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

template <typename F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, double tol, int* iters) {
  const double phi = 0.6180339887498948482;
  double a = lo, b = hi;
  double c = b - phi * (b - a);
  double d = a + phi * (b - a);
  double fc = f(c), fd = f(d);
  int it = 0;
  while (b - a > tol && it < 400) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = f(d);
    }
    ++it;
  }
  if (iters) *iters = it;
  const double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

struct MaxInfo {
  double x = 0.0, fx = 0.0, blo = 0.0, bhi = 0.0;
  int iters = 0;
  int local_maxima = 0;
};

// Grid bracket + golden-section polish.  Non-finite grid values (overflow at
// large t for huge degree) are skipped; a boundary maximum at t = 50 means
// the scan failed to bracket and is reported as non-convergence.
template <typename F>
MaxInfo maximize_scan(F&& f, double tol, const char* what) {
  const std::vector<double> g = scan_grid();
  const int n = static_cast<int>(g.size());
  std::vector<double> fv(n);
  for (int i = 0; i < n; ++i) fv[i] = f(g[i]);

  int best = -1;
  double bestv = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    if (std::isfinite(fv[i]) && fv[i] > bestv) {
      bestv = fv[i];
      best = i;
    }
  if (best < 0) throw ConvergenceFailure(std::string(what) + ": no finite values on scan grid");
  if (best == n - 1)
    throw ConvergenceFailure(std::string(what) + ": maximum at scan boundary t = 50");

  MaxInfo info;
  for (int i = 1; i + 1 < n; ++i)
    if (std::isfinite(fv[i - 1]) && std::isfinite(fv[i]) && std::isfinite(fv[i + 1]) &&
        fv[i] > fv[i - 1] && fv[i] > fv[i + 1])
      ++info.local_maxima;

  info.blo = g[std::max(0, best - 1)];
  info.bhi = g[best + 1];
  auto [x, fx] = golden_max(f, info.blo, info.bhi, tol, &info.iters);
  if (fx < bestv) {  // polish must never fall below the scan value
    x = g[best];
    fx = bestv;
  }
  info.x = x;
  info.fx = fx;
  return info;
}

}  // namespace

double moment(int deg, int m, double t) {
  if (deg < 0 || m < 0) throw PreconditionError("moment: orders must be nonnegative");
  if (t < -1.0) throw PreconditionError("moment: t must be >= -1");
  double acc = 1.0 / (m + 1.0);
  double b = 1.0;  // C(deg, j) t^j
  for (int j = 1; j <= deg; ++j) {
    b *= t * (static_cast<double>(deg - j + 1) / static_cast<double>(j));
    acc += b / (j + m + 1.0);
    // past the peak of |C(deg,j) t^j| the terms only decay
    if (j > std::abs(t) * deg && std::abs(b) < 1e-20 * (1.0 + std::abs(acc))) break;
  }
  return acc;
}

double dn_of_t(int n, double t) {
  if (n < 3) throw PreconditionError("dn_of_t: n must be >= 3");
  if (t < -1.0) throw PreconditionError("dn_of_t: t must be >= -1");
  const double m0 = moment(n - 2, 0, t);
  const double m1 = moment(n - 2, 1, t);
  const double m2 = moment(n - 2, 2, t);
  return m2 / m1 - m1 / m0;
}

double dnk_of_t(int n, int k, double t) {
  if (k < 1 || k > n - 1) throw PreconditionError("dnk_of_t: k must be in [1, n-1]");
  if (t < -1.0) throw PreconditionError("dnk_of_t: t must be >= -1");
  const double a0 = moment(k - 1, n - k, t);
  const double a1 = moment(k - 1, n - k + 1, t);
  const double b0 = moment(k - 1, 0, t);
  const double b1 = moment(k - 1, 1, t);
  return a1 / a0 - b1 / b0;
}

double d3_rational(double t) {
  if (t < -1.0) throw PreconditionError("d3_rational: t must be >= -1");
  return (t * t + 6.0 * t + 6.0) / (6.0 * (2.0 * t * t + 7.0 * t + 6.0));
}

double d3_derivative(double t) {
  if (t < -1.0) throw PreconditionError("d3_derivative: t must be >= -1");
  const double q = 2.0 * t * t + 7.0 * t + 6.0;
  return -(5.0 * t * t + 12.0 * t + 6.0) / (6.0 * q * q);
}

D3Exact d3_exact() {
  D3Exact r;
  r.value = 1.0 - std::sqrt(2.0 / 3.0);
  r.t_max = (std::sqrt(6.0) - 6.0) / 5.0;
  r.derivative_check = std::abs(d3_derivative(r.t_max));
  return r;
}

double cone_limit(int n) {
  if (n < 3) throw PreconditionError("cone_limit: n must be >= 3");
  return 1.0 / (static_cast<double>(n) * (n + 1.0));
}

BoundResult dn(int n, double tol) {
  if (n < 3) throw PreconditionError("dn: n must be >= 3");
  if (!(tol > 0.0)) throw PreconditionError("dn: tol must be positive");
  const MaxInfo info = maximize_scan([n](double t) { return dn_of_t(n, t); }, tol, "dn");
  if (!(info.fx > cone_limit(n)))
    throw ConvergenceFailure("dn: maximum does not exceed the cone limit");
  return BoundResult{n,         n - 1,      info.fx,    info.x,
                     info.blo,  info.bhi,   info.iters, info.local_maxima};
}

BoundResult dnk(int n, int k, double tol) {
  if (k < 1 || k > n - 1) throw PreconditionError("dnk: k must be in [1, n-1]");
  if (!(tol > 0.0)) throw PreconditionError("dnk: tol must be positive");
  const MaxInfo info =
      maximize_scan([n, k](double t) { return dnk_of_t(n, k, t); }, tol, "dnk");
  if (!(info.fx < static_cast<double>(k) / (k + 1.0)))
    throw ConvergenceFailure("dnk: value reached its supremum k / (k + 1)");
  return BoundResult{n,         k,          info.fx,    info.x,
                     info.blo,  info.bhi,   info.iters, info.local_maxima};
}

namespace {

// integral_0^1 x^m e^{c x} dx for m in {0, 1, 2}.  Near c = 0 the closed
// forms cancel catastrophically, so a short series takes over there.
double exp_moment(int m, double c) {
  if (std::abs(c) < 0.5) {
    double term = 1.0;
    double acc = 1.0 / (m + 1.0);
    for (int j = 1; j < 64; ++j) {
      term *= c / j;
      const double add = term / (m + j + 1.0);
      acc += add;
      if (std::abs(add) < 1e-18 * std::abs(acc)) break;
    }
    return acc;
  }
  const double ec = std::exp(c);
  switch (m) {
    case 0:
      return (ec - 1.0) / c;
    case 1:
      return (1.0 + (c - 1.0) * ec) / (c * c);
    case 2:
      return (((c - 2.0) * c + 2.0) * ec - 2.0) / (c * c * c);
    default:
      throw PreconditionError("exp_moment: m must be in {0, 1, 2}");
  }
}

}  // namespace

double limit_objective(double c) {
  const double e0 = exp_moment(0, c);
  const double e1 = exp_moment(1, c);
  const double e2 = exp_moment(2, c);
  return e2 / e1 - e1 / e0;
}

LimitResult limit_constant(double tol) {
  if (!(tol > 0.0)) throw PreconditionError("limit_constant: tol must be positive");
  const int n = 513;
  const double lo = -50.0, hi = 50.0;
  int best = -1;
  double bestv = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double c = lo + (hi - lo) * i / (n - 1);
    const double v = limit_objective(c);
    if (std::isfinite(v) && v > bestv) {
      bestv = v;
      best = i;
    }
  }
  if (best <= 0 || best >= n - 1)
    throw ConvergenceFailure("limit_constant: maximum at scan boundary");
  const double blo = lo + (hi - lo) * (best - 1) / (n - 1);
  const double bhi = lo + (hi - lo) * (best + 1) / (n - 1);
  auto [c, v] = golden_max(limit_objective, blo, bhi, tol, nullptr);
  if (v < bestv) {
    c = lo + (hi - lo) * best / (n - 1);
    v = bestv;
  }
  return LimitResult{v, c};
}

double dn_via_limit_consistency(int n) {
  if (n < 3) throw PreconditionError("dn_via_limit_consistency: n must be >= 3");
  const LimitResult lim = limit_constant();
  return lim.value - dn_of_t(n, lim.c_max / n);
}

std::vector<CurvePoint> curve(int n, int k, double t_from, double t_to, int steps) {
  if (steps < 2) throw PreconditionError("curve: steps must be >= 2");
  if (t_from < -1.0) throw PreconditionError("curve: t_from must be >= -1");
  if (!(t_to >= t_from)) throw PreconditionError("curve: t_to must be >= t_from");
  std::vector<CurvePoint> out;
  out.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    const double t = t_from + (t_to - t_from) * i / (steps - 1);
    out.push_back({t, dnk_of_t(n, k, t)});
  }
  return out;
}

}  // namespace cgap
