#include "cgap/extremal.hpp"

#include <cmath>
#include <limits>

namespace cgap {
namespace {

Vec embed(const Vec& w, int n, double x1, double xn) {
  Vec x = Vec::Zero(n);
  x[0] = x1;
  x.segment(1, w.size()) = w;
  x[n - 1] = xn;
  return x;
}

void validate(const MaximizerSpec& spec) {
  if (spec.n < 3) throw InvalidSpec("maximizer: n must be >= 3");
  if (spec.n > 6) throw UnsupportedDimension("maximizer: ambient dimension above 6");
  if (spec.base.dim != spec.n - 2)
    throw InvalidSpec("maximizer: base must have dimension n-2");
  if (!spec.base.full_dim) throw InvalidSpec("maximizer: base is not full-dimensional");
  if (!(spec.rho > 0.0)) throw InvalidSpec("maximizer: rho must be positive");
  if (!(spec.lambda > 0.0)) throw InvalidSpec("maximizer: lambda must be positive");
  if (!(std::abs(spec.nu - spec.mu) > 1e-12)) throw InvalidSpec("maximizer: mu must differ from nu");
  if (spec.shear) {
    if (spec.shear->rows() != spec.n || spec.shear->cols() != spec.n)
      throw InvalidSpec("maximizer: shear must be n x n");
    Eigen::FullPivLU<Mat> lu(*spec.shear);
    if (!lu.isInvertible()) throw InvalidSpec("maximizer: shear is singular");
  }
}

}  // namespace

Polytope default_base(int n) {
  if (n < 3) throw PreconditionError("default_base: n must be >= 3");
  if (n == 3) {
    Vec a(1), b(1);
    a << -1.0;
    b << 1.0;
    return convex_hull({a, b});
  }
  const int d = n - 2;
  std::vector<Vec> corners;
  for (int mask = 0; mask < (1 << d); ++mask) {
    Vec v(d);
    for (int i = 0; i < d; ++i) v[i] = (mask >> i) & 1 ? 1.0 : 0.0;
    corners.push_back(std::move(v));
  }
  return convex_hull(corners);
}

MaximizerSpec optimal_maximizer(int n, const Polytope& base, double tol) {
  MaximizerSpec spec;
  spec.n = n;
  spec.base = base;
  spec.rho = 1.0 + dn(n, tol).t_max;
  return spec;
}

MaximizerSpec optimal_maximizer(int n, double tol) {
  return optimal_maximizer(n, default_base(n), tol);
}

Polytope build_maximizer(const MaximizerSpec& spec) {
  validate(spec);
  const int n = spec.n;
  const Vec c0 = centroid(spec.base);
  std::vector<Vec> pts;
  pts.reserve(3 * spec.base.vertices.size());
  for (const Vec& w : spec.base.vertices) {
    pts.push_back(embed(w, n, 0.0, 0.0));
    const Vec wd = c0 + spec.rho * (w - c0);
    pts.push_back(embed(wd, n, spec.lambda, spec.mu));
    pts.push_back(embed(wd, n, spec.lambda, spec.nu));
  }
  if (spec.shear)
    for (Vec& p : pts) p = *spec.shear * p;
  return convex_hull(pts);
}

ExtremalCheck verify_extremal(const MaximizerSpec& spec, double tol) {
  const Polytope body = build_maximizer(spec);
  const Hyperplane wall = make_hyperplane(Vec::Unit(spec.n, spec.n - 1), 0.0);
  const GapResult g = centroid_gap(body, wall);
  if (!g.direction) throw DirectionMismatch("extremal: centroid gap vanished");
  const double along_e1 = std::abs((*g.direction)[0]);
  if (std::abs(along_e1 - 1.0) > 1e-8)
    throw DirectionMismatch("extremal: gap direction is not parallel to e_1");

  const BoundResult b = dn(spec.n, tol);
  ExtremalCheck chk;
  chk.ratio = g.ratio;
  chk.expected = b.value;
  chk.margin = g.ratio - b.value;
  return chk;
}

double shear_invariance_check(const MaximizerSpec& spec, const Mat& shear) {
  MaximizerSpec plain = spec;
  plain.shear.reset();
  MaximizerSpec sheared = spec;
  sheared.shear = shear;
  const ExtremalCheck a = verify_extremal(plain);
  const ExtremalCheck b = verify_extremal(sheared);
  return b.ratio - a.ratio;
}

ConventionReport resolve_homothety_convention(int n) {
  if (n < 3 || n > 6)
    throw PreconditionError("resolve_homothety_convention: n must be in [3, 6]");
  const BoundResult b = dn(n);

  ConventionReport rep;
  rep.n = n;
  rep.t_max = b.t_max;
  rep.expected = b.value;

  const auto try_candidate = [&](const std::string& name, double rho) {
    ConventionCandidate c;
    c.interpretation = name;
    c.rho = rho;
    c.feasible = rho > 0.0;
    if (c.feasible) {
      MaximizerSpec spec;
      spec.n = n;
      spec.base = default_base(n);
      spec.rho = rho;
      const Polytope body = build_maximizer(spec);
      const Hyperplane wall = make_hyperplane(Vec::Unit(n, n - 1), 0.0);
      c.ratio = centroid_gap(body, wall).ratio;
      c.abs_error = std::abs(c.ratio - rep.expected);
    }
    rep.candidates.push_back(std::move(c));
  };
  try_candidate("1 + t_max", 1.0 + b.t_max);
  try_candidate("t_max", b.t_max);

  double best = std::numeric_limits<double>::infinity();
  for (const ConventionCandidate& c : rep.candidates)
    if (c.feasible && c.abs_error < best) {
      best = c.abs_error;
      rep.best_interpretation = c.interpretation;
      rep.best_ratio = c.ratio;
    }
  if (rep.best_interpretation.empty())
    throw ConvergenceFailure("resolve_homothety_convention: no feasible interpretation");
  return rep;
}

}  // namespace cgap
