#include "cgap/gap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "cgap/rng.hpp"

namespace cgap {
namespace {

GapResult assemble(const Polytope& body, const Mat& basis, const Vec& body_centroid,
                   const Polytope& proj, const Vec& proj_centroid) {
  GapResult r;
  r.projected_centroid = basis.transpose() * body_centroid;
  r.centroid_of_projection = proj_centroid;
  r.gap_vector = r.projected_centroid - proj_centroid;
  r.gap_norm = r.gap_vector.norm();
  if (r.gap_norm < tol::gap_rel * diameter(proj)) {
    r.ratio = 0.0;
    return r;
  }
  Vec u = basis * r.gap_vector;
  u /= u.norm();
  r.direction = u;
  r.width_along = width(body, u);
  r.ratio = r.gap_norm / *r.width_along;
  return r;
}

GapResult gap_core(const Polytope& body, const Mat& basis) {
  if (!body.full_dim) throw DegenerateInput("centroid_gap: body is not full-dimensional");
  const Polytope proj = project(body, Subspace{basis});
  return assemble(body, basis, centroid(body), proj, centroid(proj));
}

GapResult gap_core_mc(const Polytope& body, const Mat& basis, long samples,
                      std::uint64_t seed) {
  if (!body.full_dim) throw DegenerateInput("centroid_gap: body is not full-dimensional");
  const Polytope proj = project(body, Subspace{basis});
  const Vec c = monte_carlo_centroid(body, samples, seed).estimate;
  const Vec cp = monte_carlo_centroid(proj, samples, mix_seed(seed, 1)).estimate;
  return assemble(body, basis, c, proj, cp);
}

}  // namespace

GapResult centroid_gap(const Polytope& body, const Hyperplane& h) {
  if (static_cast<int>(h.normal.size()) != body.dim)
    throw DimensionMismatch("centroid_gap: hyperplane dimension");
  return gap_core(body, complement_basis(h.normal));
}

GapResult centroid_gap(const Polytope& body, const Subspace& s) {
  if (s.basis.rows() != body.dim) throw DimensionMismatch("centroid_gap: subspace dimension");
  const int k = static_cast<int>(s.basis.cols());
  if (k < 1 || k >= body.dim) throw PreconditionError("centroid_gap: need 1 <= k < dim");
  if ((s.basis.transpose() * s.basis - Mat::Identity(k, k)).cwiseAbs().maxCoeff() > 1e-9)
    throw PreconditionError("centroid_gap: basis columns are not orthonormal");
  return gap_core(body, s.basis);
}

GapResult centroid_gap_mc(const Polytope& body, const Hyperplane& h, long samples,
                          std::uint64_t seed) {
  if (static_cast<int>(h.normal.size()) != body.dim)
    throw DimensionMismatch("centroid_gap: hyperplane dimension");
  return gap_core_mc(body, complement_basis(h.normal), samples, seed);
}

GapResult centroid_gap_mc(const Polytope& body, const Subspace& s, long samples,
                          std::uint64_t seed) {
  if (s.basis.rows() != body.dim) throw DimensionMismatch("centroid_gap: subspace dimension");
  const int k = static_cast<int>(s.basis.cols());
  if (k < 1 || k >= body.dim) throw PreconditionError("centroid_gap: need 1 <= k < dim");
  if ((s.basis.transpose() * s.basis - Mat::Identity(k, k)).cwiseAbs().maxCoeff() > 1e-9)
    throw PreconditionError("centroid_gap: basis columns are not orthonormal");
  return gap_core_mc(body, s.basis, samples, seed);
}

double verify_bound(const Polytope& body, const Hyperplane& h, double constant) {
  const GapResult g = centroid_gap(body, h);
  if (!g.direction) return constant * diameter(body);
  return constant * *g.width_along - g.gap_norm;
}

namespace {

// One facet inequality expressed over hyperplane coordinates (y, s):
//   a . y + b s <= off   for points  basis * y + s * normal.
struct SlabPlane {
  Vec a;
  double b = 0.0;
  double off = 0.0;
};

std::optional<Eigen::Vector2d> segment_intersection(const Eigen::Vector2d& p,
                                                    const Eigen::Vector2d& q,
                                                    const Eigen::Vector2d& r,
                                                    const Eigen::Vector2d& s,
                                                    double scale) {
  const Eigen::Vector2d d1 = q - p, d2 = s - r;
  const double det = d1.x() * d2.y() - d1.y() * d2.x();
  if (std::abs(det) <= 1e-14 * scale * scale) return std::nullopt;  // parallel or collinear
  const Eigen::Vector2d rhs = r - p;
  const double t1 = (rhs.x() * d2.y() - rhs.y() * d2.x()) / det;
  const double t2 = (rhs.x() * d1.y() - rhs.y() * d1.x()) / det;
  const double eps = 1e-9;
  if (t1 < -eps || t1 > 1.0 + eps || t2 < -eps || t2 > 1.0 + eps) return std::nullopt;
  return p + std::clamp(t1, 0.0, 1.0) * d1;
}

}  // namespace

Polytope shake(const Polytope& body, const Hyperplane& h) {
  if (body.dim < 2 || body.dim > 3)
    throw UnsupportedDimension("shake: exact shaking covers dimensions 2 and 3");
  if (!body.full_dim) throw DegenerateInput("shake: body is not full-dimensional");
  if (static_cast<int>(h.normal.size()) != body.dim)
    throw DimensionMismatch("shake: hyperplane dimension");

  const int d = body.dim;
  const Vec& theta = h.normal;
  const Mat basis = complement_basis(theta);

  std::vector<SlabPlane> upper, lower;
  for (const Facet& f : body.facets) {
    SlabPlane sp;
    sp.a = basis.transpose() * f.normal;
    sp.b = theta.dot(f.normal);
    sp.off = f.offset;
    if (sp.b > 1e-9)
      upper.push_back(std::move(sp));
    else if (sp.b < -1e-9)
      lower.push_back(std::move(sp));
    // |b| <= 1e-9: facet parallel to the normal, constrains only the shadow
  }
  if (upper.empty() || lower.empty()) throw Error("shake: body is unbounded along the normal");

  const auto g_upper = [&](const Vec& y) {
    double v = std::numeric_limits<double>::infinity();
    for (const SlabPlane& sp : upper) v = std::min(v, (sp.off - sp.a.dot(y)) / sp.b);
    return v;
  };
  const auto g_lower = [&](const Vec& y) {
    double v = -std::numeric_limits<double>::infinity();
    for (const SlabPlane& sp : lower) v = std::max(v, (sp.off - sp.a.dot(y)) / sp.b);
    return v;
  };

  // Chord length over the shadow is concave piecewise-linear; its breakpoints
  // (vertices of the shaken body's top surface) lie under projected vertices
  // or, for d = 3, under crossings of upper- and lower-facet edge shadows.
  std::vector<Vec> cands;
  for (const Vec& v : body.vertices) cands.push_back(basis.transpose() * v);

  if (d == 3) {
    const double scale = std::max(1.0, diameter(body));
    std::vector<std::pair<Eigen::Vector2d, Eigen::Vector2d>> up_edges, lo_edges;
    for (const Facet& f : body.facets) {
      const double b = theta.dot(f.normal);
      if (std::abs(b) <= 1e-9) continue;
      auto& edges = b > 0.0 ? up_edges : lo_edges;
      const std::vector<int> loop = facet_loop(body, f);
      for (std::size_t i = 0; i < loop.size(); ++i) {
        const Vec& a = body.vertices[loop[i]];
        const Vec& bb = body.vertices[loop[(i + 1) % loop.size()]];
        edges.emplace_back(basis.transpose() * a, basis.transpose() * bb);
      }
    }
    for (const auto& [p, q] : up_edges)
      for (const auto& [r, s] : lo_edges)
        if (const auto x = segment_intersection(p, q, r, s, scale)) {
          Vec y(2);
          y << x->x(), x->y();
          cands.push_back(std::move(y));
        }
  }

  std::vector<Vec> out;
  out.reserve(2 * cands.size());
  for (const Vec& y : cands) {
    const double len = std::max(0.0, g_upper(y) - g_lower(y));
    const Vec base = basis * y + h.offset * theta;
    out.push_back(base);
    if (len > 0.0) out.push_back(base + len * theta);
  }
  return convex_hull(out);
}

Polytope random_polytope(const RandomBodySpec& spec) {
  if (spec.dim < 1) throw PreconditionError("random_polytope: dim must be >= 1");
  if (spec.vertex_count < spec.dim + 1)
    throw PreconditionError("random_polytope: need at least dim+1 points");
  for (int attempt = 0; attempt < 10; ++attempt) {
    Rng rng(attempt == 0 ? spec.seed : mix_seed(spec.seed, 0xA77E0000ULL + attempt));
    std::vector<Vec> pts;
    pts.reserve(spec.vertex_count);
    for (int i = 0; i < spec.vertex_count; ++i) {
      Vec v = rng.gaussian_vec(spec.dim);
      if (spec.dist == RandomBodySpec::Dist::sphere) {
        const double n = v.norm();
        if (n < 1e-12) {
          v = Vec::Unit(spec.dim, 0);
        } else {
          v /= n;
        }
      }
      pts.push_back(std::move(v));
    }
    try {
      return convex_hull(pts);
    } catch (const DegenerateInput&) {
      // measure-zero draw; retry with a derived seed
    }
  }
  throw DegenerateInput("random_polytope: degenerate draws for 10 derived seeds");
}

SuiteReport random_test_suite(int dim, long trials, const RandomBodySpec& tmpl,
                              double constant) {
  if (dim < 2) throw PreconditionError("random_test_suite: dim must be >= 2");
  if (trials < 1) throw PreconditionError("random_test_suite: trials must be >= 1");
  if (tmpl.vertex_count < dim + 1)
    throw PreconditionError("random_test_suite: vertex_count below dim+1");
  if (!(constant > 0.0)) throw PreconditionError("random_test_suite: constant must be positive");

  SuiteReport rep;
  rep.trials = trials;
  rep.min_margin = std::numeric_limits<double>::infinity();
  rep.max_ratio = -std::numeric_limits<double>::infinity();
  for (long i = 0; i < trials; ++i) {
    const std::uint64_t seed = mix_seed(tmpl.seed, static_cast<std::uint64_t>(i));
    const int span = tmpl.vertex_count - dim;  // >= 1
    const int count = dim + 1 + static_cast<int>(mix_seed(seed, 0x5eedULL) % span);
    RandomBodySpec spec{dim, count, tmpl.dist, seed};
    Polytope body = random_polytope(spec);
    body = transform(body, AffineMap::translation(-centroid(body)));

    Rng dir_rng(mix_seed(seed, 0xd14ULL));
    const Hyperplane h = make_hyperplane(dir_rng.unit_vec(dim), 0.0);

    const GapResult g = centroid_gap(body, h);
    const double margin =
        g.direction ? constant * *g.width_along - g.gap_norm : constant * diameter(body);
    if (margin < rep.min_margin) rep.min_margin = margin;
    if (margin < -1e-9) ++rep.violations;
    if (g.ratio > rep.max_ratio) {
      rep.max_ratio = g.ratio;
      rep.argmax_seed = seed;
    }
  }
  return rep;
}

}  // namespace cgap
