#include "cgap/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "cgap/rng.hpp"

namespace cgap {
namespace {

constexpr int kMaxDim = 6;

double coord_scale(const std::vector<Vec>& pts) {
  double s = 1.0;
  for (const auto& p : pts)
    if (p.size() > 0) s = std::max(s, p.cwiseAbs().maxCoeff());
  return s;
}

// Incremental orthonormal span with rank-revealing threshold.
struct SpanBuilder {
  Mat q;
  int r = 0;
  double tol;

  SpanBuilder(int dim, double tol) : q(dim, dim), tol(tol) {}

  bool add(Vec v) {
    for (int pass = 0; pass < 2; ++pass)
      for (int i = 0; i < r; ++i) v -= q.col(i).dot(v) * q.col(i);
    const double n = v.norm();
    if (n <= tol) return false;
    q.col(r++) = v / n;
    return true;
  }
};

struct RawHull {
  std::vector<int> vertex_ids;                  // into the input point array
  std::vector<std::vector<int>> facet_members;  // vertex ids only, ascending
  std::vector<Vec> facet_normals;
  std::vector<double> facet_offsets;
};

bool next_combination(std::vector<int>& comb, int m) {
  const int k = static_cast<int>(comb.size());
  int i = k - 1;
  while (i >= 0 && comb[i] == m - k + i) --i;
  if (i < 0) return false;
  ++comb[i];
  for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  return true;
}

// Exhaustive facet scan: every dim-subset of points spans a candidate plane;
// a candidate with all points weakly on one side is a supporting plane and
// hence carries a facet.  Near-identical planes discovered from different
// subsets are merged, and each facet's final offset is the maximum vertex
// dot product, so facet certificates hold with nonpositive slack.
RawHull hull_core(const std::vector<Vec>& pts, int dim) {
  if (dim < 1) throw PreconditionError("hull: ambient dimension must be >= 1");
  if (dim > kMaxDim) throw UnsupportedDimension("hull: dimension above 6 is not supported");
  const int m = static_cast<int>(pts.size());
  for (const Vec& p : pts) {
    if (static_cast<int>(p.size()) != dim) throw DimensionMismatch("hull: point dimension mismatch");
    if (!p.allFinite()) throw PreconditionError("hull: non-finite coordinate");
  }
  if (m < dim + 1) throw DegenerateInput("hull: need at least dim+1 points");

  const double scale = coord_scale(pts);
  const double tolc = tol::coplanarity * scale;

  std::vector<int> uniq;
  for (int i = 0; i < m; ++i) {
    bool dup = false;
    for (int j : uniq)
      if ((pts[i] - pts[j]).lpNorm<Eigen::Infinity>() <= tolc) {
        dup = true;
        break;
      }
    if (!dup) uniq.push_back(i);
  }
  if (static_cast<int>(uniq.size()) < dim + 1)
    throw DegenerateInput("hull: fewer than dim+1 distinct points");

  {
    SpanBuilder span(dim, tolc);
    for (std::size_t i = 1; i < uniq.size() && span.r < dim; ++i)
      span.add(pts[uniq[i]] - pts[uniq[0]]);
    if (span.r < dim) throw DegenerateInput("hull: points are not affinely full-dimensional");
  }

  if (dim == 1) {
    int lo = uniq[0], hi = uniq[0];
    for (int i : uniq) {
      if (pts[i][0] < pts[lo][0]) lo = i;
      if (pts[i][0] > pts[hi][0]) hi = i;
    }
    RawHull rh;
    rh.vertex_ids = {lo, hi};
    rh.facet_members = {{lo}, {hi}};
    rh.facet_normals = {-Vec::Unit(1, 0), Vec::Unit(1, 0)};
    rh.facet_offsets = {-pts[lo][0], pts[hi][0]};
    return rh;
  }

  const int mu = static_cast<int>(uniq.size());
  std::vector<std::vector<int>> fmem;
  std::vector<Vec> fnrm;
  std::vector<double> foff;
  std::map<std::vector<int>, int> seen;

  std::vector<int> comb(dim);
  for (int i = 0; i < dim; ++i) comb[i] = i;
  do {
    Mat d(dim, dim - 1);
    for (int j = 1; j < dim; ++j) d.col(j - 1) = pts[uniq[comb[j]]] - pts[uniq[comb[0]]];
    const Mat q = orthonormal_columns(d, tolc);
    if (q.cols() != dim - 1) continue;  // subset affinely degenerate

    // Unit normal: residual of the axis least represented in the span.  The
    // row-norm argument bounds the residual below by 1/sqrt(dim), so the
    // normalization is always well-conditioned.
    int jstar = 0;
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < dim; ++j) {
      const double rn = q.row(j).squaredNorm();
      if (rn < best) {
        best = rn;
        jstar = j;
      }
    }
    Vec nrm = Vec::Unit(dim, jstar) - q * q.row(jstar).transpose();
    nrm.normalize();
    double off = nrm.dot(pts[uniq[comb[0]]]);

    double hi = 0.0, lo = 0.0;
    for (int ui : uniq) {
      const double s = nrm.dot(pts[ui]) - off;
      hi = std::max(hi, s);
      lo = std::min(lo, s);
      if (hi > tolc && lo < -tolc) break;
    }
    if (hi > tolc && lo < -tolc) continue;  // points on both sides
    if (hi > tolc) {
      nrm = -nrm;
      off = -off;
    }

    std::vector<int> mem;
    for (int ui : uniq)
      if (std::abs(nrm.dot(pts[ui]) - off) <= tolc) mem.push_back(ui);
    if (seen.emplace(mem, static_cast<int>(fmem.size())).second) {
      fmem.push_back(std::move(mem));
      fnrm.push_back(std::move(nrm));
      foff.push_back(off);
    }
  } while (next_combination(comb, mu));

  // Merge planes that agree within tolerance but were seeded from different
  // subsets (possible when more than dim points are near-coplanar).
  const int nf0 = static_cast<int>(fmem.size());
  std::vector<char> dead(nf0, 0);
  for (int i = 0; i < nf0; ++i) {
    if (dead[i]) continue;
    for (int j = i + 1; j < nf0; ++j) {
      if (dead[j]) continue;
      if ((fnrm[i] - fnrm[j]).norm() <= tol::normal_rank &&
          std::abs(foff[i] - foff[j]) <= 10.0 * tolc)
        dead[j] = 1;
    }
  }

  RawHull rh;
  for (int i = 0; i < nf0; ++i) {
    if (dead[i]) continue;
    const Vec& nrm = fnrm[i];
    double off = -std::numeric_limits<double>::infinity();
    for (int ui : uniq) off = std::max(off, nrm.dot(pts[ui]));
    std::vector<int> mem;
    for (int ui : uniq)
      if (nrm.dot(pts[ui]) >= off - tolc) mem.push_back(ui);
    rh.facet_members.push_back(std::move(mem));
    rh.facet_normals.push_back(nrm);
    rh.facet_offsets.push_back(off);
  }

  const int nf = static_cast<int>(rh.facet_members.size());
  std::map<int, std::vector<int>> incident;  // point id -> facet indices
  for (int f = 0; f < nf; ++f)
    for (int ui : rh.facet_members[f]) incident[ui].push_back(f);

  std::set<int> vertex_set;
  for (int ui : uniq) {
    const auto it = incident.find(ui);
    if (it == incident.end() || static_cast<int>(it->second.size()) < dim) continue;
    SpanBuilder span(dim, tol::normal_rank);
    for (int f : it->second)
      if (span.add(rh.facet_normals[f]) && span.r == dim) break;
    if (span.r == dim) vertex_set.insert(ui);
  }
  if (static_cast<int>(vertex_set.size()) < dim + 1)
    throw DegenerateInput("hull: fewer than dim+1 vertices");

  rh.vertex_ids.assign(vertex_set.begin(), vertex_set.end());
  for (auto& mem : rh.facet_members) {
    std::vector<int> kept;
    for (int ui : mem)
      if (vertex_set.count(ui)) kept.push_back(ui);
    if (static_cast<int>(kept.size()) < dim)
      throw Error("hull: facet retained fewer than dim vertices");
    mem = std::move(kept);
  }
  return rh;
}

bool lex_less(const Vec& a, const Vec& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

std::vector<int> angle_order(const std::vector<Eigen::Vector2d>& loc) {
  Eigen::Vector2d mean = Eigen::Vector2d::Zero();
  for (const auto& p : loc) mean += p;
  mean /= static_cast<double>(loc.size());
  std::vector<int> order(loc.size());
  for (std::size_t i = 0; i < loc.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Eigen::Vector2d da = loc[a] - mean, db = loc[b] - mean;
    return std::atan2(da.y(), da.x()) < std::atan2(db.y(), db.x());
  });
  return order;
}

// Orthonormal basis of a facet's own plane (dim-1 columns).
Mat facet_plane_basis(const std::vector<Vec>& pts, const std::vector<int>& mem, int dim) {
  const double tolc = tol::coplanarity * coord_scale(pts);
  Mat d(dim, static_cast<int>(mem.size()) - 1);
  for (std::size_t j = 1; j < mem.size(); ++j) d.col(j - 1) = pts[mem[j]] - pts[mem[0]];
  const Mat q = orthonormal_columns(d, tolc);
  if (q.cols() != dim - 1) throw Error("facet is not (dim-1)-dimensional");
  return q;
}

std::vector<std::vector<int>> cell_simplices(const std::vector<Vec>& pts, int dim);

// Decomposition of a facet into (dim-1)-simplices, each as dim vertex ids.
std::vector<std::vector<int>> facet_simplices(const std::vector<Vec>& pts,
                                              const std::vector<int>& mem, int dim) {
  if (dim == 2) {
    if (mem.size() != 2) throw Error("edge facet with vertex count != 2");
    return {mem};
  }
  const Mat basis = facet_plane_basis(pts, mem, dim);
  if (dim == 3) {
    std::vector<Eigen::Vector2d> loc(mem.size());
    for (std::size_t i = 0; i < mem.size(); ++i) loc[i] = basis.transpose() * (pts[mem[i]] - pts[mem[0]]);
    const std::vector<int> order = angle_order(loc);
    std::vector<std::vector<int>> out;
    for (std::size_t i = 1; i + 1 < order.size(); ++i)
      out.push_back({mem[order[0]], mem[order[i]], mem[order[i + 1]]});
    return out;
  }
  std::vector<Vec> loc(mem.size());
  for (std::size_t i = 0; i < mem.size(); ++i) loc[i] = basis.transpose() * (pts[mem[i]] - pts[mem[0]]);
  std::vector<std::vector<int>> out;
  for (const auto& s : cell_simplices(loc, dim - 1)) {
    std::vector<int> ids(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) ids[j] = mem[s[j]];
    out.push_back(std::move(ids));
  }
  return out;
}

// Decomposition of the hull of a full-dimensional point set into dim-simplices,
// each as dim+1 point ids: cone from one vertex over the facets avoiding it.
std::vector<std::vector<int>> cell_simplices(const std::vector<Vec>& pts, int dim) {
  if (dim == 1) {
    int lo = 0, hi = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (pts[i][0] < pts[lo][0]) lo = static_cast<int>(i);
      if (pts[i][0] > pts[hi][0]) hi = static_cast<int>(i);
    }
    return {{lo, hi}};
  }
  if (dim == 2) {
    std::vector<Eigen::Vector2d> loc(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) loc[i] = pts[i].head<2>();
    const std::vector<int> order = angle_order(loc);
    std::vector<std::vector<int>> out;
    for (std::size_t i = 1; i + 1 < order.size(); ++i)
      out.push_back({order[0], order[i], order[i + 1]});
    return out;
  }
  const RawHull rh = hull_core(pts, dim);
  const int apex = rh.vertex_ids.front();
  std::vector<std::vector<int>> out;
  for (std::size_t f = 0; f < rh.facet_members.size(); ++f) {
    const auto& mem = rh.facet_members[f];
    if (std::find(mem.begin(), mem.end(), apex) != mem.end()) continue;
    for (auto simplex : facet_simplices(pts, mem, dim)) {
      simplex.insert(simplex.begin(), apex);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// (volume, centroid) from the fan over facets around the vertex mean.
std::pair<double, Vec> measure(const Polytope& p) {
  if (!p.full_dim) throw DegenerateInput("measure: polytope is not full-dimensional");
  const int d = p.dim;
  if (d == 1) {
    const double a = p.vertices.front()[0], b = p.vertices.back()[0];
    Vec c(1);
    c[0] = 0.5 * (a + b);
    return {std::abs(b - a), c};
  }
  Vec ref = Vec::Zero(d);
  for (const Vec& v : p.vertices) ref += v;
  ref /= static_cast<double>(p.vertices.size());

  const double dfact = factorial(d);
  double vol = 0.0;
  Vec mom = Vec::Zero(d);
  Mat e(d, d);
  for (const Facet& f : p.facets) {
    for (const auto& s : facet_simplices(p.vertices, f.vertices, d)) {
      for (int j = 0; j < d; ++j) e.col(j) = p.vertices[s[j]] - ref;
      const double v = std::abs(e.determinant()) / dfact;
      if (v == 0.0) continue;
      Vec c = ref;
      for (int j = 0; j < d; ++j) c += p.vertices[s[j]];
      mom += (v / (d + 1.0)) * c;
      vol += v;
    }
  }
  if (!(vol > 0.0)) throw DegenerateInput("measure: zero volume");
  return {vol, mom / vol};
}

}  // namespace

Hyperplane make_hyperplane(const Vec& normal, double offset) {
  const double n = normal.norm();
  if (n < tol::unit_norm) throw ZeroDirection("hyperplane: zero normal");
  return Hyperplane{normal / n, offset / n};
}

AffineMap AffineMap::translation(const Vec& t) {
  return {Mat::Identity(t.size(), t.size()), t};
}

AffineMap AffineMap::scaling(int dim, double factor) {
  return {factor * Mat::Identity(dim, dim), Vec::Zero(dim)};
}

AffineMap AffineMap::dilation(const Vec& center, double factor) {
  const auto n = center.size();
  return {factor * Mat::Identity(n, n), center - factor * center};
}

Polytope convex_hull(const std::vector<Vec>& points) {
  if (points.empty()) throw DegenerateInput("hull: empty point set");
  const int dim = static_cast<int>(points.front().size());
  RawHull rh = hull_core(points, dim);

  std::sort(rh.vertex_ids.begin(), rh.vertex_ids.end(),
            [&](int a, int b) { return lex_less(points[a], points[b]); });
  std::map<int, int> renum;
  Polytope p;
  p.dim = dim;
  p.full_dim = true;
  for (std::size_t i = 0; i < rh.vertex_ids.size(); ++i) {
    renum[rh.vertex_ids[i]] = static_cast<int>(i);
    p.vertices.push_back(points[rh.vertex_ids[i]]);
  }
  for (std::size_t f = 0; f < rh.facet_members.size(); ++f) {
    Facet fc;
    for (int id : rh.facet_members[f]) fc.vertices.push_back(renum.at(id));
    std::sort(fc.vertices.begin(), fc.vertices.end());
    fc.normal = rh.facet_normals[f];
    fc.offset = rh.facet_offsets[f];
    p.facets.push_back(std::move(fc));
  }
  std::sort(p.facets.begin(), p.facets.end(),
            [](const Facet& a, const Facet& b) { return a.vertices < b.vertices; });
  check_consistency(p);
  return p;
}

double volume(const Polytope& p) { return measure(p).first; }

Vec centroid(const Polytope& p) { return measure(p).second; }

double support(const Polytope& p, const Vec& u) {
  if (static_cast<int>(u.size()) != p.dim) throw DimensionMismatch("support: direction dimension");
  if (u.norm() < tol::unit_norm) throw ZeroDirection("support: zero direction");
  double h = -std::numeric_limits<double>::infinity();
  for (const Vec& v : p.vertices) h = std::max(h, u.dot(v));
  return h;
}

double width(const Polytope& p, const Vec& u) {
  const double n = u.norm();
  if (n < tol::unit_norm) throw ZeroDirection("width: zero direction");
  return (support(p, u) + support(p, -u)) / n;
}

double diameter(const Polytope& p) {
  double d = 0.0;
  for (std::size_t i = 0; i < p.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < p.vertices.size(); ++j)
      d = std::max(d, (p.vertices[i] - p.vertices[j]).norm());
  return d;
}

bool contains(const Polytope& p, const Vec& x, double tolerance) {
  if (static_cast<int>(x.size()) != p.dim) throw DimensionMismatch("contains: point dimension");
  for (const Facet& f : p.facets)
    if (f.normal.dot(x) > f.offset + tolerance) return false;
  return true;
}

LineRange line_intersection(const Polytope& p, const Vec& point, const Vec& dir) {
  if (static_cast<int>(point.size()) != p.dim || static_cast<int>(dir.size()) != p.dim)
    throw DimensionMismatch("line_intersection: dimension");
  if (dir.norm() < tol::unit_norm) throw ZeroDirection("line_intersection: zero direction");
  const double scale = coord_scale(p.vertices);
  LineRange r{-std::numeric_limits<double>::infinity(),
              std::numeric_limits<double>::infinity()};
  for (const Facet& f : p.facets) {
    const double ad = f.normal.dot(dir);
    const double ap = f.normal.dot(point);
    if (std::abs(ad) <= 1e-14 * scale) {
      if (ap > f.offset + tol::coplanarity * scale) return LineRange{1.0, 0.0};
      continue;
    }
    const double s = (f.offset - ap) / ad;
    if (ad > 0.0)
      r.hi = std::min(r.hi, s);
    else
      r.lo = std::max(r.lo, s);
  }
  return r;
}

double chord_length(const Polytope& p, const Vec& point, const Vec& dir) {
  const LineRange r = line_intersection(p, point, dir);
  if (r.empty()) return 0.0;
  return (r.hi - r.lo) * dir.norm();
}

Polytope project(const Polytope& p, const Subspace& s) {
  const Mat& b = s.basis;
  if (b.rows() != p.dim) throw DimensionMismatch("project: subspace ambient dimension");
  const int k = static_cast<int>(b.cols());
  if (k < 1 || k >= p.dim) throw PreconditionError("project: need 1 <= k < dim");
  if ((b.transpose() * b - Mat::Identity(k, k)).cwiseAbs().maxCoeff() > 1e-9)
    throw PreconditionError("project: basis columns are not orthonormal");
  std::vector<Vec> proj;
  proj.reserve(p.vertices.size());
  for (const Vec& v : p.vertices) proj.push_back(b.transpose() * v);
  return convex_hull(proj);
}

Polytope transform(const Polytope& p, const AffineMap& map) {
  if (map.linear.rows() != p.dim || map.linear.cols() != p.dim ||
      static_cast<int>(map.offset.size()) != p.dim)
    throw DimensionMismatch("transform: map dimension");
  Eigen::FullPivLU<Mat> lu(map.linear);
  if (!lu.isInvertible()) throw SingularMap("transform: linear part is singular");
  std::vector<Vec> out;
  out.reserve(p.vertices.size());
  for (const Vec& v : p.vertices) out.push_back(map.linear * v + map.offset);
  return convex_hull(out);
}

McEstimate monte_carlo_centroid(const Polytope& p, long samples, std::uint64_t seed) {
  if (!p.full_dim) throw DegenerateInput("monte_carlo_centroid: not full-dimensional");
  if (samples < 1000) throw PreconditionError("monte_carlo_centroid: need samples >= 1000");
  const int d = p.dim;
  Vec lo = p.vertices.front(), hi = p.vertices.front();
  for (const Vec& v : p.vertices) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
  const double ctol = tol::coplanarity * coord_scale(p.vertices);

  Rng rng(seed);
  Vec sum = Vec::Zero(d), sumsq = Vec::Zero(d), x(d);
  long accepted = 0;
  for (long s = 0; s < samples; ++s) {
    for (int i = 0; i < d; ++i) x[i] = rng.uniform(lo[i], hi[i]);
    if (!contains(p, x, ctol)) continue;
    ++accepted;
    sum += x;
    sumsq += x.cwiseProduct(x);
  }
  if (accepted < 2 || static_cast<double>(accepted) / static_cast<double>(samples) < 1e-6)
    throw SamplingFailure("monte_carlo_centroid: acceptance rate below 1e-6");

  McEstimate est;
  est.accepted = accepted;
  est.samples = samples;
  est.estimate = sum / static_cast<double>(accepted);
  est.std_error = Vec(d);
  for (int i = 0; i < d; ++i) {
    const double var =
        std::max(0.0, (sumsq[i] - accepted * est.estimate[i] * est.estimate[i]) /
                          static_cast<double>(accepted - 1));
    est.std_error[i] = std::sqrt(var / static_cast<double>(accepted));
  }
  return est;
}

std::vector<int> facet_loop(const Polytope& p, const Facet& f) {
  if (p.dim != 3) throw PreconditionError("facet_loop: only defined in dimension 3");
  const Mat basis = facet_plane_basis(p.vertices, f.vertices, 3);
  std::vector<Eigen::Vector2d> loc(f.vertices.size());
  for (std::size_t i = 0; i < f.vertices.size(); ++i)
    loc[i] = basis.transpose() * (p.vertices[f.vertices[i]] - p.vertices[f.vertices[0]]);
  std::vector<int> loop;
  for (int i : angle_order(loc)) loop.push_back(f.vertices[i]);
  return loop;
}

void check_consistency(const Polytope& p) {
  const int d = p.dim;
  const int nv = static_cast<int>(p.vertices.size());
  const int nf = static_cast<int>(p.facets.size());
  if (d < 1) throw Error("consistency: dimension < 1");
  if (nv < d + 1) throw Error("consistency: fewer than dim+1 vertices");
  if (nf < d + 1) throw Error("consistency: fewer than dim+1 facets");
  const double scale = coord_scale(p.vertices);
  const double tolc = tol::coplanarity * scale;

  std::vector<int> incidence(nv, 0);
  for (const Facet& f : p.facets) {
    if (std::abs(f.normal.norm() - 1.0) > tol::unit_norm)
      throw Error("consistency: facet normal is not unit");
    if (static_cast<int>(f.vertices.size()) < d)
      throw Error("consistency: facet has fewer than dim vertices");
    for (int i = 0; i < nv; ++i)
      if (f.normal.dot(p.vertices[i]) > f.offset + 1e-9)
        throw Error("consistency: facet certificate violated");
    for (int id : f.vertices) {
      if (id < 0 || id >= nv) throw Error("consistency: facet vertex index out of range");
      if (std::abs(f.normal.dot(p.vertices[id]) - f.offset) > tolc)
        throw Error("consistency: listed facet vertex is off the facet plane");
      ++incidence[id];
    }
    if (d >= 2) {
      SpanBuilder span(d, tolc);
      for (std::size_t i = 1; i < f.vertices.size(); ++i)
        span.add(p.vertices[f.vertices[i]] - p.vertices[f.vertices[0]]);
      if (span.r != d - 1) throw Error("consistency: facet affine dimension != dim-1");
    }
  }
  for (int i = 0; i < nv; ++i)
    if (incidence[i] < d) throw Error("consistency: vertex on fewer than dim facets");

  Vec mean = Vec::Zero(d);
  for (const Vec& v : p.vertices) mean += v;
  mean /= static_cast<double>(nv);
  for (const Facet& f : p.facets)
    if (f.normal.dot(mean) > f.offset + 1e-12 * scale)
      throw Error("consistency: vertex mean outside a facet");

  if (d == 1 && (nv != 2 || nf != 2)) throw Error("consistency: segment must have 2 vertices, 2 facets");
  if (d == 2 && nv != nf) throw Error("consistency: polygon Euler relation violated");
  if (d == 3) {
    std::set<std::pair<int, int>> edges;
    for (const Facet& f : p.facets) {
      const std::vector<int> loop = facet_loop(p, f);
      for (std::size_t i = 0; i < loop.size(); ++i) {
        const int a = loop[i], b = loop[(i + 1) % loop.size()];
        edges.emplace(std::min(a, b), std::max(a, b));
      }
    }
    if (nv - static_cast<int>(edges.size()) + nf != 2)
      throw Error("consistency: polyhedron Euler relation violated");
  }
}

}  // namespace cgap
