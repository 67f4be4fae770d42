#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cgap/errors.hpp"
#include "cgap/linalg.hpp"

namespace cgap {

// One facet of a full-dimensional polytope: the vertices incident to it plus
// the supporting halfspace  normal . x <= offset  with outward unit normal.
// offset equals the maximum of normal . v over all vertices, so every vertex
// satisfies the inequality with nonpositive slack.
struct Facet {
  std::vector<int> vertices;  // indices into Polytope::vertices, ascending
  Vec normal;
  double offset = 0.0;
};

// Convex polytope in V-representation with derived facet structure.
// Canonical form (as produced by convex_hull): vertices are the extreme
// points only, sorted lexicographically by coordinates; facet vertex lists
// ascending; facets sorted lexicographically by vertex list.
struct Polytope {
  int dim = 0;
  std::vector<Vec> vertices;
  std::vector<Facet> facets;
  bool full_dim = false;
};

struct Hyperplane {
  Vec normal;  // unit
  double offset = 0.0;
};

// Normalizes the normal; throws ZeroDirection if it is (near) zero.
Hyperplane make_hyperplane(const Vec& normal, double offset);

// k-dimensional linear subspace of R^n spanned by the orthonormal columns of
// basis (n x k).
struct Subspace {
  Mat basis;
};

struct AffineMap {
  Mat linear;
  Vec offset;

  static AffineMap translation(const Vec& t);
  static AffineMap scaling(int dim, double factor);
  // Dilation about a fixed point: x -> center + factor * (x - center).
  static AffineMap dilation(const Vec& center, double factor);
};

struct McEstimate {
  Vec estimate;
  Vec std_error;  // per-coordinate standard error of the mean
  long accepted = 0;
  long samples = 0;
};

// Convex hull of a finite point set.  Facets are found by exhaustive scan
// over dim-subsets (coplanarity tolerance 1e-9, scaled by coordinate
// magnitude); intended for desk-scale instances, not large point clouds.
// Throws DegenerateInput if the affine hull is below the ambient dimension,
// UnsupportedDimension above dimension 6.
Polytope convex_hull(const std::vector<Vec>& points);

// Volume and centroid via fan triangulation from the vertex mean; exact up
// to floating-point rounding for polytopes.
double volume(const Polytope& p);
Vec centroid(const Polytope& p);

// Support function h(u) = max_v u . v  (u need not be unit, but nonzero) and
// width w(u) = (h(u) + h(-u)) / |u|.
double support(const Polytope& p, const Vec& u);
double width(const Polytope& p, const Vec& u);

double diameter(const Polytope& p);

bool contains(const Polytope& p, const Vec& x, double tolerance);

// Parameter range {s : point + s * dir in p} of a line clipped to the body;
// empty() when the line misses.
struct LineRange {
  double lo = 0.0, hi = 0.0;
  bool empty() const { return !(lo <= hi); }
};
LineRange line_intersection(const Polytope& p, const Vec& point, const Vec& dir);

// Length of the chord through `point` in direction `dir` (0 if disjoint).
double chord_length(const Polytope& p, const Vec& point, const Vec& dir);

// Orthogonal projection onto the subspace, as a polytope in the subspace's
// k basis coordinates: hull of { basis^T v }.
Polytope project(const Polytope& p, const Subspace& s);

// Image under x -> linear * x + offset; linear must be square invertible
// (SingularMap otherwise).  Recomputes the hull of the mapped vertices.
Polytope transform(const Polytope& p, const AffineMap& map);

// Rejection sampling from the bounding box; per-coordinate standard errors.
// Throws SamplingFailure if the acceptance rate falls below 1e-6.
McEstimate monte_carlo_centroid(const Polytope& p, long samples, std::uint64_t seed);

// Boundary cycle of a facet of a 3-dimensional polytope, as vertex indices
// in consecutive order around the facet polygon.
std::vector<int> facet_loop(const Polytope& p, const Facet& f);

// Structural checks: unit normals, facet certificates (every vertex on the
// inner side of every facet within 1e-9), facet affine dimension, vertex
// incidence counts, Euler relation for dim <= 3.  Throws Error on violation.
void check_consistency(const Polytope& p);

}  // namespace cgap
