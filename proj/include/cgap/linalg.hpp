#pragma once

#include <Eigen/Dense>

namespace cgap {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

namespace tol {

// Absolute coplanarity / incidence tolerance at unit scale; scaled by the
// largest coordinate magnitude wherever coordinates enter.
inline constexpr double coplanarity = 1e-9;

// Unit-norm checks on directions and facet normals.
inline constexpr double unit_norm = 1e-12;

// A centroid gap below gap_rel * diameter(projection) is reported as zero
// (no meaningful direction).
inline constexpr double gap_rel = 1e-12;

// Rank decisions on sets of unit normals.
inline constexpr double normal_rank = 1e-7;

}  // namespace tol

// Orthonormal basis of span(columns of a) via modified Gram-Schmidt with one
// re-orthogonalization pass; columns with residual <= drop_tol are skipped.
Mat orthonormal_columns(const Mat& a, double drop_tol);

// Orthonormal basis of the hyperplane through the origin with the given unit
// normal, as the columns of an n x (n-1) matrix.  Deterministic: axis vectors
// excluding the one most aligned with the normal, Gram-Schmidt in ascending
// index order.  For normal == e_n this yields exactly (e_1, ..., e_{n-1}).
Mat complement_basis(const Vec& unit_normal);

}  // namespace cgap
