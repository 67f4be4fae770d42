#include "cgap/linalg.hpp"

#include <cmath>

#include "cgap/errors.hpp"

namespace cgap {

Mat orthonormal_columns(const Mat& a, double drop_tol) {
  Mat q(a.rows(), a.cols());
  int r = 0;
  for (int j = 0; j < a.cols(); ++j) {
    Vec v = a.col(j);
    for (int pass = 0; pass < 2; ++pass)
      for (int i = 0; i < r; ++i) v -= q.col(i).dot(v) * q.col(i);
    const double n = v.norm();
    if (n > drop_tol) q.col(r++) = v / n;
  }
  return q.leftCols(r);
}

Mat complement_basis(const Vec& unit_normal) {
  const int n = static_cast<int>(unit_normal.size());
  if (n < 2) throw PreconditionError("complement_basis: ambient dimension must be >= 2");
  if (std::abs(unit_normal.norm() - 1.0) > 1e-9)
    throw PreconditionError("complement_basis: normal must be unit");

  int skip = 0;
  for (int i = 1; i < n; ++i)
    if (std::abs(unit_normal[i]) > std::abs(unit_normal[skip])) skip = i;

  Mat b(n, n - 1);
  int r = 0;
  for (int i = 0; i < n; ++i) {
    if (i == skip) continue;
    Vec v = Vec::Unit(n, i);
    v -= unit_normal.dot(v) * unit_normal;
    for (int pass = 0; pass < 2; ++pass)
      for (int c = 0; c < r; ++c) v -= b.col(c).dot(v) * b.col(c);
    const double nn = v.norm();
    if (nn < 1e-12) throw Error("complement_basis: degenerate axis projection");
    b.col(r++) = v / nn;
  }
  return b;
}

}  // namespace cgap
