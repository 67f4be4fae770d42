#pragma once

#include <vector>

#include "cgap/errors.hpp"

namespace cgap {

// Result of a one-dimensional bound maximization, with scan diagnostics.
struct BoundResult {
  int n = 0;
  int k = 0;  // subspace dimension; k = n-1 for the hyperplane constant
  double value = 0.0;
  double t_max = 0.0;
  double bracket_lo = 0.0;  // grid bracket handed to the refinement stage
  double bracket_hi = 0.0;
  int iterations = 0;       // golden-section iterations
  int grid_local_maxima = 0;  // strict local maxima seen on the scan grid
};

// integral_0^1 (t x + 1)^deg x^m dx  via the binomial expansion
// sum_j C(deg, j) t^j / (j + m + 1); requires t >= -1 (nonnegative base).
double moment(int deg, int m, double t);

// Centroid-gap objective for hyperplane projections in dimension n, as a
// function of the profile slope ratio t:
//   M(n-2, 2, t) / M(n-2, 1, t) - M(n-2, 1, t) / M(n-2, 0, t).
double dn_of_t(int n, double t);

// Objective for projections onto k-dimensional subspaces:
//   M(k-1, n-k+1, t) / M(k-1, n-k, t) - M(k-1, 1, t) / M(k-1, 0, t).
// Coincides with dn_of_t when k = n-1.
double dnk_of_t(int n, int k, double t);

// Closed rational form of dn_of_t for n = 3:
//   (1/6) (t^2 + 6 t + 6) / (2 t^2 + 7 t + 6).
double d3_rational(double t);

// Its derivative, -(1/6) (5 t^2 + 12 t + 6) / (2 t^2 + 7 t + 6)^2.
double d3_derivative(double t);

struct D3Exact {
  double value = 0.0;             // 1 - sqrt(2/3)
  double t_max = 0.0;             // (sqrt(6) - 6) / 5
  double derivative_check = 0.0;  // |d3_derivative(t_max)|
};

// Closed-form solution of the three-dimensional maximization; the
// derivative check certifies t_max as the critical point.
D3Exact d3_exact();

// Value of the objective in the cone limit t -> infinity: 1 / (n (n + 1)).
double cone_limit(int n);

// Sharp constant for hyperplane projections: maximum of dn_of_t over
// t in [-1, 50], bracketed on a geometric scan grid (refined toward t = -1
// and t = 0) and polished by golden-section search.  Throws
// ConvergenceFailure if the maximum sits on the scan boundary or fails to
// exceed the cone limit.
BoundResult dn(int n, double tol = 1e-10);

// Sharp constant for k-dimensional projections; the value must stay below
// its supremum k / (k + 1).
BoundResult dnk(int n, int k, double tol = 1e-10);

// Exponential-weight objective F(c) = E(2,c)/E(1,c) - E(1,c)/E(0,c) with
// E(m, c) = integral_0^1 x^m e^{c x} dx; the n -> infinity limit of dn_of_t
// under t = c / n.
double limit_objective(double c);

struct LimitResult {
  double value = 0.0;  // dimension-free constant sup_n D_n
  double c_max = 0.0;  // maximizing exponent
};

// Maximum of limit_objective over c in [-50, 50].
LimitResult limit_constant(double tol = 1e-12);

// Convergence check of the finite-dimensional constants to the limit:
// returns limit_constant().value - dn_of_t(n, c_max / n)  (positive,
// shrinking as n grows).
double dn_via_limit_consistency(int n);

struct CurvePoint {
  double t = 0.0;
  double value = 0.0;
};

// Uniform sampling of dnk_of_t(n, k, .) on [t_from, t_to], endpoints included.
std::vector<CurvePoint> curve(int n, int k, double t_from, double t_to, int steps);

}  // namespace cgap
