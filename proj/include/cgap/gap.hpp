#pragma once

#include <cstdint>
#include <optional>

#include "cgap/polytope.hpp"

namespace cgap {

// Outcome of comparing P_H(centroid(K)) with centroid(P_H(K)).  Vectors in
// the projection's own k coordinates (the subspace basis, or the canonical
// complement basis of the hyperplane normal); gap_vector is
// projected_centroid - centroid_of_projection, and `direction` is that
// difference normalized and lifted to ambient coordinates.  A gap below
// 1e-12 * diameter(projection) counts as zero: no direction, no width,
// ratio 0.
struct GapResult {
  Vec projected_centroid;
  Vec centroid_of_projection;
  Vec gap_vector;
  double gap_norm = 0.0;
  std::optional<Vec> direction;
  std::optional<double> width_along;  // body width along `direction`
  double ratio = 0.0;                 // gap_norm / width_along, or 0
};

GapResult centroid_gap(const Polytope& body, const Hyperplane& h);
GapResult centroid_gap(const Polytope& body, const Subspace& s);

// Same comparison with both centroids replaced by rejection-sampling
// estimates (the body under `seed`, the projection under a derived seed);
// support widths stay exact.  Deterministic per seed.
GapResult centroid_gap_mc(const Polytope& body, const Hyperplane& h, long samples,
                          std::uint64_t seed);
GapResult centroid_gap_mc(const Polytope& body, const Subspace& s, long samples,
                          std::uint64_t seed);

// Slack of the bound  gap <= constant * width:  constant * width_along - gap.
// For a zero gap the direction is undefined and the (positive) slack is
// reported against the body diameter instead.
double verify_bound(const Polytope& body, const Hyperplane& h, double constant);

// Blaschke shaking against the hyperplane: every chord of the body along the
// normal is slid to start on the hyperplane, preserving the projection and
// all chord lengths.  Exact polytope output; dimensions 2 and 3 only.
Polytope shake(const Polytope& body, const Hyperplane& h);

struct RandomBodySpec {
  int dim = 3;
  int vertex_count = 20;  // points drawn before the hull (hull may keep fewer)
  enum class Dist { gaussian, sphere } dist = Dist::gaussian;
  std::uint64_t seed = 1;
};

// Hull of vertex_count random points; retries with a derived seed if the
// draw is degenerate.  Deterministic in the spec.
Polytope random_polytope(const RandomBodySpec& spec);

struct SuiteReport {
  long trials = 0;
  long violations = 0;      // trials with bound slack below -1e-9
  double min_margin = 0.0;  // worst bound slack seen
  double max_ratio = 0.0;
  std::uint64_t argmax_seed = 0;  // per-trial seed attaining max_ratio
};

// Randomized falsification run: per trial, draw a body (per-trial seed
// mix_seed(template.seed, i), vertex count varied in [dim+1, vertex_count]),
// recenter it at its centroid, cut with a uniformly random hyperplane
// through the origin, and test  gap <= constant * width.
SuiteReport random_test_suite(int dim, long trials, const RandomBodySpec& tmpl,
                              double constant);

}  // namespace cgap
