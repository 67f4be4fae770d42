#pragma once

#include <string>
#include <vector>

#include "cgap/bounds.hpp"
#include "cgap/extremal.hpp"
#include "cgap/gap.hpp"
#include "cgap/polytope.hpp"

namespace cgap {

// All numeric output uses 17 significant digits ("%.17g"): doubles
// round-trip losslessly, so identical inputs diff byte-identically.
std::string format_double(double x);
std::string format_vec(const Vec& v);

// Body file {"dim": n, "vertices": [[...], ...]}; loading canonicalizes
// through convex_hull, so interior points do not survive a round trip.
Polytope load_body(const std::string& path);
std::string body_json(const Polytope& p);
void save_body(const std::string& path, const Polytope& p);

// {"normal": [...], "offset": f}; the normal is normalized on load.
Hyperplane load_hyperplane(const std::string& path);

// {"basis": [[...], ...]} with one basis vector per row; orthonormalized on
// load, rank deficiency is a SchemaError.
Subspace load_subspace(const std::string& path);

std::string gap_json(const GapResult& g);
std::string bound_json(const BoundResult& b);
std::string limit_json(const LimitResult& l);
std::string suite_json(const SuiteReport& r);
std::string extremal_json(int n, double rho, const ExtremalCheck& chk);
std::string convention_json(const ConventionReport& rep);
std::string curve_csv(const std::vector<CurvePoint>& pts);

}  // namespace cgap
