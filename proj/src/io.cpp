#include "cgap/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cgap {
namespace {

using nlohmann::json;

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

double number_at(const json& j, const std::string& where) {
  if (!j.is_number()) throw SchemaError(where + ": expected a number");
  return j.get<double>();
}

Vec vec_at(const json& j, const std::string& where, int want_len = -1) {
  if (!j.is_array() || j.empty()) throw SchemaError(where + ": expected a non-empty array");
  if (want_len >= 0 && static_cast<int>(j.size()) != want_len)
    throw SchemaError(where + ": expected " + std::to_string(want_len) + " numbers, got " +
                      std::to_string(j.size()));
  Vec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    v[i] = number_at(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_vec(const Vec& v) {
  std::string s = "[";
  for (int i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += format_double(v[i]);
  }
  return s + "]";
}

Polytope load_body(const std::string& path) {
  const json j = parse_file(path);
  if (!j.is_object()) throw SchemaError(path + ": top level must be an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<int>() < 1)
    throw SchemaError(path + ": dim: expected a positive integer");
  const int dim = j["dim"].get<int>();
  if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
    throw SchemaError(path + ": vertices: expected a non-empty array");
  std::vector<Vec> pts;
  pts.reserve(j["vertices"].size());
  for (std::size_t i = 0; i < j["vertices"].size(); ++i)
    pts.push_back(vec_at(j["vertices"][i], path + ": vertices[" + std::to_string(i) + "]", dim));
  return convex_hull(pts);
}

std::string body_json(const Polytope& p) {
  std::string s = "{\"dim\":" + std::to_string(p.dim) + ",\"vertices\":[";
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (i) s += ",";
    s += format_vec(p.vertices[i]);
  }
  return s + "]}";
}

void save_body(const std::string& path, const Polytope& p) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file: " + path);
  out << body_json(p) << "\n";
}

Hyperplane load_hyperplane(const std::string& path) {
  const json j = parse_file(path);
  if (!j.is_object()) throw SchemaError(path + ": top level must be an object");
  if (!j.contains("normal")) throw SchemaError(path + ": normal: missing");
  if (!j.contains("offset")) throw SchemaError(path + ": offset: missing");
  const Vec n = vec_at(j["normal"], path + ": normal");
  const double off = number_at(j["offset"], path + ": offset");
  return make_hyperplane(n, off);
}

Subspace load_subspace(const std::string& path) {
  const json j = parse_file(path);
  if (!j.is_object()) throw SchemaError(path + ": top level must be an object");
  if (!j.contains("basis") || !j["basis"].is_array() || j["basis"].empty())
    throw SchemaError(path + ": basis: expected a non-empty array");
  const int k = static_cast<int>(j["basis"].size());
  const Vec first = vec_at(j["basis"][0], path + ": basis[0]");
  const int n = static_cast<int>(first.size());
  Mat b(n, k);
  b.col(0) = first;
  for (int c = 1; c < k; ++c)
    b.col(c) = vec_at(j["basis"][c], path + ": basis[" + std::to_string(c) + "]", n);
  const Mat q = orthonormal_columns(b, 1e-9);
  if (q.cols() != k) throw SchemaError(path + ": basis: vectors are rank-deficient");
  return Subspace{q};
}

std::string gap_json(const GapResult& g) {
  std::string s = "{\"projected_centroid\":" + format_vec(g.projected_centroid);
  s += ",\"centroid_of_projection\":" + format_vec(g.centroid_of_projection);
  s += ",\"gap\":" + format_double(g.gap_norm);
  s += ",\"u\":" + (g.direction ? format_vec(*g.direction) : std::string("null"));
  s += ",\"width\":" + (g.width_along ? format_double(*g.width_along) : std::string("null"));
  s += ",\"ratio\":" + format_double(g.ratio) + "}";
  return s;
}

std::string bound_json(const BoundResult& b) {
  return "{\"n\":" + std::to_string(b.n) + ",\"k\":" + std::to_string(b.k) +
         ",\"value\":" + format_double(b.value) + ",\"t_max\":" + format_double(b.t_max) + "}";
}

std::string limit_json(const LimitResult& l) {
  return "{\"D\":" + format_double(l.value) + ",\"c0\":" + format_double(l.c_max) + "}";
}

std::string suite_json(const SuiteReport& r) {
  return "{\"trials\":" + std::to_string(r.trials) +
         ",\"violations\":" + std::to_string(r.violations) +
         ",\"max_ratio\":" + format_double(r.max_ratio) +
         ",\"argmax_seed\":" + std::to_string(r.argmax_seed) + "}";
}

std::string extremal_json(int n, double rho, const ExtremalCheck& chk) {
  return "{\"n\":" + std::to_string(n) + ",\"rho\":" + format_double(rho) +
         ",\"ratio\":" + format_double(chk.ratio) +
         ",\"expected\":" + format_double(chk.expected) +
         ",\"margin\":" + format_double(chk.margin) + "}";
}

std::string convention_json(const ConventionReport& rep) {
  std::string s = "{\"n\":" + std::to_string(rep.n);
  s += ",\"t_max\":" + format_double(rep.t_max);
  s += ",\"expected\":" + format_double(rep.expected);
  s += ",\"best_interpretation\":\"" + rep.best_interpretation + "\"";
  s += ",\"best_ratio\":" + format_double(rep.best_ratio);
  s += ",\"candidates\":[";
  for (std::size_t i = 0; i < rep.candidates.size(); ++i) {
    const ConventionCandidate& c = rep.candidates[i];
    if (i) s += ",";
    s += "{\"interpretation\":\"" + c.interpretation + "\"";
    s += ",\"rho\":" + format_double(c.rho);
    s += ",\"feasible\":" + std::string(c.feasible ? "true" : "false");
    if (c.feasible) {
      s += ",\"ratio\":" + format_double(c.ratio);
      s += ",\"abs_error\":" + format_double(c.abs_error);
    }
    s += "}";
  }
  return s + "]}";
}

std::string curve_csv(const std::vector<CurvePoint>& pts) {
  std::string s = "t,value\n";
  for (const CurvePoint& p : pts) s += format_double(p.t) + "," + format_double(p.value) + "\n";
  return s;
}

}  // namespace cgap
