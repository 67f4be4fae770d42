// Acceptance gate: one self-contained check per release criterion, each
// printing a PASS/FAIL line with its runtime.  Exit code = failure count.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cgap/bounds.hpp"
#include "cgap/cli.hpp"
#include "cgap/extremal.hpp"
#include "cgap/gap.hpp"
#include "cgap/io.hpp"
#include "cgap/rng.hpp"
#include "oracles.hpp"

using namespace cgap;
using nlohmann::json;

namespace {

int failures = 0;

void run_criterion(int idx, const char* name, double time_limit_s,
                   const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
    ok = false;
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit_s > 0.0 && elapsed >= time_limit_s) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
  }
  std::printf("%s  %2d  %-28s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", idx, name,
              elapsed, detail.empty() ? "" : "  -- ", detail.c_str());
  if (!ok) ++failures;
}

json run_cli_json(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  if (code != 0) throw Error("cli exit " + std::to_string(code) + ": " + err.str());
  return json::parse(out.str());
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

int main() {
  run_criterion(1, "3d-constant-reproduction", 1.0, [](std::string& d) {
    const json j = run_cli_json({"constants", "dn", "--n", "3"});
    const double value = j["value"].get<double>();
    const double t_max = j["t_max"].get<double>();
    d = "value=" + format_double(value);
    return close(value, 0.1835034190722738, 1e-9) &&
           close(t_max, -0.7101020514433644, 1e-7);
  });

  run_criterion(2, "limit-constant", 1.0, [](std::string& d) {
    const json j = run_cli_json({"constants", "limit"});
    const double D = j["D"].get<double>();
    const double c0 = j["c0"].get<double>();
    d = "D=" + format_double(D);
    return close(D, 0.201619, 1e-5) && close(c0, -2.35332, 1e-3);
  });

  run_criterion(3, "monotone-chain-to-limit", 5.0, [](std::string& d) {
    const double D = limit_constant().value;
    double prev = 0.0;
    for (int n = 3; n <= 12; ++n) {
      const double v = dn(n).value;
      if (!(v > prev)) {
        d = "chain broke at n=" + std::to_string(n);
        return false;
      }
      prev = v;
    }
    if (!(prev < D)) {
      d = "dn(12) not below the limit";
      return false;
    }
    const double drift = dn_via_limit_consistency(10000);
    d = "limit drift at n=10^4: " + format_double(drift);
    return std::abs(drift) <= 1e-4;
  });

  run_criterion(4, "planar-sharpness", 10.0, [](std::string& d) {
    Vec a(2), b(2), c(2);
    a << 0, 0;
    b << 0, 1;
    c << 1, 0;
    const Polytope tri = convex_hull({a, b, c});
    Vec up(2);
    up << 0, 1;
    const GapResult g = centroid_gap(tri, make_hyperplane(up, 0.0));
    if (!close(g.ratio, 1.0 / 6.0, 1e-12)) {
      d = "triangle ratio " + format_double(g.ratio);
      return false;
    }
    RandomBodySpec tmpl;
    tmpl.dim = 2;
    tmpl.vertex_count = 16;
    tmpl.seed = 20240501;
    const SuiteReport rep = random_test_suite(2, 10000, tmpl, 1.0 / 6.0);
    d = "max polygon ratio " + format_double(rep.max_ratio);
    return rep.violations == 0 && rep.max_ratio <= 1.0 / 6.0 + 1e-9;
  });

  run_criterion(5, "3d-extremal-equality", 1.0, [](std::string& d) {
    const ExtremalCheck best = verify_extremal(optimal_maximizer(3));
    if (std::abs(best.margin) > 1e-8) {
      d = "optimal margin " + format_double(best.margin);
      return false;
    }
    MaximizerSpec prism = optimal_maximizer(3);
    prism.rho = 1.0;
    const ExtremalCheck off = verify_extremal(prism);
    d = "suboptimal shortfall " + format_double(-off.margin);
    return off.margin < -1e-3;
  });

  run_criterion(6, "4d-extremal-crosscheck", 10.0, [](std::string& d) {
    const ExtremalCheck c4 = verify_extremal(optimal_maximizer(4));
    d = "ratio " + format_double(c4.ratio) + " vs " + format_double(c4.expected);
    return std::abs(c4.margin) <= 1e-6;
  });

  run_criterion(7, "3d-falsification-suite", 60.0, [](std::string& d) {
    const double d3 = dn(3).value;
    RandomBodySpec tmpl;
    tmpl.dim = 3;
    tmpl.vertex_count = 20;
    tmpl.seed = 987654321;
    const SuiteReport rep = random_test_suite(3, 5000, tmpl, d3);
    d = "min margin " + format_double(rep.min_margin);
    return rep.violations == 0 && rep.min_margin >= -1e-9;
  });

  run_criterion(8, "subspace-consistency", 5.0, [](std::string& d) {
    for (int n = 3; n <= 6; ++n)
      if (std::abs(dnk(n, n - 1).value - dn(n).value) > 1e-10) {
        d = "dnk(n, n-1) mismatch at n=" + std::to_string(n);
        return false;
      }
    for (int n : {2, 3, 5, 8})
      if (!close(dnk(n, 1).value, n / (n + 1.0) - 0.5, 1e-12)) {
        d = "dnk(n, 1) closed form failed at n=" + std::to_string(n);
        return false;
      }
    double prev = 0.0;
    for (int n : {5, 10, 20, 50}) {
      const double v = dnk(n, 2).value;
      if (!(v > prev && v < 2.0 / 3.0)) {
        d = "dnk(n, 2) chain broke at n=" + std::to_string(n);
        return false;
      }
      prev = v;
    }
    d = "dnk(50, 2) = " + format_double(prev);
    return true;
  });

  run_criterion(9, "moment-oracle-agreement", 0.0, [](std::string& d) {
    for (int n = 3; n <= 7; ++n)
      for (double t : {-0.9, -0.5, 0.5, 2.0, 10.0}) {
        const double r0 = oracle::m0_closed(n, t);
        const double r1 = oracle::m1_closed(n, t);
        const double r2 = oracle::m2_closed(n, t);
        if (std::abs(moment(n - 2, 0, t) - r0) > 1e-12 * std::abs(r0) ||
            std::abs(moment(n - 2, 1, t) - r1) > 1e-12 * std::abs(r1) ||
            std::abs(moment(n - 2, 2, t) - r2) > 1e-12 * std::abs(r2)) {
          d = "closed-form mismatch at n=" + std::to_string(n) +
              ", t=" + format_double(t);
          return false;
        }
      }
    std::mt19937_64 gen(31337);
    std::uniform_real_distribution<double> td(-1.0, 5.0);
    std::uniform_int_distribution<int> degd(0, 10), md(0, 4);
    for (int i = 0; i < 50; ++i) {
      const int deg = degd(gen), m = md(gen);
      const double t = td(gen);
      const double q = oracle::moment_quad(deg, m, t);
      if (std::abs(moment(deg, m, t) - q) > 1e-10 * std::max(1.0, std::abs(q))) {
        d = "quadrature mismatch at deg=" + std::to_string(deg);
        return false;
      }
    }
    return true;
  });

  run_criterion(10, "shaking-invariance", 0.0, [](std::string& d) {
    for (int i = 0; i < 100; ++i) {
      RandomBodySpec spec;
      spec.dim = 3;
      spec.vertex_count = 4 + static_cast<int>(mix_seed(555, i) % 12);
      spec.seed = mix_seed(777000, i);
      const Polytope p = random_polytope(spec);
      const Hyperplane h =
          make_hyperplane(Rng(mix_seed(888000, i)).unit_vec(3), -1.0);
      const Polytope s = shake(p, h);
      const Mat basis = complement_basis(h.normal);
      const Polytope shadow_p = project(p, Subspace{basis});
      const Polytope shadow_s = project(s, Subspace{basis});
      if (shadow_p.vertices.size() != shadow_s.vertices.size()) {
        d = "projection vertex count changed at trial " + std::to_string(i);
        return false;
      }
      for (const Vec& v : shadow_p.vertices) {
        double best = 1e300;
        for (const Vec& w : shadow_s.vertices) best = std::min(best, (v - w).norm());
        if (best > 1e-9) {
          d = "projection vertex moved at trial " + std::to_string(i);
          return false;
        }
      }
      const Vec dc = basis.transpose() * (centroid(s) - centroid(p));
      if (dc.norm() > 1e-9) {
        d = "centroid wall-component moved at trial " + std::to_string(i);
        return false;
      }
    }
    return true;
  });

  run_criterion(11, "exact-vs-monte-carlo", 0.0, [](std::string& d) {
    int agree = 0;
    for (int i = 0; i < 100; ++i) {
      RandomBodySpec spec;
      spec.dim = 3;
      spec.vertex_count = 4 + static_cast<int>(mix_seed(4242, i) % 16);
      spec.seed = mix_seed(90210, i);
      const Polytope p = random_polytope(spec);
      const Vec exact = centroid(p);
      const McEstimate mc = monte_carlo_centroid(p, 20000, mix_seed(1001, i));
      bool all = true;
      for (int c = 0; c < 3; ++c)
        all = all && std::abs(exact[c] - mc.estimate[c]) <= 4.0 * mc.std_error[c];
      agree += all ? 1 : 0;
    }
    d = std::to_string(agree) + "/100 within 4 standard errors";
    return agree >= 95;
  });

  std::printf("%s: %d of 11 criteria passed\n", failures == 0 ? "OK" : "FAILED",
              11 - failures);
  return failures == 0 ? 0 : 1;
}
