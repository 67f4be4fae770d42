#include "cgap/cli.hpp"

#include <cstdint>
#include <optional>

#include <CLI11.hpp>

#include "cgap/bounds.hpp"
#include "cgap/extremal.hpp"
#include "cgap/gap.hpp"
#include "cgap/io.hpp"
#include "cgap/polytope.hpp"

namespace cgap::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Centroid gaps of convex-body projections: sharp constants, "
               "extremal bodies, shaking, randomized falsification"};
  app.require_subcommand(1);

  auto* constants = app.add_subcommand("constants", "Sharp bound constants");
  constants->require_subcommand(1);

  int dn_n = 3;
  double dn_tol = 1e-10;
  auto* c_dn = constants->add_subcommand("dn", "Hyperplane-projection constant D_n");
  c_dn->add_option("--n", dn_n, "ambient dimension (>= 3)")->required();
  c_dn->add_option("--tol", dn_tol, "search interval tolerance");

  int dnk_n = 3, dnk_k = 1;
  auto* c_dnk = constants->add_subcommand("dnk", "k-subspace-projection constant D_{n,k}");
  c_dnk->add_option("--n", dnk_n, "ambient dimension (>= 3)")->required();
  c_dnk->add_option("--k", dnk_k, "projection dimension (1..n-1)")->required();

  auto* c_limit =
      constants->add_subcommand("limit", "Dimension-free constant D and its exponent c0");

  auto* curve_cmd = app.add_subcommand("curve", "CSV sample of the bound objective over t");
  int cu_n = 3, cu_k = -1, cu_steps = 2;
  double cu_from = -1.0, cu_to = 0.0;
  curve_cmd->add_option("--n", cu_n, "ambient dimension")->required();
  curve_cmd->add_option("--k", cu_k, "projection dimension (default n-1)");
  curve_cmd->add_option("--t-from", cu_from, "left end of the t range")->required();
  curve_cmd->add_option("--t-to", cu_to, "right end of the t range")->required();
  curve_cmd->add_option("--steps", cu_steps, "sample count (>= 2)")->required();

  auto* gap_cmd = app.add_subcommand("gap", "Centroid gap of a body under a projection");
  std::string g_body, g_hyp, g_sub, g_method = "exact";
  long g_samples = 100000;
  std::uint64_t g_seed = 1;
  gap_cmd->add_option("--body", g_body, "body JSON file")->required();
  gap_cmd->add_option("--hyperplane", g_hyp, "hyperplane JSON file");
  gap_cmd->add_option("--subspace", g_sub, "subspace JSON file");
  gap_cmd->add_option("--method", g_method, "exact | mc")
      ->check(CLI::IsMember({"exact", "mc"}));
  gap_cmd->add_option("--samples", g_samples, "Monte Carlo samples (mc method)");
  gap_cmd->add_option("--seed", g_seed, "Monte Carlo seed (mc method)");

  auto* ex_cmd = app.add_subcommand("extremal", "Build and check an equality-case body");
  int ex_n = 3;
  std::string ex_l0, ex_out;
  double ex_mu = 0.0, ex_nu = 1.0;
  ex_cmd->add_option("--n", ex_n, "ambient dimension (3..6)")->required();
  ex_cmd->add_option("--l0", ex_l0, "base body JSON file of dimension n-2");
  ex_cmd->add_option("--mu", ex_mu, "wall lift of the first homothet");
  ex_cmd->add_option("--nu", ex_nu, "wall lift of the second homothet");
  ex_cmd->add_option("--out", ex_out, "write the constructed body JSON here");

  auto* sh_cmd = app.add_subcommand("shake", "Blaschke shaking against a hyperplane");
  std::string sh_body, sh_hyp, sh_out;
  sh_cmd->add_option("--body", sh_body, "body JSON file")->required();
  sh_cmd->add_option("--hyperplane", sh_hyp, "hyperplane JSON file")->required();
  sh_cmd->add_option("--out", sh_out, "write the shaken body JSON here")->required();

  auto* rt_cmd = app.add_subcommand("random-test", "Randomized bound falsification suite");
  int rt_dim = 3;
  long rt_trials = 1;
  std::uint64_t rt_seed = 1;
  double rt_constant = 0.0;
  rt_cmd->add_option("--dim", rt_dim, "body dimension (>= 2)")->required();
  rt_cmd->add_option("--trials", rt_trials, "number of trials")->required();
  rt_cmd->add_option("--seed", rt_seed, "suite seed")->required();
  auto* rt_const_opt =
      rt_cmd->add_option("--constant", rt_constant, "bound constant (default: sharp constant)");

  auto* rc_cmd =
      app.add_subcommand("resolve-convention", "Which homothety reading attains the bound");
  int rc_n = 3;
  rc_cmd->add_option("--n", rc_n, "ambient dimension")->required();

  try {
    std::vector<std::string> full = args;
    full.insert(full.begin(), "cgap");
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const std::string& s : full) argv.push_back(s.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (c_dn->parsed()) {
      out << bound_json(dn(dn_n, dn_tol)) << "\n";
      return 0;
    }
    if (c_dnk->parsed()) {
      out << bound_json(dnk(dnk_n, dnk_k)) << "\n";
      return 0;
    }
    if (c_limit->parsed()) {
      out << limit_json(limit_constant()) << "\n";
      return 0;
    }
    if (curve_cmd->parsed()) {
      const int k = cu_k < 0 ? cu_n - 1 : cu_k;
      out << curve_csv(curve(cu_n, k, cu_from, cu_to, cu_steps));
      return 0;
    }
    if (gap_cmd->parsed()) {
      if (g_hyp.empty() == g_sub.empty()) {
        err << "gap: exactly one of --hyperplane or --subspace is required\n";
        return 1;
      }
      const Polytope body = load_body(g_body);
      GapResult g;
      if (!g_hyp.empty()) {
        const Hyperplane h = load_hyperplane(g_hyp);
        g = g_method == "mc" ? centroid_gap_mc(body, h, g_samples, g_seed)
                             : centroid_gap(body, h);
      } else {
        const Subspace s = load_subspace(g_sub);
        g = g_method == "mc" ? centroid_gap_mc(body, s, g_samples, g_seed)
                             : centroid_gap(body, s);
      }
      out << gap_json(g) << "\n";
      return 0;
    }
    if (ex_cmd->parsed()) {
      MaximizerSpec spec =
          optimal_maximizer(ex_n, ex_l0.empty() ? default_base(ex_n) : load_body(ex_l0));
      spec.mu = ex_mu;
      spec.nu = ex_nu;
      const ExtremalCheck chk = verify_extremal(spec);
      out << extremal_json(ex_n, spec.rho, chk) << "\n";
      if (!ex_out.empty()) save_body(ex_out, build_maximizer(spec));
      return 0;
    }
    if (sh_cmd->parsed()) {
      const Polytope shaken = shake(load_body(sh_body), load_hyperplane(sh_hyp));
      save_body(sh_out, shaken);
      out << body_json(shaken) << "\n";
      return 0;
    }
    if (rt_cmd->parsed()) {
      if (rt_dim < 2) {
        err << "random-test: --dim must be >= 2\n";
        return 1;
      }
      const double constant = rt_const_opt->count()
                                  ? rt_constant
                                  : (rt_dim == 2 ? 1.0 / 6.0 : dn(rt_dim).value);
      RandomBodySpec tmpl;
      tmpl.dim = rt_dim;
      tmpl.seed = rt_seed;
      const SuiteReport rep = random_test_suite(rt_dim, rt_trials, tmpl, constant);
      out << suite_json(rep) << "\n";
      return rep.violations > 0 ? 3 : 0;
    }
    if (rc_cmd->parsed()) {
      out << convention_json(resolve_homothety_convention(rc_n)) << "\n";
      return 0;
    }
    err << "no command\n";
    return 1;
  } catch (const SchemaError& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const InvalidSpec& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const DegenerateInput& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const DimensionMismatch& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const ZeroDirection& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const UnsupportedDimension& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const SingularMap& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    // ConvergenceFailure, SamplingFailure, DirectionMismatch, internal checks
    err << e.what() << "\n";
    return 2;
  }
}

}  // namespace cgap::cli
