#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cgap/cli.hpp"
#include "cgap/io.hpp"
#include "oracles.hpp"

using namespace cgap;
using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out, err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path tmp_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "cgap_cli_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
  const auto path = tmp_dir() / name;
  std::ofstream f(path);
  f << content;
  return path.string();
}

std::string cube_json_text() {
  std::string s = "{\"dim\":3,\"vertices\":[";
  bool first = true;
  for (int m = 0; m < 8; ++m) {
    if (!first) s += ",";
    first = false;
    s += "[" + std::to_string(m & 1) + "," + std::to_string((m >> 1) & 1) + "," +
         std::to_string((m >> 2) & 1) + "]";
  }
  return s + "]}";
}

}  // namespace

TEST_CASE("constants dn / dnk / limit emit pinned values") {
  const RunResult dn3 = run_cli({"constants", "dn", "--n", "3"});
  REQUIRE(dn3.code == 0);
  const json j = json::parse(dn3.out);
  CHECK(j["n"] == 3);
  CHECK(j["k"] == 2);
  CHECK(std::abs(j["value"].get<double>() - oracle::kD3) <= 1e-10);
  CHECK(std::abs(j["t_max"].get<double>() - oracle::kT3) <= 1e-6);

  const RunResult dnk52 = run_cli({"constants", "dnk", "--n", "5", "--k", "2"});
  REQUIRE(dnk52.code == 0);
  const json j2 = json::parse(dnk52.out);
  CHECK(j2["n"] == 5);
  CHECK(j2["k"] == 2);
  CHECK(std::abs(j2["value"].get<double>() - oracle::kD52) <= 1e-9);

  const RunResult lim = run_cli({"constants", "limit"});
  REQUIRE(lim.code == 0);
  const json j3 = json::parse(lim.out);
  CHECK(std::abs(j3["D"].get<double>() - 0.201619) <= 1e-6);
  CHECK(std::abs(j3["c0"].get<double>() - (-2.35332)) <= 1e-5);
}

TEST_CASE("curve emits CSV with header and endpoint values") {
  const RunResult r = run_cli(
      {"curve", "--n", "3", "--t-from", "-1", "--t-to", "1", "--steps", "3"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "t,value");
  double ts[3], vs[3];
  for (int i = 0; i < 3; ++i) {
    REQUIRE(std::getline(lines, line));
    const auto comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    ts[i] = std::stod(line.substr(0, comma));
    vs[i] = std::stod(line.substr(comma + 1));
  }
  CHECK(!std::getline(lines, line));
  CHECK(ts[0] == doctest::Approx(-1.0));
  CHECK(ts[1] == doctest::Approx(0.0));
  CHECK(ts[2] == doctest::Approx(1.0));
  CHECK(vs[0] == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(vs[1] == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(vs[2] == doctest::Approx(13.0 / 90.0).epsilon(1e-12));
}

TEST_CASE("gap: symmetric body has ratio zero, null direction and width") {
  const std::string body = write_file("cube.json", cube_json_text());
  const std::string hyp =
      write_file("xy_plane.json", "{\"normal\":[0,0,1],\"offset\":0}");
  const RunResult r = run_cli({"gap", "--body", body, "--hyperplane", hyp});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["ratio"].get<double>() == 0.0);
  CHECK(j["gap"].get<double>() <= 1e-12);
  CHECK(j["u"].is_null());
  CHECK(j["width"].is_null());
  CHECK(j["projected_centroid"].size() == 2);
}

TEST_CASE("gap: sharp triangle, hyperplane and subspace routes") {
  const std::string tri = write_file(
      "tri.json", "{\"dim\":2,\"vertices\":[[0,0],[0,1],[1,0]]}");
  const std::string hyp =
      write_file("x_axis.json", "{\"normal\":[0,1],\"offset\":0}");
  const RunResult r = run_cli({"gap", "--body", tri, "--hyperplane", hyp});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(std::abs(j["ratio"].get<double>() - 1.0 / 6.0) <= 1e-12);
  CHECK(std::abs(j["gap"].get<double>() - 1.0 / 6.0) <= 1e-12);
  CHECK(std::abs(j["width"].get<double>() - 1.0) <= 1e-12);
  CHECK(std::abs(j["u"][0].get<double>() + 1.0) <= 1e-12);
  CHECK(std::abs(j["u"][1].get<double>()) <= 1e-12);

  const std::string sub = write_file("x_line.json", "{\"basis\":[[1,0]]}");
  const RunResult rs = run_cli({"gap", "--body", tri, "--subspace", sub});
  REQUIRE(rs.code == 0);
  const json js = json::parse(rs.out);
  CHECK(std::abs(js["ratio"].get<double>() - 1.0 / 6.0) <= 1e-12);

  // exactly one projection target
  CHECK(run_cli({"gap", "--body", tri}).code == 1);
  CHECK(run_cli({"gap", "--body", tri, "--hyperplane", hyp, "--subspace", sub})
            .code == 1);
}

TEST_CASE("gap: monte carlo route is deterministic and close to exact") {
  const std::string tri = write_file(
      "tri_mc.json", "{\"dim\":2,\"vertices\":[[0,0],[0,1],[1,0]]}");
  const std::string hyp =
      write_file("x_axis_mc.json", "{\"normal\":[0,1],\"offset\":0}");
  const std::vector<std::string> args = {"gap",      "--body",   tri,
                                         "--hyperplane", hyp,    "--method",
                                         "mc",       "--samples", "50000",
                                         "--seed",   "3"};
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const json j = json::parse(a.out);
  CHECK(std::abs(j["ratio"].get<double>() - 1.0 / 6.0) <= 0.02);
}

TEST_CASE("io roundtrip: interior points vanish, vertex sets survive") {
  const std::string with_interior = write_file(
      "cube_interior.json",
      "{\"dim\":3,\"vertices\":[[0,0,0],[1,0,0],[0,1,0],[0,0,1],[1,1,0],[1,0,1],"
      "[0,1,1],[1,1,1],[0.5,0.5,0.5]]}");
  const Polytope p = load_body(with_interior);
  CHECK(p.vertices.size() == 8);

  const std::string saved = (tmp_dir() / "cube_saved.json").string();
  save_body(saved, p);
  const Polytope q = load_body(saved);
  REQUIRE(q.vertices.size() == p.vertices.size());
  for (std::size_t i = 0; i < p.vertices.size(); ++i)
    CHECK((p.vertices[i] - q.vertices[i]).norm() <= 1e-12);
}

TEST_CASE("schema errors carry field context and exit code 1") {
  const std::string garbled = write_file("garbled.json", "{\"dim\": 3, \"vert");
  const RunResult g = run_cli({"gap", "--body", garbled, "--hyperplane",
                               write_file("h.json", "{\"normal\":[0,0,1],\"offset\":0}")});
  CHECK(g.code == 1);
  CHECK(!g.err.empty());

  const std::string short_row = write_file(
      "short_row.json", "{\"dim\":3,\"vertices\":[[0,0,0],[1,0],[0,1,0],[0,0,1]]}");
  const RunResult s = run_cli({"gap", "--body", short_row, "--hyperplane",
                               write_file("h2.json", "{\"normal\":[0,0,1],\"offset\":0}")});
  CHECK(s.code == 1);
  CHECK(s.err.find("vertices[1]") != std::string::npos);

  CHECK_THROWS_AS(load_body(write_file("no_dim.json", "{\"vertices\":[[0,0]]}")),
                  SchemaError);
  CHECK_THROWS_AS(
      load_subspace(write_file("rank_def.json", "{\"basis\":[[1,0,0],[2,0,0]]}")),
      SchemaError);
}

TEST_CASE("exit code matrix") {
  const std::string tri = write_file(
      "tri_codes.json", "{\"dim\":2,\"vertices\":[[0,0],[0,1],[1,0]]}");
  const std::string hyp =
      write_file("hyp_codes.json", "{\"normal\":[0,1],\"offset\":0}");

  // 0: success
  CHECK(run_cli({"constants", "dn", "--n", "3"}).code == 0);

  // 1: invalid input in many shapes
  CHECK(run_cli({"constants", "dn", "--n", "3", "--bogus"}).code == 1);
  CHECK(run_cli({"nonsense"}).code == 1);
  CHECK(run_cli({"constants", "dn"}).code == 1);  // missing --n
  CHECK(run_cli({"constants", "dn", "--n", "2"}).code == 1);
  CHECK(run_cli({"constants", "dnk", "--n", "4", "--k", "4"}).code == 1);
  CHECK(run_cli({"gap", "--body", "/no/such/file.json", "--hyperplane", hyp}).code ==
        1);
  const std::string flat = write_file(
      "flat.json", "{\"dim\":3,\"vertices\":[[0,0,0],[1,0,0],[0,1,0],[1,1,0]]}");
  CHECK(run_cli({"gap", "--body", flat, "--hyperplane", hyp}).code == 1);
  const std::string zero_normal =
      write_file("zero_normal.json", "{\"normal\":[0,0],\"offset\":0}");
  CHECK(run_cli({"gap", "--body", tri, "--hyperplane", zero_normal}).code == 1);
  CHECK(run_cli({"curve", "--n", "3", "--t-from", "0", "--t-to", "1", "--steps",
                 "1"})
            .code == 1);
  CHECK(run_cli({"random-test", "--dim", "1", "--trials", "5", "--seed", "1"})
            .code == 1);

  // 2: numerical failure (hopeless sampling density)
  const std::string needle = write_file(
      "needle.json",
      "{\"dim\":3,\"vertices\":[[0,0,0],[1,1,1],[1.001,0.999,1],[1.001,1,0.999]]}");
  const RunResult mc = run_cli({"gap", "--body", needle, "--hyperplane",
                                write_file("hz.json",
                                           "{\"normal\":[0,0,1],\"offset\":0}"),
                                "--method", "mc", "--samples", "200000", "--seed",
                                "1"});
  CHECK(mc.code == 2);
  CHECK(!mc.err.empty());

  // 3: random-test finds violations of an unsound constant
  const RunResult rt = run_cli({"random-test", "--dim", "3", "--trials", "50",
                                "--seed", "2", "--constant", "0.0001"});
  CHECK(rt.code == 3);
  const json j = json::parse(rt.out);
  CHECK(j["violations"].get<long>() > 0);
}

TEST_CASE("random-test: default constant is the sharp one; JSON shape fixed") {
  const RunResult r2 =
      run_cli({"random-test", "--dim", "2", "--trials", "300", "--seed", "5"});
  REQUIRE(r2.code == 0);
  const json j = json::parse(r2.out);
  CHECK(j.size() == 4);
  CHECK(j.contains("trials"));
  CHECK(j.contains("violations"));
  CHECK(j.contains("max_ratio"));
  CHECK(j.contains("argmax_seed"));
  CHECK(j["trials"].get<long>() == 300);
  CHECK(j["violations"].get<long>() == 0);
  CHECK(j["max_ratio"].get<double>() <= 1.0 / 6.0 + 1e-9);

  const RunResult r3 =
      run_cli({"random-test", "--dim", "3", "--trials", "200", "--seed", "8"});
  REQUIRE(r3.code == 0);
  CHECK(json::parse(r3.out)["max_ratio"].get<double>() <= oracle::kD3 + 1e-9);
}

TEST_CASE("determinism: identical invocations give byte-identical output") {
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"constants", "dn", "--n", "4"},
        std::vector<std::string>{"random-test", "--dim", "3", "--trials", "100",
                                 "--seed", "12"},
        std::vector<std::string>{"resolve-convention", "--n", "3"}}) {
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("extremal: reports the attained ratio and writes the body") {
  const std::string out_path = (tmp_dir() / "extremal3.json").string();
  const RunResult r = run_cli({"extremal", "--n", "3", "--out", out_path});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["n"] == 3);
  CHECK(std::abs(j["ratio"].get<double>() - oracle::kD3) <= 1e-8);
  CHECK(std::abs(j["expected"].get<double>() - oracle::kD3) <= 1e-10);
  CHECK(std::abs(j["margin"].get<double>()) <= 1e-8);
  CHECK(j["rho"].get<double>() == doctest::Approx(1.0 + oracle::kT3).epsilon(1e-6));
  const Polytope body = load_body(out_path);
  CHECK(body.dim == 3);
  CHECK(body.vertices.size() == 6);

  // custom lifts pass through
  const RunResult rc =
      run_cli({"extremal", "--n", "3", "--mu", "-0.5", "--nu", "0.75"});
  REQUIRE(rc.code == 0);
  CHECK(std::abs(json::parse(rc.out)["margin"].get<double>()) <= 1e-8);

  CHECK(run_cli({"extremal", "--n", "3", "--mu", "0.5", "--nu", "0.5"}).code == 1);
}

TEST_CASE("shake: writes the shaken body and prints it") {
  std::string floating = "{\"dim\":3,\"vertices\":[";
  bool first = true;
  for (int m = 0; m < 8; ++m) {
    if (!first) floating += ",";
    first = false;
    floating += "[" + std::to_string(m & 1) + "," + std::to_string((m >> 1) & 1) +
                "," + std::to_string(2 + ((m >> 2) & 1)) + "]";
  }
  floating += "]}";
  const std::string body = write_file("floating_cube.json", floating);
  const std::string hyp =
      write_file("ground.json", "{\"normal\":[0,0,1],\"offset\":0}");
  const std::string out_path = (tmp_dir() / "shaken.json").string();
  const RunResult r = run_cli({"shake", "--body", body, "--hyperplane", hyp,
                               "--out", out_path});
  REQUIRE(r.code == 0);
  const Polytope shaken = load_body(out_path);
  CHECK(shaken.vertices.size() == 8);
  double lo = 1e300, hi = -1e300;
  for (const Vec& v : shaken.vertices) {
    lo = std::min(lo, v[2]);
    hi = std::max(hi, v[2]);
  }
  CHECK(std::abs(lo) <= 1e-12);
  CHECK(hi == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(json::parse(r.out)["vertices"].size() == 8);
}

TEST_CASE("resolve-convention: machine-readable adjudication") {
  const RunResult r = run_cli({"resolve-convention", "--n", "3"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["best_interpretation"] == "1 + t_max");
  CHECK(std::abs(j["best_ratio"].get<double>() - oracle::kD3) <= 1e-8);
  REQUIRE(j["candidates"].size() == 2);
  CHECK(j["candidates"][0]["feasible"] == true);
  CHECK(j["candidates"][1]["feasible"] == false);
  CHECK(j["candidates"][1]["rho"].get<double>() < 0.0);
  CHECK(!j["candidates"][1].contains("ratio"));
}
