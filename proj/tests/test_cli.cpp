// End-to-end tests of the slgeo binary (path injected via SLGEO_BIN).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

RunResult run(const std::string& args) {
  const std::string out_file = "cli_stdout.tmp", err_file = "cli_stderr.tmp";
  const std::string cmd =
      std::string(SLGEO_BIN) + " " + args + " > " + out_file + " 2> " + err_file;
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  auto slurp = [](const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  r.out = slurp(out_file);
  r.err = slurp(err_file);
  std::remove(out_file.c_str());
  std::remove(err_file.c_str());
  return r;
}

nlohmann::json payload(const RunResult& r) {
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.at("schema_version") == "slgeo/1");
  return doc.at("payload");
}

}  // namespace

TEST_CASE("exp evaluates single points as JSON") {
  const RunResult r = run("exp --problem 1 --phi0 0 --c 5 --t 2");
  REQUIRE(r.exit_code == 0);
  const auto p = payload(r).at("point");
  CHECK(p.at("x").get<double>() == doctest::Approx(0.0));
  CHECK(p.at("y").get<double>() == doctest::Approx(2.0));
  CHECK(p.at("z").get<double>() == doctest::Approx(0.0));
}

TEST_CASE("exp with --samples emits a CSV polyline with columns t,x,y,z") {
  const RunResult r = run("exp --problem 1 --phi0 1 --c 0 --t 1 --samples 11");
  REQUIRE(r.exit_code == 0);
  std::istringstream in(r.out);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "t,x,y,z");
  int rows = 0;
  std::string last;
  while (std::getline(in, line))
    if (!line.empty()) {
      ++rows;
      last = line;
    }
  CHECK(rows == 11);
  double t, x, y, z;
  REQUIRE(std::sscanf(last.c_str(), "%lf,%lf,%lf,%lf", &t, &x, &y, &z) == 4);
  CHECK(t == doctest::Approx(1.0));
  CHECK(y == doctest::Approx(std::cosh(1.0)));
}

TEST_CASE("exp past the negative-c domain bound exits 2 with a JSON error") {
  const RunResult r = run("exp --problem 1 --phi0 1 --c -1 --t 999");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("beyond domain bound kK/l") != std::string::npos);
  CHECK(nlohmann::json::parse(r.err).contains("error"));
}

TEST_CASE("dist reports the distance and the classification") {
  RunResult r = run("dist --problem 1 --x 0 --y 1 --z 0");
  REQUIRE(r.exit_code == 0);
  CHECK(payload(r).at("distance").get<double>() == doctest::Approx(1.0));
  // outside targets report d = 0, exit 0
  r = run("dist --problem 2 --x 0 --y 1 --z 0");
  REQUIRE(r.exit_code == 0);
  CHECK(payload(r).at("distance").get<double>() == 0.0);
  CHECK(payload(r).at("attainable") == false);
  CHECK(payload(r).at("classification").at("region") == "outside");
}

TEST_CASE("synth emits both optimal plans at a multiplicity-2 target") {
  const RunResult r = run("synth --problem 1 --x 0 --y 1 --z 0.041666666666666664");
  REQUIRE(r.exit_code == 0);
  const auto p = payload(r);
  CHECK(p.at("multiplicity") == 2);
  REQUIRE(p.at("plans").size() == 2);
  const auto& arc = p.at("plans")[0][0];
  CHECK(arc.at("type") == "bang");
  CHECK(arc.at("duration").get<double>() == doctest::Approx(0.5));
}

TEST_CASE("sphere --pi-curve starts at (k, y, z) = (0, 1, 0)") {
  const RunResult r = run("sphere --problem 1 --R 1 --pi-curve --n 50");
  REQUIRE(r.exit_code == 0);
  std::istringstream in(r.out);
  std::string header, first;
  REQUIRE(std::getline(in, header));
  CHECK(header == "k,y,z");
  REQUIRE(std::getline(in, first));
  CHECK(first == "0,1,0");
  int rows = 1;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 50);
}

TEST_CASE("sphere point clouds carry stratum tags and honor --format json") {
  const RunResult csv = run("sphere --problem 1 --R 1 --n 25");
  REQUIRE(csv.exit_code == 0);
  std::istringstream in(csv.out);
  std::string header;
  REQUIRE(std::getline(in, header));
  CHECK(header == "x,y,z,stratum");
  const RunResult js = run("sphere --problem 1 --R 1 --n 25 --format json");
  REQUIRE(js.exit_code == 0);
  const auto pts = payload(js).at("points");
  REQUIRE(pts.size() == 25);
  CHECK(pts[0].at("stratum") == "Sa0");
}

TEST_CASE("reach classifies points and answers causal queries from a base") {
  RunResult r = run("reach --problem 1 --x 0 --y 1 --z 0.020833333333333332");
  REQUIRE(r.exit_code == 0);
  CHECK(payload(r).at("classification").at("region") == "interior");
  CHECK(payload(r).at("classification").at("stratum") == "M0");
  r = run("reach --problem 1 --x 0 --y 2 --z 0 --base 0,1,0");
  REQUIRE(r.exit_code == 0);
  CHECK(payload(r).at("in_causal_future") == true);
  // a base off the Martinet plane is rejected
  r = run("reach --problem 1 --x 0 --y 2 --z 0 --base 1,0,0");
  CHECK(r.exit_code == 2);
}

TEST_CASE("verify runs random points, is deterministic, and exits 0 on pass") {
  const std::string flags = "verify --problem 2 --random 4 --seed 1";
  const RunResult a = run(flags);
  REQUIRE(a.exit_code == 0);
  const auto p = payload(a);
  CHECK(p.at("total") == 4);
  CHECK(p.at("failed") == 0);
  const RunResult b = run(flags);
  CHECK(a.out == b.out);  // bit-identical output for a fixed seed
}

TEST_CASE("verify reads a points file and rejects malformed input") {
  {
    std::ofstream f("cli_points.tmp");
    f << "[[0.0,1.0,0.0],{\"x\":0.2,\"y\":1.0,\"z\":0.02}]";
  }
  RunResult r = run("verify --problem 1 --points cli_points.tmp");
  CHECK(r.exit_code == 0);
  CHECK(payload(r).at("total") == 2);
  {
    std::ofstream f("cli_points.tmp");
    f << "not json";
  }
  r = run("verify --problem 1 --points cli_points.tmp");
  CHECK(r.exit_code == 2);
  std::remove("cli_points.tmp");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").exit_code == 2);
  CHECK(run("exp --problem 3 --phi0 0 --c 1 --t 1").exit_code == 2);
  CHECK(run("dist --problem 1 --x 0 --y 1").exit_code == 2);
}
