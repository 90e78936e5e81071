// slgeo: command-line front end for the sub-Lorentzian Martinet library.
//
// Subcommands: exp, dist, synth, sphere, reach, verify.  JSON output carries
// schema_version "slgeo/1" with doubles printed at 17 significant digits;
// CSV trajectories use columns t,x,y,z and sphere clouds x,y,z,stratum.
// Exit codes: 0 ok, 1 verification failure, 2 usage or domain error.

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "slmart/oracle.hpp"

namespace {

constexpr const char* kSchema = "slgeo/1";

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string point_json(slmart::Point q) {
  return "{\"x\":" + num(q.x) + ",\"y\":" + num(q.y) + ",\"z\":" + num(q.z) + "}";
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

void emit_record(const std::string& command, const std::string& payload) {
  std::printf("{\"schema_version\":\"%s\",\"command\":\"%s\",\"payload\":%s}\n",
              kSchema, command.c_str(), payload.c_str());
}

std::string classification_json(const slmart::Classification& cl) {
  std::string out = "{\"region\":\"" + std::string(slmart::to_string(cl.region)) + "\"";
  if (cl.stratum)
    out += ",\"stratum\":\"" + std::string(slmart::to_string(*cl.stratum)) + "\"";
  out += ",\"surfaces\":[";
  bool first = true;
  const std::pair<unsigned, const char*> names[] = {
      {slmart::surface::kS1, "S1"}, {slmart::surface::kS2, "S2"},
      {slmart::surface::kS3, "S3"}, {slmart::surface::kS4, "S4"},
      {slmart::surface::kZ1, "z1"}, {slmart::surface::kZ2, "z2"}};
  for (auto [flag, name] : names)
    if (cl.on(flag)) {
      if (!first) out += ',';
      out += quoted(name);
      first = false;
    }
  out += ']';
  if (cl.hom)
    out += ",\"xi\":" + num(cl.hom->xi) + ",\"eta\":" + num(cl.hom->eta);
  return out + "}";
}

std::string arcs_json(const std::vector<slmart::Arc>& arcs) {
  std::string out = "[";
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i) out += ',';
    std::visit(
        [&out](const auto& arc) {
          using T = std::decay_t<decltype(arc)>;
          if constexpr (std::is_same_v<T, slmart::NormalArc>)
            out += "{\"type\":\"normal\",\"phi0\":" + num(arc.lam.phi0) +
                   ",\"c\":" + num(arc.lam.c) + ",\"duration\":" + num(arc.duration) + "}";
          else if constexpr (std::is_same_v<T, slmart::BangArc>)
            out += "{\"type\":\"bang\",\"u1\":" + num(arc.control[0]) +
                   ",\"u2\":" + num(arc.control[1]) + ",\"duration\":" + num(arc.duration) + "}";
          else
            out += "{\"type\":\"singular\",\"duration\":" + num(arc.duration) + "}";
        },
        arcs[i]);
  }
  return out + "]";
}

int thread_budget(std::size_t jobs) {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("SLGEO_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) n = static_cast<unsigned>(v);
  }
  return static_cast<int>(std::min<std::size_t>(n, jobs ? jobs : 1));
}

// --- exp -------------------------------------------------------------------

int cmd_exp(int problem, double phi0, double c, double t, int samples) {
  const slmart::Covector lam{phi0, c, problem};
  if (samples > 0) {
    const auto traj = slmart::sample_trajectory(lam, t, std::max(samples, 2));
    std::printf("t,x,y,z\n");
    for (const auto& [ti, q] : traj)
      std::printf("%s,%s,%s,%s\n", num(ti).c_str(), num(q.x).c_str(),
                  num(q.y).c_str(), num(q.z).c_str());
    return 0;
  }
  const slmart::Point q = slmart::exp_map(lam, t);
  emit_record("exp", "{\"problem\":" + std::to_string(problem) +
                         ",\"phi0\":" + num(phi0) + ",\"c\":" + num(c) +
                         ",\"t\":" + num(t) + ",\"point\":" + point_json(q) + "}");
  return 0;
}

// --- dist / synth ----------------------------------------------------------

int cmd_dist(int problem, slmart::Point q) {
  const slmart::DistanceInfo info = slmart::distance_info(q, problem);
  emit_record("dist",
              "{\"problem\":" + std::to_string(problem) + ",\"point\":" + point_json(q) +
                  ",\"distance\":" + num(info.value) +
                  ",\"attainable\":" + (info.attainable ? "true" : "false") +
                  ",\"boundary_value\":" + (info.boundary_value ? "true" : "false") +
                  ",\"classification\":" + classification_json(info.cls) + "}");
  return 0;
}

int cmd_synth(int problem, slmart::Point q) {
  const slmart::SynthesisPlan plan = slmart::synthesize(q, problem);
  std::string plans = "[" + arcs_json(plan.arcs);
  if (plan.alternate) plans += "," + arcs_json(*plan.alternate);
  plans += "]";
  emit_record("synth", "{\"problem\":" + std::to_string(problem) +
                           ",\"point\":" + point_json(q) +
                           ",\"total_length\":" + num(plan.total_length) +
                           ",\"multiplicity\":" + std::to_string(plan.multiplicity) +
                           ",\"plans\":" + plans + "}");
  return 0;
}

// --- sphere ----------------------------------------------------------------

int cmd_sphere(int problem, double R, int n, bool pi_curve, const std::string& format) {
  if (pi_curve) {
    std::string rows = "[";
    for (int i = 0; i < n; ++i) {
      const double k = 0.95 * i / (n - 1);
      const auto [y, z] = slmart::sphere_pi_curve(k);
      if (format == "csv")
        std::printf("%s%s,%s,%s\n", i == 0 ? "k,y,z\n" : "", num(k).c_str(),
                    num(R * y).c_str(), num(R * R * R * z).c_str());
      else
        rows += std::string(i ? "," : "") + "{\"k\":" + num(k) + ",\"y\":" + num(R * y) +
                ",\"z\":" + num(R * R * R * z) + "}";
    }
    if (format != "csv")
      emit_record("sphere", "{\"problem\":" + std::to_string(problem) + ",\"R\":" + num(R) +
                                ",\"pi_curve\":" + rows + "]}");
    return 0;
  }
  const auto cloud = slmart::sphere_sample(R, n, problem);
  if (format == "csv") {
    std::printf("x,y,z,stratum\n");
    for (const auto& p : cloud)
      std::printf("%s,%s,%s,%s\n", num(p.q.x).c_str(), num(p.q.y).c_str(),
                  num(p.q.z).c_str(), slmart::to_string(p.tag));
    return 0;
  }
  std::string pts = "[";
  for (std::size_t i = 0; i < cloud.size(); ++i)
    pts += std::string(i ? "," : "") + "{\"x\":" + num(cloud[i].q.x) +
           ",\"y\":" + num(cloud[i].q.y) + ",\"z\":" + num(cloud[i].q.z) +
           ",\"stratum\":" + quoted(slmart::to_string(cloud[i].tag)) + "}";
  emit_record("sphere", "{\"problem\":" + std::to_string(problem) + ",\"R\":" + num(R) +
                            ",\"n\":" + std::to_string(n) + ",\"points\":" + pts + "]}");
  return 0;
}

// --- reach -----------------------------------------------------------------

int cmd_reach(int problem, slmart::Point q, const std::vector<double>& base) {
  const slmart::Classification cl = slmart::classify(q, problem);
  std::string payload = "{\"problem\":" + std::to_string(problem) +
                        ",\"point\":" + point_json(q) +
                        ",\"classification\":" + classification_json(cl);
  if (!base.empty()) {
    const slmart::Point b{base[0], base[1], base[2]};
    payload += ",\"base\":" + point_json(b) + ",\"in_causal_future\":" +
               (slmart::causal_future(b, q, problem) ? "true" : "false") +
               ",\"in_causal_past\":" +
               (slmart::causal_past(b, q, problem) ? "true" : "false");
  }
  emit_record("reach", payload + "}");
  return 0;
}

// --- verify ----------------------------------------------------------------

// Deterministic interior samples: normal covector with t strictly below cut.
std::vector<slmart::Point> random_interior(int problem, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<slmart::Point> out;
  out.reserve(n);
  while (static_cast<int>(out.size()) < n) {
    const double phi0 = (uni(rng) < 0.5 ? -1.0 : 1.0) * (0.2 + 2.3 * uni(rng));
    const double c = std::sinh(-2.0 + 4.0 * uni(rng));
    const slmart::Covector lam{phi0, c, problem};
    const double cut = std::min(slmart::cut_time(lam), 3.0);
    const double t = (0.15 + 0.75 * uni(rng)) * cut;
    const slmart::Point q = slmart::exp_map(lam, t);
    if (slmart::classify(q, problem).interior()) out.push_back(q);
  }
  return out;
}

std::vector<slmart::Point> load_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("verify: cannot open points file " + path);
  nlohmann::json doc = nlohmann::json::parse(in);
  if (!doc.is_array()) throw std::runtime_error("verify: points file must hold a JSON array");
  std::vector<slmart::Point> out;
  for (const auto& it : doc) {
    if (it.is_array() && it.size() == 3)
      out.push_back({it[0].get<double>(), it[1].get<double>(), it[2].get<double>()});
    else if (it.is_object())
      out.push_back({it.at("x").get<double>(), it.at("y").get<double>(),
                     it.at("z").get<double>()});
    else
      throw std::runtime_error("verify: each point must be [x,y,z] or {x,y,z}");
  }
  return out;
}

int cmd_verify(int problem, const std::string& points_file, int n_random,
               std::uint64_t seed, double rel_tol) {
  const std::vector<slmart::Point> pts = points_file.empty()
                                              ? random_interior(problem, n_random, seed)
                                              : load_points(points_file);
  std::vector<slmart::VerifyReport> reports(pts.size());
  const int workers = thread_budget(pts.size());
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < pts.size();)
      reports[i] = slmart::verify_point(pts[i], problem, {}, rel_tol);
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();

  int failed = 0;
  std::string rows = "[";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    if (!r.pass) ++failed;
    rows += std::string(i ? "," : "") + "{\"point\":" + point_json(r.q) +
            ",\"analytic\":" + num(r.analytic) + ",\"oracle\":" + num(r.oracle) +
            ",\"gap\":" + num(r.gap) + ",\"family\":" + quoted(r.family) +
            ",\"pass\":" + (r.pass ? "true" : "false") +
            (r.note.empty() ? "" : ",\"note\":" + quoted(r.note)) + "}";
  }
  emit_record("verify", "{\"problem\":" + std::to_string(problem) +
                            ",\"rel_tol\":" + num(rel_tol) +
                            ",\"total\":" + std::to_string(pts.size()) +
                            ",\"failed\":" + std::to_string(failed) +
                            ",\"points\":" + rows + "]}");
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flat sub-Lorentzian Martinet geometry toolkit"};
  app.require_subcommand(1);

  int problem = 1;
  double phi0 = 0, c = 0, t = 0, R = 1, rel_tol = 0.01;
  slmart::Point q{};
  int samples = 0, n = 1000, n_random = 20;
  std::uint64_t seed = 0;
  bool pi_curve = false;
  std::string format = "csv", points_file;
  std::vector<double> base;

  auto add_problem = [&problem](CLI::App* sub) {
    sub->add_option("--problem", problem, "problem (1 or 2)")
        ->required()
        ->check(CLI::IsMember({1, 2}));
  };
  auto add_point = [&q](CLI::App* sub) {
    sub->add_option("--x", q.x, "target x")->required();
    sub->add_option("--y", q.y, "target y")->required();
    sub->add_option("--z", q.z, "target z")->required();
  };

  CLI::App* s_exp = app.add_subcommand("exp", "evaluate the exponential map");
  add_problem(s_exp);
  s_exp->add_option("--phi0", phi0, "initial angle phi0")->required();
  s_exp->add_option("--c", c, "energy parameter c")->required();
  s_exp->add_option("--t", t, "arclength time")->required();
  s_exp->add_option("--samples", samples, "emit an n-row CSV polyline instead of one point");

  CLI::App* s_dist = app.add_subcommand("dist", "sub-Lorentzian distance to a point");
  add_problem(s_dist);
  add_point(s_dist);

  CLI::App* s_synth = app.add_subcommand("synth", "optimal synthesis at a point");
  add_problem(s_synth);
  add_point(s_synth);

  CLI::App* s_sphere = app.add_subcommand("sphere", "sample the sphere of radius R");
  add_problem(s_sphere);
  s_sphere->add_option("--R", R, "radius")->required();
  s_sphere->add_option("--n", n, "number of samples / curve rows");
  s_sphere->add_flag("--pi-curve", pi_curve, "emit the sphere-plane intersection curve (k,y,z)");
  s_sphere->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* s_reach = app.add_subcommand("reach", "classify a point against the attainable set");
  add_problem(s_reach);
  add_point(s_reach);
  s_reach->add_option("--base", base, "base point x0,y0,z0 for causal queries (x0 = 0)")
      ->delimiter(',')
      ->expected(3);

  CLI::App* s_verify = app.add_subcommand("verify", "cross-check distances against the oracle");
  add_problem(s_verify);
  auto* opt_pts = s_verify->add_option("--points", points_file, "JSON file of target points");
  s_verify->add_option("--random", n_random, "number of random interior points")
      ->excludes(opt_pts);
  s_verify->add_option("--seed", seed, "random seed");
  s_verify->add_option("--rel-tol", rel_tol, "relative tolerance for PASS");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (s_exp->parsed()) return cmd_exp(problem, phi0, c, t, samples);
    if (s_dist->parsed()) return cmd_dist(problem, q);
    if (s_synth->parsed()) return cmd_synth(problem, q);
    if (s_sphere->parsed()) return cmd_sphere(problem, R, n, pi_curve, format);
    if (s_reach->parsed()) return cmd_reach(problem, q, base);
    if (s_verify->parsed()) return cmd_verify(problem, points_file, n_random, seed, rel_tol);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "{\"schema_version\":\"%s\",\"error\":%s}\n", kSchema,
                 quoted(e.what()).c_str());
    return 2;
  }
  return 2;
}
