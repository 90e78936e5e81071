// Independent brute-force verifier: maximizes sub-Lorentzian length over
// restricted families of admissible controls (bang / singular / normal-arc
// concatenations, or piecewise-constant controls) with penalty-based endpoint
// matching.  Produces certified lower bounds on the distance; it shares no
// code path with invert_exp/distance beyond the forward closed forms.
//
// All searches are deterministic (fixed seed lattices, deterministic
// Nelder-Mead), and every query is dilation-normalized to unit scale first so
// tolerances are scale-free.

#ifndef SLMART_ORACLE_HPP_
#define SLMART_ORACLE_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "slmart/core.hpp"
#include "slmart/extremals.hpp"
#include "slmart/synthesis.hpp"

namespace slmart {

struct OracleConfig {
  enum class Structure { BangSingularSearch, PiecewiseConstant };
  Structure structure = Structure::BangSingularSearch;
  int n_pieces = 6;    // PiecewiseConstant: number of constant-control pieces
  int u_grid = 5;      // PiecewiseConstant: seeding resolution of the control grid
  double eps_q = 1e-4; // endpoint tolerance after unit normalization
  double t_max = 0.0;  // time horizon; 0 = auto (2x the y- resp. x-extent)
};

struct OracleResult {
  double length = 0.0;      // best feasible length (lower bound on d)
  bool feasible = false;    // some searched trajectory hit q within eps_q
  double endpoint_gap = std::numeric_limits<double>::infinity();
  std::string family;       // structure of the best trajectory found
  Point endpoint;           // endpoint actually reached by the best trajectory
};

namespace detail {

// Deterministic Nelder-Mead minimization; returns the best value, x holds the
// best parameters.
inline double nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double>& x, int max_iter, double step = 0.3) {
  const int n = static_cast<int>(x.size());
  std::vector<std::vector<double>> simplex(n + 1, x);
  std::vector<double> val(n + 1);
  for (int i = 0; i < n; ++i) simplex[i + 1][i] += step;
  for (int i = 0; i <= n; ++i) val[i] = f(simplex[i]);

  for (int it = 0; it < max_iter; ++it) {
    // order: lo = best, hi = worst, sh = second worst
    int lo = 0, hi = 0, sh = 0;
    for (int i = 1; i <= n; ++i) {
      if (val[i] < val[lo]) lo = i;
      if (val[i] > val[hi]) {
        sh = hi;
        hi = i;
      } else if (val[i] > val[sh] && i != hi) {
        sh = i;
      }
    }
    if (std::abs(val[hi] - val[lo]) < 1e-14 * (std::abs(val[lo]) + 1e-14)) break;

    std::vector<double> centroid(n, 0.0);
    for (int i = 0; i <= n; ++i)
      if (i != hi)
        for (int d = 0; d < n; ++d) centroid[d] += simplex[i][d] / n;

    auto blend = [&](double t) {
      std::vector<double> p(n);
      for (int d = 0; d < n; ++d) p[d] = centroid[d] + t * (simplex[hi][d] - centroid[d]);
      return p;
    };
    auto refl = blend(-1.0);
    const double fr = f(refl);
    if (fr < val[lo]) {
      auto exp_ = blend(-2.0);
      const double fe = f(exp_);
      simplex[hi] = fe < fr ? exp_ : refl;
      val[hi] = std::min(fe, fr);
    } else if (fr < val[sh]) {
      simplex[hi] = refl;
      val[hi] = fr;
    } else {
      auto con = blend(fr < val[hi] ? -0.5 : 0.5);
      const double fc = f(con);
      if (fc < std::min(fr, val[hi])) {
        simplex[hi] = con;
        val[hi] = fc;
      } else {
        for (int i = 0; i <= n; ++i) {
          if (i == lo) continue;
          for (int d = 0; d < n; ++d)
            simplex[i][d] = simplex[lo][d] + 0.5 * (simplex[i][d] - simplex[lo][d]);
          val[i] = f(simplex[i]);
        }
      }
    }
  }
  int lo = 0;
  for (int i = 1; i <= n; ++i)
    if (val[i] < val[lo]) lo = i;
  x = simplex[lo];
  return val[lo];
}

// One candidate trajectory: endpoint, timelike length, total time.
struct TrialOut {
  Point end;
  double length = 0.0;
  double time = 0.0;
  bool ok = false;
};

// Arc vocabulary of the bang/singular/normal search.
enum class ArcKind { BangP, BangM, Sing, Norm, Bang2P, Bang2M };

struct Family {
  std::string name;
  std::vector<ArcKind> seq;
  int problem;
};

inline std::vector<Family> bang_singular_families(int problem) {
  using K = ArcKind;
  // abnormal families first: on a length tie (e.g. the singular ray) the
  // structurally expected plan is reported
  if (problem == 1)
    return {{"singular", {K::Sing}, 1},
            {"singular+bang+", {K::Sing, K::BangP}, 1},
            {"singular+bang-", {K::Sing, K::BangM}, 1},
            {"bang+-", {K::BangP, K::BangM}, 1},
            {"bang-+", {K::BangM, K::BangP}, 1},
            {"normal", {K::Norm}, 1}};
  return {{"bang+-", {K::Bang2P, K::Bang2M}, 2},
          {"bang-+", {K::Bang2M, K::Bang2P}, 2},
          {"normal", {K::Norm}, 2}};
}

inline TrialOut eval_family(const Family& fam, const std::vector<double>& params) {
  TrialOut out;
  Point p{};
  size_t ip = 0;
  for (const ArcKind kind : fam.seq) {
    if (kind == ArcKind::Norm) {
      // c = sinh(gamma): after unit normalization |c| spans several orders of
      // magnitude, so the search variable is logarithmic in |c|
      const double phi0 = params[ip++];
      const double c = std::sinh(params[ip++]);
      const double d = std::abs(params[ip++]);
      try {
        const Point e = exp_map({phi0, c, fam.problem}, d);
        p = {p.x + e.x, p.y + e.y, p.z + e.z};  // start is always the origin here
      } catch (const std::exception&) {
        return out;
      }
      out.length += d;
      out.time += d;
    } else {
      const double d = std::abs(params[ip++]);
      Control u{};
      if (kind == ArcKind::BangP || kind == ArcKind::Bang2P) u = {1.0, 1.0};
      else if (kind == ArcKind::BangM) u = {-1.0, 1.0};
      else if (kind == ArcKind::Bang2M) u = {1.0, -1.0};
      else u = {0.0, 1.0};
      p = flow_const(p, u, d);
      if (kind == ArcKind::Sing) out.length += d;
      out.time += d;
    }
  }
  out.end = p;
  out.ok = true;
  return out;
}

inline int family_nparams(const Family& fam) {
  int n = 0;
  for (const ArcKind k : fam.seq) n += k == ArcKind::Norm ? 3 : 1;
  return n;
}

struct SearchBest {
  double length = 0.0;
  double gap = std::numeric_limits<double>::infinity();
  std::string family;
  Point end;
};

// Penalized search of one family: maximize length - mu * |endpoint - q| with
// mu continuation, keeping the total time below t_max.
inline void search_family(const Family& fam, Point q, double t_max, double eps_q,
                          const std::vector<std::vector<double>>& seeds,
                          SearchBest& best) {
  auto penalized = [&](const std::vector<double>& params, double mu) {
    const TrialOut tr = eval_family(fam, params);
    if (!tr.ok) return 1e9;
    const double gap = dist(tr.end, q);
    const double over = std::fmax(0.0, tr.time - t_max);
    return -(tr.length - mu * gap - mu * over);  // minimized
  };
  for (const auto& seed : seeds) {
    std::vector<double> x = seed;
    for (const double mu : {1e2, 1e4, 1e6}) {
      auto f = [&](const std::vector<double>& p) { return penalized(p, mu); };
      nelder_mead(f, x, 250, 0.2);
    }
    const TrialOut tr = eval_family(fam, x);
    if (!tr.ok) continue;
    const double gap = dist(tr.end, q);
    if (gap <= eps_q && tr.time <= t_max * (1.0 + 1e-9)) {
      if (!std::isfinite(best.gap) || best.gap > eps_q || tr.length > best.length) {
        best.length = tr.length;
        best.gap = gap;
        best.family = fam.name;
        best.end = tr.end;
      }
    } else if (!(best.gap <= eps_q) && gap < best.gap) {
      best.gap = gap;  // track the closest miss for diagnostics
    }
  }
}

inline std::vector<std::vector<double>> family_seeds(const Family& fam, Point q) {
  std::vector<std::vector<double>> seeds;
  const double ext = fam.problem == 1 ? q.y : q.x;
  if (fam.seq.front() == ArcKind::Norm) {
    for (const double phi0 : {-2.5, -1.5, -0.7, -0.2, 0.2, 0.7, 1.5, 2.5})
      for (const double gamma : {-5.0, -2.0, 0.0, 2.0, 5.0})  // c = sinh(gamma)
        for (const double tf : {0.3, 0.7})
          seeds.push_back({phi0, gamma, tf * ext});
  } else if (fam.seq.size() == 1) {
    seeds.push_back({ext});
  } else {
    // geometry-informed switching seeds plus a generic one
    seeds.push_back({std::fmax(0.1, ext - std::abs(fam.problem == 1 ? q.x : q.y)),
                     std::abs(fam.problem == 1 ? q.x : q.y)});
    seeds.push_back({0.5 * ext, 0.5 * ext});
    seeds.push_back({(ext + std::abs(fam.problem == 1 ? q.x : q.y)) / 2.0,
                     (ext - std::abs(fam.problem == 1 ? q.x : q.y)) / 2.0});
  }
  return seeds;
}

// Piecewise-constant search (u2 = 1 for problem 1 / u1 = 1 for problem 2):
// durations are normalized to sum to the exact y- resp. x-extent, so one
// endpoint coordinate matches identically and only two must be penalized.
inline TrialOut eval_piecewise(int problem, double extent,
                               const std::vector<double>& params) {
  const int n = static_cast<int>(params.size() / 2);
  double wsum = 0.0;
  for (int i = 0; i < n; ++i) wsum += std::abs(params[i]) + 1e-12;
  TrialOut out;
  Point p{};
  for (int i = 0; i < n; ++i) {
    const double d = extent * (std::abs(params[i]) + 1e-12) / wsum;
    const double u = std::tanh(params[n + i]);
    const Control ctrl = problem == 1 ? Control{u, 1.0} : Control{1.0, u};
    p = flow_const(p, ctrl, d);
    out.length += d * std::sqrt(std::fmax(0.0, 1.0 - u * u));
    out.time += d;
  }
  out.end = p;
  out.ok = true;
  return out;
}

inline void search_piecewise(int problem, Point q, const OracleConfig& cfg,
                             SearchBest& best) {
  const double extent = problem == 1 ? q.y : q.x;
  std::vector<double> warm;  // best parameters of the previous refinement stage
  for (int n = 1; n <= std::max(1, cfg.n_pieces); ++n) {
    std::vector<std::vector<double>> seeds;
    if (!warm.empty()) {
      // split the longest piece of the warm start
      std::vector<double> w(warm.begin(), warm.begin() + (n - 1));
      std::vector<double> u(warm.begin() + (n - 1), warm.end());
      int longest = 0;
      for (int i = 1; i < n - 1; ++i)
        if (std::abs(w[i]) > std::abs(w[longest])) longest = i;
      w[longest] /= 2.0;
      w.push_back(w[longest]);
      u.push_back(u[longest]);
      std::vector<double> s = w;
      s.insert(s.end(), u.begin(), u.end());
      seeds.push_back(s);
    }
    if (n == 1) {
      const int g = std::max(2, cfg.u_grid);
      for (int j = 0; j < g; ++j) {
        const double u = -0.9 + 1.8 * j / (g - 1);
        seeds.push_back({1.0, std::atanh(u)});
      }
    } else {
      std::vector<double> s(2 * n, 1.0);
      for (int i = 0; i < n; ++i) s[n + i] = 0.2 * (i % 2 ? 1 : -1);
      seeds.push_back(s);
    }

    double stage_best = -1.0;
    std::vector<double> stage_x;
    for (auto& seed : seeds) {
      std::vector<double> x = seed;
      for (const double mu : {1e2, 1e4, 1e6}) {
        auto f = [&](const std::vector<double>& p) {
          const TrialOut tr = eval_piecewise(problem, extent, p);
          return -(tr.length - mu * dist(tr.end, q));
        };
        nelder_mead(f, x, 200 * n, 0.25);
      }
      const TrialOut tr = eval_piecewise(problem, extent, x);
      const double gap = dist(tr.end, q);
      if (gap <= cfg.eps_q && tr.length > stage_best) {
        stage_best = tr.length;
        stage_x = x;
      }
      if (gap < best.gap && !(best.gap <= cfg.eps_q && tr.length < best.length)) {
        if (gap <= cfg.eps_q) {
          if (tr.length >= best.length) {
            best.length = tr.length;
            best.gap = gap;
            best.family = "piecewise(" + std::to_string(n) + ")";
            best.end = tr.end;
          }
        } else if (!(best.gap <= cfg.eps_q)) {
          best.gap = gap;
        }
      }
    }
    if (!stage_x.empty()) warm = stage_x;
  }
}

}  // namespace detail

// Best feasible sub-Lorentzian length found by the configured search.
inline OracleResult brute_distance_result(Point q, int problem, OracleConfig cfg = {}) {
  OracleResult out;
  if (q.x == 0.0 && q.y == 0.0 && q.z == 0.0) {
    out.feasible = true;
    out.endpoint_gap = 0.0;
    out.family = "trivial";
    return out;
  }
  const double extent = problem == 1 ? q.y : q.x;
  if (!(extent > 0.0)) return out;  // no admissible trajectory advances that way

  // dilation-normalize to unit extent: tolerances become scale-free
  const double sigma = extent;
  const Point qn = dilate(q, 1.0 / sigma);
  if (cfg.t_max == 0.0) cfg.t_max = 2.0;  // normalized extent is 1

  detail::SearchBest best;
  if (cfg.structure == OracleConfig::Structure::BangSingularSearch) {
    for (const auto& fam : detail::bang_singular_families(problem))
      detail::search_family(fam, qn, cfg.t_max, cfg.eps_q, detail::family_seeds(fam, qn),
                            best);
  } else {
    detail::search_piecewise(problem, qn, cfg, best);
  }
  out.endpoint_gap = best.gap;
  if (best.gap <= cfg.eps_q) {
    out.feasible = true;
    out.length = sigma * best.length;
    out.family = best.family;
    out.endpoint = dilate(best.end, sigma);
  }
  return out;
}

inline double brute_distance(Point q, int problem, OracleConfig cfg = {}) {
  return brute_distance_result(q, problem, cfg).length;
}

// ---------------------------------------------------------------------------
// Structured comparison against the analytic distance

struct VerifyReport {
  Point q;
  int problem = 1;
  double analytic = 0.0;
  double oracle = 0.0;
  double gap = 0.0;  // analytic - oracle
  bool attainable = false;
  bool feasible = false;
  std::string family;
  bool pass = false;
  std::string note;
};

inline VerifyReport verify_point(Point q, int problem, OracleConfig cfg = {},
                                 double rel_tol = 0.01, double abs_tol = 1e-3) {
  VerifyReport rep;
  rep.q = q;
  rep.problem = problem;
  const DistanceInfo di = distance_info(q, problem);
  rep.analytic = di.value;
  rep.attainable = di.attainable;
  const OracleResult orc = brute_distance_result(q, problem, cfg);
  rep.oracle = orc.length;
  rep.feasible = orc.feasible;
  rep.family = orc.family;
  rep.gap = rep.analytic - rep.oracle;

  const double scale = std::fmax(problem == 1 ? q.y : q.x, 0.0);
  const double slack = abs_tol * std::fmax(1.0, scale);
  if (!di.attainable) {
    rep.pass = !orc.feasible || orc.length <= slack;
    rep.note = rep.pass ? "outside attainable set" : "oracle reached an outside point";
    return rep;
  }
  // The oracle must not exceed the analytic distance; a nominal excess can be
  // an artifact of the eps_q endpoint slack, so it is re-judged against the
  // analytic distance at the endpoint the oracle actually reached.
  bool not_above = rep.oracle <= rep.analytic * (1.0 + 1e-3) + slack;
  if (!not_above && orc.feasible) {
    try {
      const double d_end = distance(orc.endpoint, problem);
      not_above = rep.oracle <= d_end * (1.0 + 1e-3) + slack;
    } catch (const std::exception&) {
    }
  }
  const bool close = rep.gap <= rel_tol * rep.analytic + slack;
  rep.pass = not_above && orc.feasible && close;
  if (!orc.feasible) rep.note = "search failure: no trajectory within eps_q";
  else if (!not_above) rep.note = "oracle exceeds analytic distance";
  else if (!close) rep.note = "oracle lower bound too far below analytic";
  return rep;
}

}  // namespace slmart

#endif  // SLMART_ORACLE_HPP_
