// Inversion of the exponential maps, sub-Lorentzian distance, optimal
// synthesis plans, sphere sampling, and diagnostic functions.
//
// Inversion strategy: dilations reduce every interior point to a
// two-parameter shooting problem in homogeneous coordinates; the per-stratum
// exponential charts are diffeomorphisms, so a damped Newton iteration with a
// nearest-neighbour seed from a precomputed forward-map table converges
// without multistart.  The scale is recovered afterwards from the y (problem
// 1) or x (problem 2) coordinate.

#ifndef SLMART_SYNTHESIS_HPP_
#define SLMART_SYNTHESIS_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "slmart/core.hpp"
#include "slmart/elliptic.hpp"
#include "slmart/extremals.hpp"

namespace slmart {

// ---------------------------------------------------------------------------
// Diagnostics

// eta_1(k): the eta coordinate of the Maxwell point of the modulus-k
// extremal; a strictly increasing diffeomorphism (0,1) -> (-1/24, 0).
inline double eta1(double k) {
  check_modulus(k);
  const double K = complete_K(k), E = complete_E(k);
  const double kp2 = 1.0 - k * k;
  const double D = 2.0 * E - kp2 * K;
  return -1.0 / 24.0 + ((1.0 + k * k) * E - kp2 * K) / (6.0 * D * D * D);
}

// Jacobian-sign diagnostics of the exponential map:
//   J0(tau) = cos 3tau + (8 tau^2 - 1) cos tau - 4 tau sin tau,
//   g(k)    = E^2 - 2 E K + (1 - k^2) K^2.
inline std::pair<double, double> jacobian_diag(double tau, double k) {
  const double J0 = std::cos(3.0 * tau) + (8.0 * tau * tau - 1.0) * std::cos(tau) -
                    4.0 * tau * std::sin(tau);
  const double K = complete_K(k), E = complete_E(k);
  const double g = E * E - 2.0 * E * K + (1.0 - k * k) * K * K;
  return {J0, g};
}

// Intersection of the problem-1 unit sphere with the Martinet plane x = 0,
// parametrized by the modulus k in [0, 1).
inline std::pair<double, double> sphere_pi_curve(double k) {
  check_modulus(k);
  const double K = complete_K(k), E = complete_E(k);
  const double kp2 = 1.0 - k * k;
  const double y = (4.0 * E - 2.0 * kp2 * K) / (2.0 * kp2 * K);
  const double z = ((1.0 + k * k) * E - kp2 * K) /
                   (6.0 * kp2 * kp2 * kp2 * K * K * K);
  return {y, z};
}

namespace detail {

// Maxwell point of the (phi0 = 2 atanh k, c = 1) extremal at tau = 2K,
// i.e. the first return to the plane x = 0.
inline Point maxwell_point_base(double k) {
  const double K = complete_K(k), E = complete_E(k);
  const double kp = complementary_modulus(k);
  const double kp2 = kp * kp;
  return {0.0, (4.0 * E - 2.0 * kp2 * K) / kp,
          4.0 / (3.0 * kp2 * kp) * ((1.0 + k * k) * E - kp2 * K)};
}

inline double maxwell_time_base(double k) {
  return 2.0 * complete_K(k) * complementary_modulus(k);  // t = 2K/(ae l), l = 1
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Inversion of the exponential map

struct InverseResult {
  std::vector<std::pair<Covector, double>> solutions;  // (lambda, t1)
  double residual = 0.0;  // max Euclidean endpoint mismatch over solutions
};

namespace detail {

// Base covector of the unit-|c| chart for one inversion case.
enum class InvCase {
  P1Pos,   // problem 1, c = +1, phi0 = 2 atanh k,       tau in (0, 2K)
  P1Neg,   // problem 1, c = -1, cosh phi0 = 2/k^2 - 1,  tau in (0, K)
  P2Pos,   // problem 2, c = +1,                          tau in (0, K)
  P2Neg,   // problem 2, c = -1,                          tau in (0, K)
};

inline Covector base_covector(InvCase cs, double k) {
  switch (cs) {
    case InvCase::P1Pos:
      return {2.0 * std::atanh(k), 1.0, 1};
    case InvCase::P1Neg:
      return {std::acosh(2.0 / (k * k) - 1.0), -1.0, 1};
    case InvCase::P2Pos:
    case InvCase::P2Neg: {
      const double s = cs == InvCase::P2Pos ? 1.0 : -1.0;
      const double kp = complementary_modulus(k);
      const double E = s * (2.0 * k * k - 1.0) / (2.0 * k * kp);
      return {-std::asinh(E), s, 2};
    }
  }
  throw std::invalid_argument("base_covector: bad case");
}

inline double tau_limit(InvCase cs, double k) {
  return cs == InvCase::P1Pos ? 2.0 * complete_K(k) : complete_K(k);
}

// Scale-free chart coordinates of an interior point.  Problem 1: (xi, eta)
// of hom_coords; problem 2: (y/x, w) where w normalizes z to the slab
// [z^1, z^2] so the chart stays well conditioned near the cone edge.
inline std::array<double, 2> chart_coords2(Point q) {
  const double u = q.y / q.x;
  const double zl = z1_graph(1.0, u), zu = z2_graph(1.0, u);
  const double v = q.z / (q.x * q.x * q.x);
  return {u, (v - zl) / (zu - zl)};
}

// Problem-1 chart output is (xi, 24 eta): eta spans only ~1/24, so the
// rescaling balances the two residual components for seeding and Newton.
inline std::array<double, 2> chart_forward(InvCase cs, double k, double tau) {
  const Covector lam = base_covector(cs, k);
  const NormalParams p = normal_params(lam);
  const Point q = exp_map(lam, tau / p.tau_rate);
  if (lam.problem == 1) {
    const HomCoords h = hom_coords(q);
    return {h.xi, 24.0 * h.eta};
  }
  return chart_coords2(q);
}

// Unconstrained Newton coordinates: a logistic map pins (k, tau) inside the
// open chart domain while giving resolution at both modulus extremes, where
// the small- and large-|phi0| extremals accumulate.
inline double logistic(double a) { return 1.0 / (1.0 + std::exp(-a)); }

inline std::pair<double, double> chart_params(InvCase cs, double a, double b) {
  const double k = logistic(a);
  return {k, logistic(b) * tau_limit(cs, k)};
}

inline std::array<double, 2> chart_forward_ab(InvCase cs, double a, double b) {
  const auto [k, tau] = chart_params(cs, a, b);
  return chart_forward(cs, k, tau);
}

struct SeedTable {
  static constexpr int kGrid = 32;
  static constexpr double kRangeA = 9.0;  // modulus coordinate: a in [-9, 9]
  static constexpr double kRangeB = 5.0;  // time coordinate: b in [-5, 5]
  std::array<double, kGrid * kGrid> a, b, f0, f1;

  explicit SeedTable(InvCase cs) {
    for (int i = 0; i < kGrid; ++i) {
      const double ai = kRangeA * (2.0 * (i + 0.5) / kGrid - 1.0);
      for (int j = 0; j < kGrid; ++j) {
        const double bj = kRangeB * (2.0 * (j + 0.5) / kGrid - 1.0);
        const auto f = chart_forward_ab(cs, ai, bj);
        const int idx = i * kGrid + j;
        a[idx] = ai;
        b[idx] = bj;
        f0[idx] = f[0];
        f1[idx] = f[1];
      }
    }
  }

  // seed candidates ordered by distance to the target in chart coordinates
  std::vector<std::pair<double, double>> candidates(const std::array<double, 2>& target,
                                                    int count) const {
    std::vector<std::pair<double, int>> scored(kGrid * kGrid);
    for (int idx = 0; idx < kGrid * kGrid; ++idx) {
      const double d0 = f0[idx] - target[0], d1 = f1[idx] - target[1];
      scored[idx] = {d0 * d0 + d1 * d1, idx};
    }
    count = std::min<int>(count, scored.size());
    std::partial_sort(scored.begin(), scored.begin() + count, scored.end());
    std::vector<std::pair<double, double>> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.emplace_back(a[scored[i].second], b[scored[i].second]);
    return out;
  }
};

inline const SeedTable& seed_table(InvCase cs) {
  static const SeedTable t_p1pos(InvCase::P1Pos);
  static const SeedTable t_p1neg(InvCase::P1Neg);
  static const SeedTable t_p2pos(InvCase::P2Pos);
  static const SeedTable t_p2neg(InvCase::P2Neg);
  switch (cs) {
    case InvCase::P1Pos: return t_p1pos;
    case InvCase::P1Neg: return t_p1neg;
    case InvCase::P2Pos: return t_p2pos;
    case InvCase::P2Neg: return t_p2neg;
  }
  throw std::invalid_argument("seed_table: bad case");
}

// Damped Newton in the unconstrained (a, b) coordinates, retried from the
// next-nearest seeds on failure.  Returns the converged (k, tau).
inline std::pair<double, double> newton_invert(InvCase cs,
                                               const std::array<double, 2>& target,
                                               double tol) {
  constexpr double kBox = 30.0;  // keeps the logistic map away from saturation
  auto residual = [&](double a, double b) -> std::array<double, 2> {
    a = std::clamp(a, -kBox, kBox);
    b = std::clamp(b, -kBox, kBox);
    try {
      const auto f = chart_forward_ab(cs, a, b);
      return {f[0] - target[0], f[1] - target[1]};
    } catch (const std::exception&) {
      return {1e30, 1e30};  // off the evaluable chart: rejected by backtracking
    }
  };
  double best_a = 0.0, best_b = 0.0;
  double best_rn = std::numeric_limits<double>::infinity();
  for (const auto& seed : seed_table(cs).candidates(target, 6)) try {
    double a = seed.first, b = seed.second;
    auto r = residual(a, b);
    double rn = std::hypot(r[0], r[1]);
    // (a, b) are logarithmic coordinates, so the chart varies on unit scale;
    // a generous difference step keeps the quotient above rounding noise even
    // where the chart response is exponentially small.  The step shrinks when
    // an iteration stalls, to resolve strongly curved regions.
    double h = 1e-2;
    for (int it = 0; it < 100 && rn >= tol; ++it) {
      const auto fa1 = residual(a + h, b), fa0 = residual(a - h, b);
      const auto fb1 = residual(a, b + h), fb0 = residual(a, b - h);
      const double J00 = (fa1[0] - fa0[0]) / (2 * h), J01 = (fb1[0] - fb0[0]) / (2 * h);
      const double J10 = (fa1[1] - fa0[1]) / (2 * h), J11 = (fb1[1] - fb0[1]) / (2 * h);
      const double det = J00 * J11 - J01 * J10;
      if (det == 0.0 || !std::isfinite(det)) break;
      const double sa = (J11 * r[0] - J01 * r[1]) / det;
      const double sb = (-J10 * r[0] + J00 * r[1]) / det;
      double damp = 1.0;
      bool accepted = false;
      for (int bt = 0; bt < 40; ++bt) {
        const double an = std::clamp(a - damp * sa, -kBox, kBox);
        const double bn = std::clamp(b - damp * sb, -kBox, kBox);
        const auto r2 = residual(an, bn);
        const double nn = std::hypot(r2[0], r2[1]);
        if (std::isfinite(nn) && nn < rn) {
          a = an;
          b = bn;
          r = r2;
          rn = nn;
          accepted = true;
          break;
        }
        damp *= 0.5;
      }
      if (!accepted) {
        if (h > 2e-7) {
          h *= 0.1;
          continue;
        }
        break;
      }
    }
    if (rn < best_rn) {
      best_rn = rn;
      best_a = a;
      best_b = b;
    }
    if (best_rn < tol) break;
  } catch (const std::exception&) {
    // a diverging seed walked outside the evaluable range: try the next one
  }
  if (best_rn < std::sqrt(tol))  // near-converged roots accepted; caller checks residual
    return chart_params(cs, best_a, best_b);
  throw std::runtime_error("invert_exp: Newton failed to converge (case " +
                           std::to_string(static_cast<int>(cs)) + ", residual " +
                           std::to_string(best_rn) + ")");
}

// Solve eta1(k) = eta on (0, 1) by bisection (eta1 is strictly increasing).
inline double invert_eta1(double eta) {
  double lo = 1e-12, hi = 1.0 - 1e-12;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (eta1(mid) < eta ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

inline double max_residual(const std::vector<std::pair<Covector, double>>& sols,
                           Point q) {
  double r = 0.0;
  for (const auto& [lam, t1] : sols) r = std::fmax(r, dist(exp_map(lam, t1), q));
  return r;
}

}  // namespace detail

// All arclength-parametrized normal solutions of Exp(lambda, t1) = q for an
// interior point q.  Problem 1: one solution on the strata M1..M6, two
// reflection-related solutions on M0 (reported with phi0 > 0 first);
// problem 2: one solution on int B2.
inline InverseResult invert_exp(Point q, int problem, double tol = 1e-12) {
  const Classification cl = classify(q, problem);
  if (!cl.interior())
    throw std::domain_error("invert_exp: point is not in the interior of the attainable set");
  InverseResult out;

  if (problem == 1) {
    const HomCoords h = *cl.hom;
    switch (*cl.stratum) {
      case Stratum1::M0: {
        const double k = detail::invert_eta1(h.eta);
        const Point base = detail::maxwell_point_base(k);
        const double alpha = q.y / base.y;
        const double c = 1.0 / (alpha * alpha);
        const double phi0 = 2.0 * std::atanh(k);
        const double t1 = alpha * detail::maxwell_time_base(k);
        out.solutions = {{{phi0, c, 1}, t1}, {{-phi0, c, 1}, t1}};
        break;
      }
      case Stratum1::M5:
      case Stratum1::M6: {
        const double phi0 = std::atanh(h.xi);
        out.solutions = {{{phi0, 0.0, 1}, q.y / std::cosh(phi0)}};
        break;
      }
      default: {
        const bool reflected = h.xi < 0.0;  // M2/M4 solved as mirrored M1/M3
        const double xi = reflected ? -h.xi : h.xi;
        const bool cpos = *cl.stratum == Stratum1::M1 || *cl.stratum == Stratum1::M2;
        const auto cs = cpos ? detail::InvCase::P1Pos : detail::InvCase::P1Neg;
        const auto [k, tau] = detail::newton_invert(cs, {xi, 24.0 * h.eta}, tol);
        Covector lam = detail::base_covector(cs, k);
        const NormalParams p = normal_params(lam);
        const Point base = exp1(lam, tau / p.tau_rate);
        const double alpha = q.y / base.y;
        lam.c /= alpha * alpha;
        if (reflected) lam.phi0 = -lam.phi0;
        out.solutions = {{lam, alpha * tau / p.tau_rate}};
        break;
      }
    }
  } else {
    const double u = q.y / q.x, v = q.z / (q.x * q.x * q.x);
    if (std::abs(v - u / 6.0) < 1e-12 * std::fmax(1.0, std::abs(u))) {
      const double phi0 = std::atanh(u);
      out.solutions = {{{phi0, 0.0, 2}, q.x / std::cosh(phi0)}};
    } else {
      const auto cs = v > u / 6.0 ? detail::InvCase::P2Pos : detail::InvCase::P2Neg;
      const auto [k, tau] = detail::newton_invert(cs, detail::chart_coords2(q), tol);
      Covector lam = detail::base_covector(cs, k);
      const NormalParams p = normal_params(lam);
      const Point base = exp2(lam, tau / p.tau_rate);
      const double alpha = q.x / base.x;
      lam.c /= alpha * alpha;
      out.solutions = {{lam, alpha * tau / p.tau_rate}};
    }
  }
  out.residual = detail::max_residual(out.solutions, q);
  return out;
}

// ---------------------------------------------------------------------------
// Distance

struct DistanceInfo {
  double value = 0.0;
  bool attainable = false;
  // true where the distance takes a first-kind-discontinuous boundary value
  // (problem 1: S3, S4, the singular ray, and the locus {x=0, z=y^3/24}).
  bool boundary_value = false;
  Classification cls;
};

inline DistanceInfo distance_info(Point q, int problem) {
  DistanceInfo out;
  out.cls = classify(q, problem);
  if (out.cls.outside()) return out;
  out.attainable = true;
  if (out.cls.interior()) {
    out.value = invert_exp(q, problem).solutions.front().second;
    return out;
  }
  if (problem == 2) return out;  // entire boundary of B2 is lightlike: d = 0
  if (out.cls.on(surface::kS3) || out.cls.on(surface::kS4)) {
    out.value = q.y - std::abs(q.x);  // singular-arc duration (y on the ray)
    out.boundary_value = true;
  } else if (out.cls.on(surface::kS1) && out.cls.on(surface::kS2)) {
    out.boundary_value = true;  // singular locus {x=0, z=y^3/24}: d = 0
  }
  return out;
}

inline double distance(Point q, int problem) { return distance_info(q, problem).value; }

// ---------------------------------------------------------------------------
// Optimal synthesis

struct NormalArc {
  Covector lam;
  double duration = 0.0;
};
struct BangArc {
  std::array<double, 2> control{};
  double duration = 0.0;
};
struct SingularArc {
  double duration = 0.0;
};
using Arc = std::variant<NormalArc, BangArc, SingularArc>;

struct SynthesisPlan {
  std::vector<Arc> arcs;
  double total_length = 0.0;
  int multiplicity = 1;
  std::optional<std::vector<Arc>> alternate;  // second optimal plan when multiplicity = 2
};

inline SynthesisPlan synthesize(Point q, int problem) {
  const Classification cl = classify(q, problem);
  if (cl.outside())
    throw std::domain_error("synthesize: point is outside the attainable set");
  SynthesisPlan plan;

  if (cl.interior()) {
    const InverseResult inv = invert_exp(q, problem);
    const auto& [lam, t1] = inv.solutions.front();
    plan.arcs = {NormalArc{lam, t1}};
    plan.total_length = t1;
    if (inv.solutions.size() > 1) {
      plan.multiplicity = 2;
      const auto& [lam2, t2] = inv.solutions[1];
      plan.alternate = std::vector<Arc>{NormalArc{lam2, t2}};
    }
    return plan;
  }

  if (problem == 1) {
    if (cl.on(surface::kS3) || cl.on(surface::kS4)) {
      // singular arc on x = 0 followed by a bang arc (pure singular on the
      // ray x = z = 0)
      const double tau1 = q.y - std::abs(q.x);
      plan.total_length = tau1;
      if (q.x == 0.0) {
        plan.arcs = {SingularArc{q.y}};
      } else {
        const double u1 = q.x > 0.0 ? 1.0 : -1.0;
        plan.arcs = {SingularArc{tau1}, BangArc{{u1, 1.0}, std::abs(q.x)}};
      }
      return plan;
    }
    const bool on1 = cl.on(surface::kS1), on2 = cl.on(surface::kS2);
    const double tau1 = (q.y + std::abs(q.x)) / 2.0;
    if (on1 && on2) {
      // the locus {x = 0, z = y^3/24}: exactly two lightlike bang-bang plans
      plan.arcs = {BangArc{{1.0, 1.0}, tau1}, BangArc{{-1.0, 1.0}, q.y - tau1}};
      plan.multiplicity = 2;
      plan.alternate =
          std::vector<Arc>{BangArc{{-1.0, 1.0}, tau1}, BangArc{{1.0, 1.0}, q.y - tau1}};
      return plan;
    }
    const double u1 = on1 ? 1.0 : -1.0;
    if (tau1 >= q.y) {  // corner |x| = y: single bang arc
      plan.arcs = {BangArc{{u1, 1.0}, q.y}};
    } else {
      plan.arcs = {BangArc{{u1, 1.0}, tau1}, BangArc{{-u1, 1.0}, q.y - tau1}};
    }
    return plan;
  }

  // problem 2 boundary: lightlike bang-bang, t1 = x
  // The arc order selects the sheet: (1,-1) -> (1,1) sweeps the upper graph
  // z2, the mirrored order sweeps z1; the graphs meet on the rays y = +-x.
  const bool upper = cl.on(surface::kZ2) && (q.y >= 0.0 || !cl.on(surface::kZ1));
  const double s = upper ? -1.0 : 1.0;
  const double tau1 = (q.x + s * q.y) / 2.0;
  if (tau1 <= 0.0) {
    plan.arcs = {BangArc{{1.0, -s}, q.x}};
  } else if (tau1 >= q.x) {
    plan.arcs = {BangArc{{1.0, s}, q.x}};
  } else {
    plan.arcs = {BangArc{{1.0, s}, tau1}, BangArc{{1.0, -s}, q.x - tau1}};
  }
  return plan;
}

// ---------------------------------------------------------------------------
// Sphere sampling

enum class SphereTag : std::uint8_t { SnPlus, SnMinus, Sn0, SaPlus, SaMinus, Sa0, Normal };

inline const char* to_string(SphereTag t) {
  switch (t) {
    case SphereTag::SnPlus: return "Sn+";
    case SphereTag::SnMinus: return "Sn-";
    case SphereTag::Sn0: return "Sn0";
    case SphereTag::SaPlus: return "Sa+";
    case SphereTag::SaMinus: return "Sa-";
    case SphereTag::Sa0: return "Sa0";
    case SphereTag::Normal: return "normal";
  }
  return "?";
}

struct SpherePoint {
  Point q;
  SphereTag tag;
};

namespace detail {

// Halton low-discrepancy sequence: deterministic, scale-free sampling of the
// covector charts, so S(R) = dilate(S(1), R) holds exactly point-by-point.
inline double halton(int i, int base) {
  double f = 1.0, r = 0.0;
  for (int n = i + 1; n > 0; n /= base) {
    f /= base;
    r += f * (n % base);
  }
  return r;
}

// Normal-family sphere point at distance R: choose l so that the covector
// with chart parameters (case, k, tau) reaches arclength R exactly at tau.
inline Point normal_sphere_point(InvCase cs, double k, double tau, double R) {
  Covector lam = base_covector(cs, k);
  const NormalParams unit = normal_params(lam);
  const double t_base = tau / unit.tau_rate;
  const double alpha = R / t_base;  // dilate the unit-|c| extremal to time R
  lam.c /= alpha * alpha;
  return exp_map(lam, R);
}

}  // namespace detail

// n sample points of the sphere S(R) with stratum tags.  Problem 1 covers the
// normal part Sn+/Sn-/Sn0 and the abnormal part Sa+/Sa-/Sa0; problem 2
// spheres are entirely normal.
inline std::vector<SpherePoint> sphere_sample(double R, int n, int problem) {
  if (!(R > 0.0)) throw std::domain_error("sphere_sample: R > 0 required");
  if (n < 1) throw std::invalid_argument("sphere_sample: n >= 1 required");
  std::vector<SpherePoint> out;
  out.reserve(n);

  if (problem == 2) {
    for (int i = 0; i < n; ++i) {
      if (i % 5 == 4) {  // c = 0 slice
        const double phi0 = 3.0 * (2.0 * detail::halton(i, 2) - 1.0);
        out.push_back({exp2({phi0, 0.0, 2}, R), SphereTag::Normal});
        continue;
      }
      const auto cs = i % 2 == 0 ? detail::InvCase::P2Pos : detail::InvCase::P2Neg;
      const double k = 0.05 + 0.90 * detail::halton(i, 2);
      const double tau = (0.05 + 0.88 * detail::halton(i, 3)) * detail::tau_limit(cs, k);
      out.push_back({detail::normal_sphere_point(cs, k, tau, R), SphereTag::Normal});
    }
    return out;
  }

  // problem 1 quota: one Sa0 point, ~1/5 abnormal pairs, ~1/10 Sn0, rest Sn+-.
  out.push_back({{0.0, R, 0.0}, SphereTag::Sa0});
  int remaining = n - 1;
  const int n_sa = remaining / 5;
  const int n_sn0 = remaining / 10;
  const int n_sn = remaining - n_sa - n_sn0;

  for (int i = 0; i < n_sa; ++i) {
    // singular arc of duration R, then a bang arc of duration d
    const double d = R * (0.05 + 2.0 * detail::halton(i, 2));
    const Point p{d, R + d, d * d * d / 6.0};
    out.push_back(i % 2 == 0 ? SpherePoint{p, SphereTag::SaPlus}
                             : SpherePoint{{-p.x, p.y, p.z}, SphereTag::SaMinus});
  }
  for (int i = 0; i < n_sn0; ++i) {
    const double k = 0.05 + 0.90 * detail::halton(i, 2);
    const Point base = detail::maxwell_point_base(k);
    out.push_back({dilate(base, R / detail::maxwell_time_base(k)), SphereTag::Sn0});
  }
  for (int i = 0; i < n_sn; ++i) {
    Point p;
    if (i % 3 == 2) {  // c = 0 slice
      const double phi0 = 0.05 + 2.5 * detail::halton(i, 2);
      p = exp1({phi0, 0.0, 1}, R);
    } else {
      const auto cs = i % 3 == 0 ? detail::InvCase::P1Pos : detail::InvCase::P1Neg;
      const double k = 0.05 + 0.90 * detail::halton(i, 2);
      const double tau = (0.05 + 0.88 * detail::halton(i, 3)) * detail::tau_limit(cs, k);
      p = detail::normal_sphere_point(cs, k, tau, R);
    }
    const bool flip = i % 2 == 1;
    if (flip) p = {-p.x, p.y, p.z};
    out.push_back({p, flip ? SphereTag::SnMinus : SphereTag::SnPlus});
  }
  return out;
}

}  // namespace slmart

#endif  // SLMART_SYNTHESIS_HPP_
