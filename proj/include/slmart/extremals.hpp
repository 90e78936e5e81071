// Extremal trajectories of the two flat sub-Lorentzian problems on the
// Martinet distribution:
//
//  * normal extremals in closed elliptic form (exp1, exp2), arclength
//    parametrized (H = -1/2), with series evaluation near tau = 0 so the
//    c -> 0 and phi0 -> 0 case boundaries are crossed continuously;
//  * cut times;
//  * abnormal (bang / singular) trajectories and their lengths;
//  * an independent fixed-step 8th-order Runge-Kutta integration of the
//    Hamiltonian system, used to cross-validate the closed forms.
//
// Covector convention: problem 1 has h1 = sinh phi, h2 = -cosh phi, h3 = c;
// problem 2 has h1 = -cosh phi, h2 = sinh phi, h3 = c.

#ifndef SLMART_EXTREMALS_HPP_
#define SLMART_EXTREMALS_HPP_

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "slmart/core.hpp"
#include "slmart/elliptic.hpp"

namespace slmart {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Covector {
  double phi0 = 0.0;
  double c = 0.0;
  int problem = 1;
};

enum class NormalCase {
  CZero,     // c = 0 (both problems)
  CPosAxis,  // problem 1, c > 0, phi0 = 0
  CPos,      // problem 1, c > 0, phi0 != 0
  CNegAxis,  // problem 1, c < 0, phi0 = 0
  CNeg,      // problem 1, c < 0, phi0 != 0
  CNonzero,  // problem 2, c != 0
};

// Derived elliptic parameters of one extremal family, with the time map
// tau = tau_rate * t and its domain bound.
struct NormalParams {
  NormalCase kind = NormalCase::CZero;
  int sign = 0;       // sgn phi0 (problem 1) or sgn c (problem 2)
  double E = 1.0;     // energy / first integral at t = 0
  double k = 0.0;
  double kp = 1.0;
  double l = 0.0;     // sqrt(|c|)
  double m = 0.0;
  double ae = 1.0;
  double tau_rate = 0.0;
  double tau_max = kInfinity;  // K(k) where the family blows up
  double t_max = kInfinity;

  double tau_of_t(double t) const { return tau_rate * t; }
  double t_of_tau(double tau) const { return tau / tau_rate; }
};

inline NormalParams normal_params(const Covector& lam) {
  if (!std::isfinite(lam.phi0) || !std::isfinite(lam.c))
    throw std::domain_error("normal_params: covector must be finite");
  NormalParams p;
  if (lam.problem == 1) {
    p.E = std::cosh(lam.phi0);
    p.sign = lam.phi0 > 0.0 ? 1 : (lam.phi0 < 0.0 ? -1 : 0);
    if (lam.c == 0.0) {
      p.kind = NormalCase::CZero;
      return p;
    }
    p.l = std::sqrt(std::abs(lam.c));
    if (lam.c > 0.0) {
      p.kind = lam.phi0 == 0.0 ? NormalCase::CPosAxis : NormalCase::CPos;
      p.k = std::abs(std::tanh(lam.phi0 / 2.0));  // sqrt((E-1)/(E+1))
      p.kp = complementary_modulus(p.k);
      p.m = p.l * p.kp;
      p.ae = 1.0 / p.kp;
      p.tau_rate = p.ae * p.l;
    } else {
      p.kind = lam.phi0 == 0.0 ? NormalCase::CNegAxis : NormalCase::CNeg;
      p.k = std::sqrt(2.0 / (1.0 + p.E));
      p.kp = complementary_modulus(p.k);
      p.m = p.k * p.l;
      p.ae = 1.0;
      p.tau_rate = p.l / p.k;
      if (p.kind == NormalCase::CNeg) {
        p.tau_max = complete_K(p.k);
        p.t_max = p.tau_max / p.tau_rate;
      }
    }
    return p;
  }
  if (lam.problem == 2) {
    p.E = -std::sinh(lam.phi0);
    p.sign = lam.c > 0.0 ? 1 : (lam.c < 0.0 ? -1 : 0);
    if (lam.c == 0.0) {
      p.kind = NormalCase::CZero;
      return p;
    }
    p.kind = NormalCase::CNonzero;
    p.l = std::sqrt(std::abs(lam.c));
    const double r = std::hypot(1.0, p.E);  // sqrt(1 + E^2)
    const double Es = p.sign * p.E;
    // k^2 = (r + Es) / (2r), evaluated without cancellation on either side.
    p.k = Es >= 0.0 ? std::sqrt((r + Es) / (2.0 * r)) : 1.0 / std::sqrt(2.0 * r * (r - Es));
    p.kp = Es <= 0.0 ? std::sqrt((r - Es) / (2.0 * r)) : 1.0 / std::sqrt(2.0 * r * (r + Es));
    p.ae = std::sqrt(r / 2.0);
    p.m = p.l;
    p.tau_rate = p.ae * p.l;
    p.tau_max = complete_K(p.k);
    p.t_max = p.tau_max / p.tau_rate;
    return p;
  }
  throw std::invalid_argument("normal_params: problem must be 1 or 2");
}

namespace detail {

// Truncated even series sn^2(tau) = tau^2 + A2 tau^4 + A3 tau^6 + A4 tau^8
// and derived polynomials, used to evaluate the cancellation-prone brackets
// of the closed forms for small tau.
struct SnSeries {
  // coefficients of tau^{2,4,6,8}
  std::array<double, 4> sn2, sn4, sn6;

  explicit SnSeries(double k) {
    const double k2 = k * k, k4 = k2 * k2, k6 = k4 * k2;
    sn2 = {1.0, -(1.0 + k2) / 3.0, (2.0 + 13.0 * k2 + 2.0 * k4) / 45.0,
           -(1.0 + 135.0 * k2 + 135.0 * k4 + k6) / 2520.0 -
               (1.0 + k2) * (1.0 + 14.0 * k2 + k4) / 360.0};
    sn4 = {0.0, 1.0, 2.0 * sn2[1], 2.0 * sn2[2] + sn2[1] * sn2[1]};
    sn6 = {0.0, 0.0, 1.0, 3.0 * sn2[1]};
  }
};

// integral of a tau^{2,4,6,8} polynomial from 0 to tau
inline double integrate_even_poly(const std::array<double, 4>& a, double tau) {
  const double t2 = tau * tau;
  return tau * t2 *
         (a[0] / 3.0 + t2 * (a[1] / 5.0 + t2 * (a[2] / 7.0 + t2 * a[3] / 9.0)));
}

inline std::array<double, 4> axpy(double s, const std::array<double, 4>& a,
                                  double t, const std::array<double, 4>& b) {
  return {s * a[0] + t * b[0], s * a[1] + t * b[1], s * a[2] + t * b[2],
          s * a[3] + t * b[3]};
}

inline constexpr double kSeriesTau = 0.02;

// z-bracket of problem 1, c > 0:
//   B(tau) = k'^2 tau + 2 k^2 sn cn dn - (1 + k^2) eps(tau)
//          = -3 k^2 int_0^tau sn^2 ((1 + k^2) - 2 k^2 sn^2).
inline double z_bracket_pos1(double tau, double k, const JacobiTriple& j, double eps) {
  const double k2 = k * k, kp2 = 1.0 - k2;
  if (std::abs(tau) >= kSeriesTau)
    return kp2 * tau + 2.0 * k2 * j.sn * j.cn * j.dn - (1.0 + k2) * eps;
  const SnSeries s(k);
  const auto integrand = axpy(-3.0 * k2 * (1.0 + k2), s.sn2, 6.0 * k2 * k2, s.sn4);
  return integrate_even_poly(integrand, tau);
}

// z-bracket of problem 1, c < 0:
//   B(tau) = 2 k'^2 tau + (k^2 - 2) eps + (k^2 + (k^2 - 2) sn^2) dn sn / cn^3
//          = -3 k'^2 int_0^tau tn^2 ((2 - k^2) + 2 k'^2 tn^2),  tn = sn/cn.
inline double z_bracket_neg1(double tau, double k, const JacobiTriple& j, double eps) {
  const double k2 = k * k, kp2 = 1.0 - k2;
  if (std::abs(tau) >= kSeriesTau) {
    const double cn3 = j.cn * j.cn * j.cn;
    return 2.0 * kp2 * tau + (k2 - 2.0) * eps +
           (k2 + (k2 - 2.0) * j.sn * j.sn) * j.dn * j.sn / cn3;
  }
  const SnSeries s(k);
  // tn^2 = sn^2 + sn^4 + sn^6 + ...
  std::array<double, 4> tn2 = {s.sn2[0], s.sn2[1] + s.sn4[1], s.sn2[2] + s.sn4[2] + s.sn6[2],
                               s.sn2[3] + s.sn4[3] + s.sn6[3] + 1.0};
  std::array<double, 4> tn4 = {0.0, tn2[0] * tn2[0], 2.0 * tn2[0] * tn2[1],
                               2.0 * tn2[0] * tn2[2] + tn2[1] * tn2[1]};
  const auto integrand = axpy(-3.0 * kp2 * (2.0 - k2), tn2, -6.0 * kp2 * kp2, tn4);
  return integrate_even_poly(integrand, tau);
}

// y- and z-brackets of problem 2, c != 0, built on Q = dn^2 sn^2 / cn^2:
//   Y(tau) = P + 2 k'^2 tau - 2 eps           = (1 - 2k^2) tau + int Q,
//   Z(tau) = P^3 - 2 k'^2 tau + (2 - 4k^2) eps + 2 k^2 sn cn dn
//          = 3 int (Q^2 - (2k^2 - 1) Q),
// where P = dn sn / cn.
inline std::array<double, 4> q_series(double k, const SnSeries& s) {
  const double kp2 = 1.0 - k * k;
  return {s.sn2[0], s.sn2[1] + kp2 * s.sn4[1], s.sn2[2] + kp2 * (s.sn4[2] + s.sn6[2]),
          s.sn2[3] + kp2 * (s.sn4[3] + s.sn6[3] + 1.0)};
}

inline double y_bracket2(double tau, double k, const JacobiTriple& j, double eps) {
  const double k2 = k * k, kp2 = 1.0 - k2;
  if (std::abs(tau) >= kSeriesTau)
    return j.dn * j.sn / j.cn + 2.0 * kp2 * tau - 2.0 * eps;
  const SnSeries s(k);
  return (1.0 - 2.0 * k2) * tau + integrate_even_poly(q_series(k, s), tau);
}

inline double z_bracket2(double tau, double k, const JacobiTriple& j, double eps) {
  const double k2 = k * k, kp2 = 1.0 - k2;
  if (std::abs(tau) >= kSeriesTau) {
    const double P = j.dn * j.sn / j.cn;
    return P * P * P - 2.0 * kp2 * tau + (2.0 - 4.0 * k2) * eps +
           2.0 * k2 * j.sn * j.cn * j.dn;
  }
  const SnSeries s(k);
  const auto Q = q_series(k, s);
  const std::array<double, 4> Q2 = {0.0, Q[0] * Q[0], 2.0 * Q[0] * Q[1],
                                    2.0 * Q[0] * Q[2] + Q[1] * Q[1]};
  const auto integrand = axpy(3.0, Q2, -3.0 * (2.0 * k2 - 1.0), Q);
  return integrate_even_poly(integrand, tau);
}

}  // namespace detail

// Endpoint of the problem-1 normal extremal Exp(lambda, t), t >= 0.
inline Point exp1(const Covector& lam, double t) {
  const NormalParams p = normal_params({lam.phi0, lam.c, 1});
  if (!(t >= 0.0) || !std::isfinite(t))
    throw std::domain_error("exp1: time must be finite and nonnegative");
  switch (p.kind) {
    case NormalCase::CZero: {
      const double sh = std::sinh(lam.phi0), ch = p.E;
      return {t * sh, t * ch, t * t * t / 6.0 * ch * sh * sh};
    }
    case NormalCase::CPosAxis:
    case NormalCase::CNegAxis:
      return {0.0, t, 0.0};
    case NormalCase::CPos: {
      const double tau = p.tau_of_t(t);
      const JacobiTriple j = jacobi_sn_cn_dn(tau, p.k);
      const double eps = jacobi_epsilon(tau, p.k);
      const double kp2 = p.kp * p.kp;
      const double m3 = p.m * p.m * p.m;
      return {p.sign * 2.0 * p.k / p.m * j.sn,
              (2.0 * eps - kp2 * tau) / p.m,
              -2.0 / (3.0 * m3) * detail::z_bracket_pos1(tau, p.k, j, eps)};
    }
    case NormalCase::CNeg: {
      const double tau = p.tau_of_t(t);
      if (tau >= p.tau_max)
        throw std::domain_error("exp1: time beyond domain bound kK/l (c < 0)");
      const JacobiTriple j = jacobi_sn_cn_dn(tau, p.k);
      const double eps = jacobi_epsilon(tau, p.k);
      const double k2 = p.k * p.k;
      const double m3 = p.m * p.m * p.m;
      return {p.sign * 2.0 * p.kp / p.m * j.sn / j.cn,
              ((2.0 - k2) * tau + 2.0 * j.dn * j.sn / j.cn - 2.0 * eps) / p.m,
              -2.0 / (3.0 * m3) * detail::z_bracket_neg1(tau, p.k, j, eps)};
    }
    default:
      throw std::invalid_argument("exp1: covector is not a problem-1 covector");
  }
}

// Endpoint of the problem-2 normal extremal Exp(lambda, t), t >= 0.
inline Point exp2(const Covector& lam, double t) {
  const NormalParams p = normal_params({lam.phi0, lam.c, 2});
  if (!(t >= 0.0) || !std::isfinite(t))
    throw std::domain_error("exp2: time must be finite and nonnegative");
  if (p.kind == NormalCase::CZero) {
    const double ch = std::cosh(lam.phi0), sh = std::sinh(lam.phi0);
    return {t * ch, t * sh, t * t * t / 6.0 * ch * ch * sh};
  }
  const double tau = p.tau_of_t(t);
  if (tau >= p.tau_max)
    throw std::domain_error("exp2: time beyond domain bound K/(ae l)");
  const JacobiTriple j = jacobi_sn_cn_dn(tau, p.k);
  const double eps = jacobi_epsilon(tau, p.k);
  const double P = j.dn * j.sn / j.cn;
  const double ae3 = p.ae * p.ae * p.ae, l3 = p.l * p.l * p.l;
  return {2.0 * p.ae / p.l * P,
          p.sign * 2.0 * p.ae / p.l * detail::y_bracket2(tau, p.k, j, eps),
          p.sign * 4.0 * ae3 / (3.0 * l3) * detail::z_bracket2(tau, p.k, j, eps)};
}

inline Point exp_map(const Covector& lam, double t) {
  return lam.problem == 1 ? exp1(lam, t) : exp2(lam, t);
}

// Cut time t_cut(lambda); +infinity where the extremal stays optimal forever.
inline double cut_time(const Covector& lam) {
  const NormalParams p = normal_params(lam);
  switch (p.kind) {
    case NormalCase::CZero:
    case NormalCase::CPosAxis:
    case NormalCase::CNegAxis:
      return kInfinity;
    case NormalCase::CPos:
      // first Maxwell time tau = 2K, i.e. t = 2K/(ae l) = 2 k' K / l
      return 2.0 * complete_K(p.k) * p.kp / p.l;
    case NormalCase::CNeg:
      return p.t_max;  // k K / l
    case NormalCase::CNonzero:
      return p.t_max;  // K / (ae l)
  }
  return kInfinity;
}

// ---------------------------------------------------------------------------
// Abnormal trajectories

enum class AbnormalKind {
  // problem 1 (u2 = 1)
  kBangPlusMinus,   // (1,1) -> (-1,1)
  kBangMinusPlus,   // (-1,1) -> (1,1)
  kSingularPlus,    // (0,1) -> (1,1)
  kSingularMinus,   // (0,1) -> (-1,1)
  kSingular,        // pure (0,1)
  kBangPlus,        // pure (1,1)
  kBangMinus,       // pure (-1,1)
  // problem 2 (u1 = 1)
  kBang2PlusMinus,  // (1,1) -> (1,-1)
  kBang2MinusPlus,  // (1,-1) -> (1,1)
  kBang2Plus,       // pure (1,1)
  kBang2Minus,      // pure (1,-1)
};

struct AbnormalSpec {
  AbnormalKind kind;
  double tau1 = 0.0;  // switching time (ignored for pure arcs)
  double t1 = 0.0;    // total time

  int problem() const { return kind >= AbnormalKind::kBang2PlusMinus ? 2 : 1; }
};

namespace detail {

using Control = std::array<double, 2>;

inline std::pair<Control, Control> abnormal_controls(AbnormalKind kind) {
  switch (kind) {
    case AbnormalKind::kBangPlusMinus: return {{{1, 1}}, {{-1, 1}}};
    case AbnormalKind::kBangMinusPlus: return {{{-1, 1}}, {{1, 1}}};
    case AbnormalKind::kSingularPlus: return {{{0, 1}}, {{1, 1}}};
    case AbnormalKind::kSingularMinus: return {{{0, 1}}, {{-1, 1}}};
    case AbnormalKind::kSingular: return {{{0, 1}}, {{0, 1}}};
    case AbnormalKind::kBangPlus: return {{{1, 1}}, {{1, 1}}};
    case AbnormalKind::kBangMinus: return {{{-1, 1}}, {{-1, 1}}};
    case AbnormalKind::kBang2PlusMinus: return {{{1, 1}}, {{1, -1}}};
    case AbnormalKind::kBang2MinusPlus: return {{{1, -1}}, {{1, 1}}};
    case AbnormalKind::kBang2Plus: return {{{1, 1}}, {{1, 1}}};
    case AbnormalKind::kBang2Minus: return {{{1, -1}}, {{1, -1}}};
  }
  throw std::invalid_argument("abnormal_controls: bad kind");
}

// Exact flow of a constant control (u1, u2) for duration d.
inline Point flow_const(Point p, const Control& u, double d) {
  Point r;
  r.x = p.x + u[0] * d;
  r.y = p.y + u[1] * d;
  r.z = p.z + u[1] * (p.x * p.x * d + p.x * u[0] * d * d + u[0] * u[0] * d * d * d / 3.0) / 2.0;
  return r;
}

}  // namespace detail

// Point of the abnormal trajectory at time t in [0, t1].
inline Point abnormal(const AbnormalSpec& spec, double t) {
  if (!(spec.tau1 >= 0.0) || !(spec.t1 >= spec.tau1))
    throw std::domain_error("abnormal: need 0 <= tau1 <= t1");
  if (!(t >= 0.0) || t > spec.t1)
    throw std::domain_error("abnormal: time outside [0, t1]");
  const auto [u_first, u_second] = detail::abnormal_controls(spec.kind);
  if (t <= spec.tau1) return detail::flow_const({}, u_first, t);
  const Point at_switch = detail::flow_const({}, u_first, spec.tau1);
  return detail::flow_const(at_switch, u_second, t - spec.tau1);
}

// Sub-Lorentzian length of the abnormal trajectory: bang arcs are lightlike,
// singular arcs (u = (0,1), on x = 0) contribute their duration.
inline double abnormal_length(const AbnormalSpec& spec) {
  switch (spec.kind) {
    case AbnormalKind::kSingular:
      return spec.t1;
    case AbnormalKind::kSingularPlus:
    case AbnormalKind::kSingularMinus:
      return spec.tau1;
    default:
      return 0.0;
  }
}

// ---------------------------------------------------------------------------
// Independent ODE integration of the normal Hamiltonian system

struct ODEState {
  double h1 = 0.0, h2 = 0.0, h3 = 0.0;
  double x = 0.0, y = 0.0, z = 0.0;
  double hamiltonian_drift = 0.0;  // max |H + 1/2| along the trajectory
  double energy_drift = 0.0;       // max |E(t) - E(0)| of the energy integral

  Point point() const { return {x, y, z}; }
};

namespace detail {

using State6 = std::array<double, 6>;  // h1, h2, h3, x, y, z

inline State6 hamiltonian_rhs(const State6& s, int problem) {
  const auto [h1, h2, h3, x, y, z] = s;
  (void)y;
  (void)z;
  if (problem == 1)
    return {h2 * h3 * x, h1 * h3 * x, 0.0, h1, -h2, -h2 * x * x / 2.0};
  return {-h2 * h3 * x, -h1 * h3 * x, 0.0, -h1, h2, h2 * x * x / 2.0};
}

// Cooper-Verner 11-stage 8th-order Runge-Kutta tableau.
struct CooperVerner {
  static constexpr int kStages = 11;
  double a[kStages][kStages] = {};
  double b[kStages] = {};

  CooperVerner() {
    const double s = std::sqrt(21.0);
    a[1][0] = 1.0 / 2;
    a[2][0] = 1.0 / 4; a[2][1] = 1.0 / 4;
    a[3][0] = 1.0 / 7; a[3][1] = (-7 - 3 * s) / 98; a[3][2] = (21 + 5 * s) / 49;
    a[4][0] = (11 + s) / 84; a[4][2] = (18 + 4 * s) / 63; a[4][3] = (21 - s) / 252;
    a[5][0] = (5 + s) / 48; a[5][2] = (9 + s) / 36; a[5][3] = (-231 + 14 * s) / 360;
    a[5][4] = (63 - 7 * s) / 80;
    a[6][0] = (10 - s) / 42; a[6][2] = (-432 + 92 * s) / 315; a[6][3] = (633 - 145 * s) / 90;
    a[6][4] = (-504 + 115 * s) / 70; a[6][5] = (63 - 13 * s) / 35;
    a[7][0] = 1.0 / 14; a[7][4] = (14 - 3 * s) / 126; a[7][5] = (13 - 3 * s) / 63;
    a[7][6] = 1.0 / 9;
    a[8][0] = 1.0 / 32; a[8][4] = (91 - 21 * s) / 576; a[8][5] = 11.0 / 72;
    a[8][6] = (-385 - 75 * s) / 1152; a[8][7] = (63 + 13 * s) / 128;
    a[9][0] = 1.0 / 14; a[9][4] = 1.0 / 9; a[9][5] = (-733 - 147 * s) / 2205;
    a[9][6] = (515 + 111 * s) / 504; a[9][7] = (-51 - 11 * s) / 56;
    a[9][8] = (132 + 28 * s) / 245;
    a[10][4] = (-42 + 7 * s) / 18; a[10][5] = (-18 + 28 * s) / 45;
    a[10][6] = (-273 - 53 * s) / 72; a[10][7] = (301 + 53 * s) / 72;
    a[10][8] = (28 - 28 * s) / 45; a[10][9] = (49 - 7 * s) / 18;
    b[0] = 1.0 / 20; b[7] = 49.0 / 180; b[8] = 16.0 / 45; b[9] = 49.0 / 180;
    b[10] = 1.0 / 20;
  }
};

}  // namespace detail

// Fixed-step RK8 integration of the normal Hamiltonian system from
// (phi0, c, 0, 0, 0), reporting the final state and the conservation drifts.
inline ODEState integrate_ode(const Covector& lam, double t, int steps) {
  if (steps < 1) throw std::invalid_argument("integrate_ode: steps >= 1 required");
  static const detail::CooperVerner rk;
  detail::State6 s;
  if (lam.problem == 1)
    s = {std::sinh(lam.phi0), -std::cosh(lam.phi0), lam.c, 0.0, 0.0, 0.0};
  else if (lam.problem == 2)
    s = {-std::cosh(lam.phi0), std::sinh(lam.phi0), lam.c, 0.0, 0.0, 0.0};
  else
    throw std::invalid_argument("integrate_ode: problem must be 1 or 2");

  const int hsign = lam.problem == 1 ? 1 : -1;  // H = hsign*(h1^2 - h2^2)/2
  // Energy integral: E = c x^2/2 - h2 in both problems.
  const double energy0 = -s[1];

  ODEState out;
  const double h = t / steps;
  detail::State6 k[detail::CooperVerner::kStages];
  for (int step = 0; step < steps; ++step) {
    for (int i = 0; i < detail::CooperVerner::kStages; ++i) {
      detail::State6 si = s;
      for (int j = 0; j < i; ++j) {
        if (rk.a[i][j] == 0.0) continue;
        for (int d = 0; d < 6; ++d) si[d] += h * rk.a[i][j] * k[j][d];
      }
      k[i] = detail::hamiltonian_rhs(si, lam.problem);
    }
    for (int i = 0; i < detail::CooperVerner::kStages; ++i) {
      if (rk.b[i] == 0.0) continue;
      for (int d = 0; d < 6; ++d) s[d] += h * rk.b[i] * k[i][d];
    }
    const double H = hsign * (s[0] * s[0] - s[1] * s[1]) / 2.0;
    out.hamiltonian_drift = std::fmax(out.hamiltonian_drift, std::abs(H + 0.5));
    const double energy = lam.c * s[3] * s[3] / 2.0 - s[1];
    out.energy_drift = std::fmax(out.energy_drift, std::abs(energy - energy0));
  }
  out.h1 = s[0]; out.h2 = s[1]; out.h3 = s[2];
  out.x = s[3]; out.y = s[4]; out.z = s[5];
  return out;
}

// ---------------------------------------------------------------------------
// Trajectory sampling (exact closed forms at n equally spaced times)

inline std::vector<std::pair<double, Point>> sample_trajectory(const Covector& lam,
                                                               double t1, int n) {
  if (n < 2) throw std::invalid_argument("sample_trajectory: n >= 2 required");
  std::vector<std::pair<double, Point>> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double t = t1 * i / (n - 1);
    out.emplace_back(t, exp_map(lam, t));
  }
  return out;
}

inline std::vector<std::pair<double, Point>> sample_trajectory(const AbnormalSpec& spec,
                                                               int n) {
  if (n < 2) throw std::invalid_argument("sample_trajectory: n >= 2 required");
  std::vector<std::pair<double, Point>> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double t = spec.t1 * i / (n - 1);
    out.emplace_back(t, abnormal(spec, t));
  }
  return out;
}

}  // namespace slmart

#endif  // SLMART_EXTREMALS_HPP_
