// Complete elliptic integrals and Jacobi elliptic functions.
//
// Everything is computed through the arithmetic-geometric mean: K and E from
// the AGM limit and the c-sequence, sn/cn/dn and the continuous amplitude from
// the backward Gauss/Landen recurrence, and Jacobi's epsilon through the zeta
// decomposition eps(tau) = (E/K) tau + Z(tau).
//
// Modulus convention: all functions take the modulus k (not the parameter
// m = k^2), with 0 <= k < 1.

#ifndef SLMART_ELLIPTIC_HPP_
#define SLMART_ELLIPTIC_HPP_

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace slmart {

inline void check_modulus(double k) {
  if (!(k >= 0.0 && k < 1.0))
    throw std::domain_error("elliptic: modulus k must satisfy 0 <= k < 1");
}

inline double complementary_modulus(double k) {
  check_modulus(k);
  return std::sqrt((1.0 - k) * (1.0 + k));
}

namespace detail {

// AGM chain a_n, b_n, c_n with a_0 = 1, b_0 = k', c_0 = k.
struct AgmChain {
  static constexpr int kMaxIter = 40;
  double a[kMaxIter + 1];
  double c[kMaxIter + 1];
  int n = 0;  // index of the last iterate; c[n] ~ 0

  explicit AgmChain(double k) {
    double b = std::sqrt((1.0 - k) * (1.0 + k));
    a[0] = 1.0;
    c[0] = k;
    while (n < kMaxIter && std::abs(c[n]) > 1e-18 * a[n]) {
      const double an = 0.5 * (a[n] + b);
      const double cn = 0.5 * (a[n] - b);
      b = std::sqrt(a[n] * b);
      ++n;
      a[n] = an;
      c[n] = cn;
    }
  }
};

}  // namespace detail

// K(k) = int_0^{pi/2} dtheta / sqrt(1 - k^2 sin^2 theta).
inline double complete_K(double k) {
  check_modulus(k);
  detail::AgmChain ch(k);
  return std::numbers::pi / (2.0 * ch.a[ch.n]);
}

// E(k) = int_0^{pi/2} sqrt(1 - k^2 sin^2 theta) dtheta.
inline double complete_E(double k) {
  check_modulus(k);
  detail::AgmChain ch(k);
  double sum = 0.0;
  double pow2 = 0.5;  // 2^{i-1}
  for (int i = 0; i <= ch.n; ++i, pow2 *= 2.0) sum += pow2 * ch.c[i] * ch.c[i];
  const double K = std::numbers::pi / (2.0 * ch.a[ch.n]);
  return K * (1.0 - sum);
}

struct JacobiTriple {
  double sn;
  double cn;
  double dn;
};

namespace detail {

// Continuous amplitude and the zeta sum Z(tau) for tau already reduced to
// [-K, K].  Uses the backward recurrence
//   2 phi_{i-1} = phi_i + asin((c_i / a_i) sin phi_i),
// where the arcsine stays on the principal branch (the correction angle is
// bounded by asin(c_i/a_i) < pi/2), and Z = sum_{i>=1} c_i sin phi_i.
struct AmplitudeChain {
  double am;
  double zeta;

  AmplitudeChain(double tau, const AgmChain& ch) {
    double phi = std::ldexp(ch.a[ch.n] * tau, ch.n);
    zeta = 0.0;
    for (int i = ch.n; i >= 1; --i) {
      zeta += ch.c[i] * std::sin(phi);
      double s = ch.c[i] / ch.a[i] * std::sin(phi);
      s = std::fmin(1.0, std::fmax(-1.0, s));
      phi = 0.5 * (phi + std::asin(s));
    }
    am = phi;
  }
};

}  // namespace detail

// Continuous Jacobi amplitude, sin(am tau) = sn tau, am(tau + 2K) = am tau + pi.
inline double jacobi_am(double tau, double k) {
  check_modulus(k);
  if (!std::isfinite(tau)) throw std::domain_error("jacobi_am: tau must be finite");
  detail::AgmChain ch(k);
  const double K = std::numbers::pi / (2.0 * ch.a[ch.n]);
  const double periods = std::nearbyint(tau / (2.0 * K));
  const double r = tau - 2.0 * K * periods;
  return detail::AmplitudeChain(r, ch).am + periods * std::numbers::pi;
}

// sn, cn, dn of modulus k.
inline JacobiTriple jacobi_sn_cn_dn(double tau, double k) {
  const double am = jacobi_am(tau, k);
  JacobiTriple j;
  j.sn = std::sin(am);
  j.cn = std::cos(am);
  j.dn = std::sqrt(1.0 - k * k * j.sn * j.sn);
  return j;
}

// Jacobi zeta function Z(tau) = eps(tau) - (E/K) tau; odd, 2K-periodic.
inline double jacobi_zeta(double tau, double k) {
  check_modulus(k);
  if (!std::isfinite(tau)) throw std::domain_error("jacobi_zeta: tau must be finite");
  detail::AgmChain ch(k);
  const double K = std::numbers::pi / (2.0 * ch.a[ch.n]);
  const double r = tau - 2.0 * K * std::nearbyint(tau / (2.0 * K));
  return detail::AmplitudeChain(r, ch).zeta;
}

// Jacobi epsilon eps(tau) = int_0^tau dn^2 t dt = (E/K) tau + Z(tau).
inline double jacobi_epsilon(double tau, double k) {
  check_modulus(k);
  if (!std::isfinite(tau)) throw std::domain_error("jacobi_epsilon: tau must be finite");
  detail::AgmChain ch(k);
  double sum = 0.0;
  double pow2 = 0.5;
  for (int i = 0; i <= ch.n; ++i, pow2 *= 2.0) sum += pow2 * ch.c[i] * ch.c[i];
  const double K = std::numbers::pi / (2.0 * ch.a[ch.n]);
  const double EoverK = 1.0 - sum;
  const double r = tau - 2.0 * K * std::nearbyint(tau / (2.0 * K));
  return EoverK * tau + detail::AmplitudeChain(r, ch).zeta;
}

}  // namespace slmart

#endif  // SLMART_ELLIPTIC_HPP_
