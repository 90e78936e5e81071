// Geometric base layer for the two flat sub-Lorentzian problems on the
// Martinet distribution: points of M = R^3, the symmetries (reflection,
// dilations), homogeneous coordinates (xi, eta), the invariant sets B1 / B2
// with their boundary surfaces, and stratum classification.

#ifndef SLMART_CORE_HPP_
#define SLMART_CORE_HPP_

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace slmart {

struct Point {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline constexpr Point operator-(Point a, Point b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}

inline double norm(Point p) { return std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z); }

inline double dist(Point a, Point b) { return norm(a - b); }

// Dilation delta_alpha(x, y, z) = (alpha x, alpha y, alpha^3 z), alpha > 0.
inline Point dilate(Point q, double alpha) {
  if (!(alpha > 0.0)) throw std::domain_error("dilate: alpha must be positive");
  return {alpha * q.x, alpha * q.y, alpha * alpha * alpha * q.z};
}

// Reflection (phi, c, x, y, z) -> (-phi, c, -x, y, z).
struct Reflected {
  double phi0;
  double c;
  Point q;
};

inline Reflected reflect(double phi0, double c, Point q) {
  return {-phi0, c, {-q.x, q.y, q.z}};
}

// Homogeneous coordinates induced by the dilations, translated to a base
// point (0, y0, z0):
//   xi  = x / (y - y0),
//   eta = (24 (z - z0) - 3 x^2 (y - y0) - (y - y0)^3) / (24 (y - y0)^3).
struct HomCoords {
  double xi;
  double eta;
};

inline HomCoords hom_coords(Point q, Point base = {}) {
  if (base.x != 0.0)
    throw std::invalid_argument("hom_coords: base point must lie on the plane x = 0");
  const double dy = q.y - base.y;
  if (dy == 0.0) throw std::domain_error("hom_coords: chart undefined at y = y0");
  const double dz = q.z - base.z;
  const double dy3 = dy * dy * dy;
  return {q.x / dy, (24.0 * dz - 3.0 * q.x * q.x * dy - dy3) / (24.0 * dy3)};
}

// Boundary profiles of B1 in the (xi, eta) chart, plus the interior divider
// phi5 (the image of the c = 0 extremals):
//   S1: eta = phi1, S2: eta = phi2, S3: eta = phi3, S4: eta = phi4.
struct PhiProfiles {
  double phi1;
  double phi2;
  double phi3;
  double phi4;
  double phi5;
};

inline PhiProfiles phi_profiles(double xi) {
  const double xi2 = xi * xi;
  PhiProfiles p;
  p.phi1 = xi * (1.0 - xi2) / 8.0;
  p.phi2 = -p.phi1;
  p.phi3 = xi2 * xi / 6.0 - (3.0 * xi2 + 1.0) / 24.0;
  p.phi4 = -xi2 * xi / 6.0 - (3.0 * xi2 + 1.0) / 24.0;
  p.phi5 = (xi2 - 1.0) / 24.0;
  return p;
}

enum class Region : std::uint8_t { Outside, Interior, Boundary };

// Interior strata of int B1.
enum class Stratum1 : std::uint8_t { M0, M1, M2, M3, M4, M5, M6 };

// Boundary surface flags.  Problem 1 uses S1..S4; problem 2 uses Z1 (lower
// graph z = z^1), Z2 (upper graph z = z^2).  Corners carry every active flag.
namespace surface {
inline constexpr unsigned kS1 = 1u << 0;
inline constexpr unsigned kS2 = 1u << 1;
inline constexpr unsigned kS3 = 1u << 2;
inline constexpr unsigned kS4 = 1u << 3;
inline constexpr unsigned kZ1 = 1u << 4;
inline constexpr unsigned kZ2 = 1u << 5;
}  // namespace surface

struct Classification {
  Region region = Region::Outside;
  std::optional<Stratum1> stratum;  // set for problem-1 interior points
  unsigned surfaces = 0;            // active surface flags for boundary points
  std::optional<HomCoords> hom;     // (xi, eta) when the chart is defined

  bool outside() const { return region == Region::Outside; }
  bool interior() const { return region == Region::Interior; }
  bool boundary() const { return region == Region::Boundary; }
  bool on(unsigned flag) const { return (surfaces & flag) != 0; }
};

inline const char* to_string(Region r) {
  switch (r) {
    case Region::Outside: return "outside";
    case Region::Interior: return "interior";
    case Region::Boundary: return "boundary";
  }
  return "?";
}

inline const char* to_string(Stratum1 s) {
  switch (s) {
    case Stratum1::M0: return "M0";
    case Stratum1::M1: return "M1";
    case Stratum1::M2: return "M2";
    case Stratum1::M3: return "M3";
    case Stratum1::M4: return "M4";
    case Stratum1::M5: return "M5";
    case Stratum1::M6: return "M6";
  }
  return "?";
}

inline std::string surface_names(unsigned flags) {
  std::string out;
  auto add = [&](unsigned f, const char* name) {
    if (flags & f) {
      if (!out.empty()) out += "&";
      out += name;
    }
  };
  add(surface::kS1, "S1");
  add(surface::kS2, "S2");
  add(surface::kS3, "S3");
  add(surface::kS4, "S4");
  add(surface::kZ1, "z1");
  add(surface::kZ2, "z2");
  return out;
}

inline constexpr double kDefaultBoundaryTol = 1e-9;

// Stratified classification of a point relative to B1 = A1.  The boundary
// band is |eta - phi_i(xi)| <= eps_b in the scale-free eta coordinate, so the
// result is dilation-invariant.  The degenerate ray {x = 0, z = 0, y >= 0}
// (where all four surfaces meet) reports S3&S4.
inline Classification classify1(Point q, double eps_b = kDefaultBoundaryTol) {
  Classification cl;
  if (q.x == 0.0 && q.y == 0.0 && q.z == 0.0) {
    cl.region = Region::Boundary;
    cl.surfaces = surface::kS3 | surface::kS4;
    return cl;
  }
  if (!(q.y > 0.0)) return cl;  // A1 \ {q0} lies in {y > 0}

  const HomCoords h = hom_coords(q);
  cl.hom = h;
  if (std::abs(h.xi) > 1.0 + eps_b) return cl;

  const double xi = std::fmin(1.0, std::fmax(-1.0, h.xi));
  const PhiProfiles p = phi_profiles(xi);

  // Active boundary surfaces (with their xi half-ranges, widened by eps_b).
  unsigned s = 0;
  if (h.xi >= -eps_b && std::abs(h.eta - p.phi1) <= eps_b) s |= surface::kS1;
  if (h.xi <= eps_b && std::abs(h.eta - p.phi2) <= eps_b) s |= surface::kS2;
  if (h.xi >= -eps_b && std::abs(h.eta - p.phi3) <= eps_b) s |= surface::kS3;
  if (h.xi <= eps_b && std::abs(h.eta - p.phi4) <= eps_b) s |= surface::kS4;
  if (s != 0) {
    cl.region = Region::Boundary;
    cl.surfaces = s;
    return cl;
  }

  const double upper = h.xi >= 0.0 ? p.phi1 : p.phi2;
  const double lower = h.xi >= 0.0 ? p.phi3 : p.phi4;
  if (h.eta > upper || h.eta < lower) return cl;

  cl.region = Region::Interior;
  if (std::abs(h.xi) <= eps_b)
    cl.stratum = Stratum1::M0;
  else if (std::abs(h.eta - p.phi5) <= eps_b)
    cl.stratum = h.xi > 0.0 ? Stratum1::M5 : Stratum1::M6;
  else if (h.xi > 0.0)
    cl.stratum = h.eta > p.phi5 ? Stratum1::M1 : Stratum1::M3;
  else
    cl.stratum = h.eta > p.phi5 ? Stratum1::M2 : Stratum1::M4;
  return cl;
}

// Boundary graphs of B2 = A2.
inline double z1_graph(double x, double y) {
  const double s = x + y;
  return (s * s * s - 4.0 * x * x * x) / 24.0;
}

inline double z2_graph(double x, double y) {
  const double d = x - y;
  return (4.0 * x * x * x - d * d * d) / 24.0;
}

// Classification relative to B2 = {x >= |y|, z^1 <= z <= z^2}.  Tolerances
// are taken scale-free: eps_b * x on the cone |y| <= x and eps_b * x^3 on the
// z slab.
inline Classification classify2(Point q, double eps_b = kDefaultBoundaryTol) {
  Classification cl;
  if (q.x == 0.0 && q.y == 0.0 && q.z == 0.0) {
    cl.region = Region::Boundary;
    cl.surfaces = surface::kZ1 | surface::kZ2;
    return cl;
  }
  if (!(q.x > 0.0)) return cl;
  const double tol_xy = eps_b * q.x;
  if (std::abs(q.y) > q.x + tol_xy) return cl;

  const double tol_z = eps_b * q.x * q.x * q.x;
  const double zl = z1_graph(q.x, q.y);
  const double zu = z2_graph(q.x, q.y);
  if (q.z < zl - tol_z || q.z > zu + tol_z) return cl;

  unsigned s = 0;
  if (std::abs(q.z - zl) <= tol_z) s |= surface::kZ1;
  if (std::abs(q.z - zu) <= tol_z) s |= surface::kZ2;
  if (std::abs(q.y) >= q.x - tol_xy) s |= surface::kZ1 | surface::kZ2;  // cone edge
  if (s != 0) {
    cl.region = Region::Boundary;
    cl.surfaces = s;
    return cl;
  }
  cl.region = Region::Interior;
  return cl;
}

inline Classification classify(Point q, int problem, double eps_b = kDefaultBoundaryTol) {
  if (problem == 1) return classify1(q, eps_b);
  if (problem == 2) return classify2(q, eps_b);
  throw std::invalid_argument("classify: problem must be 1 or 2");
}

// Membership of q in the causal future J+(base).  The closed-form test is
// available for base points on the Martinet plane only (base.x = 0).
inline bool causal_future(Point base, Point q, int problem,
                          double eps_b = kDefaultBoundaryTol) {
  if (base.x != 0.0)
    throw std::invalid_argument("causal_future: base point must lie on x = 0");
  const Point rel = q - base;
  return !classify({q.x, rel.y, rel.z}, problem, eps_b).outside();
}

// Membership of q in the causal past J-(base), by time inversion.
inline bool causal_past(Point base, Point q, int problem,
                        double eps_b = kDefaultBoundaryTol) {
  if (base.x != 0.0)
    throw std::invalid_argument("causal_past: base point must lie on x = 0");
  const Point rel = base - q;
  // Time inversion maps the problem-1 test to (xi, eta) -> (-xi, eta), i.e.
  // classify1 of (x, y0 - y, z0 - z); for problem 2 it flips the x axis.
  const double x = problem == 1 ? q.x : -q.x;
  return !classify({x, rel.y, rel.z}, problem, eps_b).outside();
}

}  // namespace slmart

#endif  // SLMART_CORE_HPP_
