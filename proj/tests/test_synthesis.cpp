#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "slmart/synthesis.hpp"

using namespace slmart;

namespace {

// Random interior point reached by a normal extremal strictly before its cut.
Point random_interior(int problem, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (;;) {
    const double phi0 = (uni(rng) < 0.5 ? -1.0 : 1.0) * (0.2 + 2.0 * uni(rng));
    const double c = std::sinh(-2.0 + 4.0 * uni(rng));
    const Covector lam{phi0, c, problem};
    const double t = (0.1 + 0.8 * uni(rng)) * std::min(cut_time(lam), 3.0);
    const Point q = exp_map(lam, t);
    if (classify(q, problem).interior()) return q;
  }
}

}  // namespace

TEST_CASE("inversion round-trip recovers interior points with small residual") {
  std::mt19937_64 rng(11);
  for (int problem : {1, 2})
    for (int i = 0; i < 40; ++i) {
      const Point q = random_interior(problem, rng);
      const InverseResult inv = invert_exp(q, problem);
      REQUIRE(!inv.solutions.empty());
      const double scale = std::max({1.0, std::abs(q.x), std::abs(q.y)});
      CHECK(inv.residual / scale < 1e-8);
      for (const auto& [lam, t1] : inv.solutions) {
        CHECK(lam.problem == problem);
        CHECK(t1 > 0.0);
        CHECK(t1 <= cut_time(lam) * (1.0 + 1e-9));
        CHECK(dist(exp_map(lam, t1), q) / scale < 1e-8);
      }
    }
}

TEST_CASE("points on the Maxwell plane x = 0 have two symmetric preimages") {
  const Point q{0.0, 1.0, 0.02};
  const InverseResult inv = invert_exp(q, 1);
  REQUIRE(inv.solutions.size() == 2);
  const auto& [l0, t0] = inv.solutions[0];
  const auto& [l1, t1] = inv.solutions[1];
  CHECK(l0.phi0 == doctest::Approx(-l1.phi0).epsilon(1e-12));
  CHECK(l0.c == doctest::Approx(l1.c).epsilon(1e-12));
  CHECK(t0 == doctest::Approx(t1).epsilon(1e-12));
  // off the plane the preimage is unique
  CHECK(invert_exp({0.3, 1.0, 0.02}, 1).solutions.size() == 1);
  CHECK(invert_exp({1.0, 0.3, 0.05}, 2).solutions.size() == 1);
}

TEST_CASE("distance reference values and boundary behavior") {
  CHECK(distance({0.0, 1.0, 0.0}, 1) == doctest::Approx(1.0));
  CHECK(distance({0.3, 1.0, 0.3 * 0.3 * 0.3 / 6.0}, 1) == doctest::Approx(0.7));
  // lightlike boundary pieces
  CHECK(distance({0.5, 0.5, 0.5 * 0.5 * 0.5 / 6.0 * 0.0}, 1) == 0.0);  // |x| = y sector tip
  CHECK(distance({0.0, 1.0, 1.0 / 24.0}, 1) == 0.0);
  CHECK(distance({0.8, 0.8, 0.8 * 0.8 * 0.8 / 6.0}, 2) == 0.0);
  // outside: d = 0, not attainable
  const DistanceInfo out = distance_info({0.0, -1.0, 0.0}, 1);
  CHECK(out.value == 0.0);
  CHECK_FALSE(out.attainable);
  // first-kind discontinuity flag on the singular strata
  CHECK(distance_info({0.0, 1.0, 0.0}, 1).boundary_value);
  CHECK_FALSE(distance_info({0.0, 1.0, 0.02}, 1).boundary_value);
}

TEST_CASE("distance is positively homogeneous of order one under dilations") {
  std::mt19937_64 rng(13);
  for (int problem : {1, 2})
    for (int i = 0; i < 6; ++i) {
      const Point q = random_interior(problem, rng);
      const double d = distance(q, problem);
      for (double a : {0.1, 2.0, 100.0})
        CHECK(std::abs(distance(dilate(q, a), problem) - a * d) / (a * d) < 1e-6);
    }
}

TEST_CASE("distance decreases strictly along x = 0, y = 1 toward the upper corner") {
  double prev = distance({0.0, 1.0, 1e-4}, 1);
  CHECK(prev < 1.0);
  for (double z = 0.004; z < 1.0 / 24.0; z += 0.004) {
    const double d = distance({0.0, 1.0, z}, 1);
    CHECK(d < prev);
    prev = d;
  }
}

TEST_CASE("synthesis on the upper corner point gives two bang-bang plans") {
  const SynthesisPlan plan = synthesize({0.0, 1.0, 1.0 / 24.0}, 1);
  CHECK(plan.total_length == 0.0);
  CHECK(plan.multiplicity == 2);
  REQUIRE(plan.arcs.size() == 2);
  REQUIRE(plan.alternate.has_value());
  const auto& a0 = std::get<BangArc>(plan.arcs[0]);
  const auto& a1 = std::get<BangArc>(plan.arcs[1]);
  CHECK(a0.duration == doctest::Approx(0.5));
  CHECK(a1.duration == doctest::Approx(0.5));
  CHECK(a0.control[0] == -a1.control[0]);
}

TEST_CASE("synthesis on S3 is a singular arc followed by a bang arc") {
  const SynthesisPlan plan = synthesize({0.3, 1.0, 0.3 * 0.3 * 0.3 / 6.0}, 1);
  CHECK(plan.total_length == doctest::Approx(0.7));
  CHECK(plan.multiplicity == 1);
  REQUIRE(plan.arcs.size() == 2);
  CHECK(std::get<SingularArc>(plan.arcs[0]).duration == doctest::Approx(0.7));
  CHECK(std::get<BangArc>(plan.arcs[1]).duration == doctest::Approx(0.3));
}

TEST_CASE("synthesis on the singular ray is the pure singular arc") {
  const SynthesisPlan plan = synthesize({0.0, 2.0, 0.0}, 1);
  CHECK(plan.total_length == doctest::Approx(2.0));
  REQUIRE(plan.arcs.size() == 1);
  CHECK(std::get<SingularArc>(plan.arcs[0]).duration == doctest::Approx(2.0));
}

TEST_CASE("synthesis on the problem-2 boundary is a bang or bang-bang plan") {
  const double t = 0.8;
  const SynthesisPlan plan = synthesize({t, t, t * t * t / 6.0}, 2);
  CHECK(plan.total_length == 0.0);
  REQUIRE(!plan.arcs.empty());
  CHECK(std::holds_alternative<BangArc>(plan.arcs[0]));
  // generic point of the upper graph z = z2(x, y): bang-bang with tau1 = (x+y)/2
  const SynthesisPlan p2 = synthesize({1.0, 0.0, z2_graph(1.0, 0.0)}, 2);
  CHECK(p2.total_length == 0.0);
  REQUIRE(p2.arcs.size() == 2);
  CHECK(std::get<BangArc>(p2.arcs[0]).duration == doctest::Approx(0.5));
}

TEST_CASE("interior synthesis is a single normal arc of length d") {
  std::mt19937_64 rng(17);
  for (int problem : {1, 2}) {
    const Point q = random_interior(problem, rng);
    const SynthesisPlan plan = synthesize(q, problem);
    REQUIRE(plan.arcs.size() == 1);
    const auto& arc = std::get<NormalArc>(plan.arcs[0]);
    CHECK(plan.total_length == doctest::Approx(distance(q, problem)));
    CHECK(arc.duration == doctest::Approx(plan.total_length));
    CHECK(dist(exp_map(arc.lam, arc.duration), q) < 1e-7);
  }
}

namespace {

// Independent replay of a plan: integrate each arc's control from the origin.
Point flow_plan(const std::vector<Arc>& arcs) {
  Point p{};
  for (const Arc& a : arcs)
    std::visit(
        [&p](const auto& arc) {
          using T = std::decay_t<decltype(arc)>;
          if constexpr (std::is_same_v<T, NormalArc>) {
            p = exp_map(arc.lam, arc.duration);  // normal arcs start at the origin
          } else if constexpr (std::is_same_v<T, BangArc>) {
            const double u1 = arc.control[0], u2 = arc.control[1], d = arc.duration;
            const double z =
                p.z + u2 * (p.x * p.x * d + p.x * u1 * d * d + u1 * u1 * d * d * d / 3) / 2;
            p = {p.x + u1 * d, p.y + u2 * d, z};
          } else {
            p = {p.x, p.y + arc.duration, p.z};
          }
        },
        a);
  return p;
}

}  // namespace

TEST_CASE("synthesized plans replay to their target point") {
  const Point targets1[] = {{0.0, 1.0, 1.0 / 24.0}, {0.3, 1.0, 0.0045},
                            {-0.3, 1.0, 0.0045},    {0.0, 2.0, 0.0},
                            {0.5, 1.0, (std::pow(1.5, 3) - 0.5) / 24.0},
                            {0.0, 1.0, 0.02},       {0.4, 1.0, 0.025}};
  for (const Point& q : targets1) {
    const SynthesisPlan plan = synthesize(q, 1);
    CHECK(dist(flow_plan(plan.arcs), q) < 1e-7);
    if (plan.alternate) CHECK(dist(flow_plan(*plan.alternate), q) < 1e-7);
  }
  const Point targets2[] = {{1.0, 0.0, z2_graph(1.0, 0.0)},
                            {1.0, 0.0, z1_graph(1.0, 0.0)},
                            {1.0, 0.4, z2_graph(1.0, 0.4)},
                            {1.0, -0.4, z1_graph(1.0, -0.4)},
                            {0.8, 0.8, 0.8 * 0.8 * 0.8 / 6.0},
                            {1.0, 0.2, 0.03}};
  for (const Point& q : targets2) {
    const SynthesisPlan plan = synthesize(q, 2);
    CHECK(dist(flow_plan(plan.arcs), q) < 1e-7);
  }
}

TEST_CASE("synthesis rejects unattainable targets") {
  CHECK_THROWS_AS(synthesize({0.0, -1.0, 0.0}, 1), std::domain_error);
  CHECK_THROWS_AS(synthesize({0.0, 1.0, 0.0}, 2), std::domain_error);
}

TEST_CASE("the distance has a first-kind discontinuity across S3") {
  // on the surface z = x^3/6 the value is y - |x| ...
  CHECK(distance({0.3, 1.0, 0.0045}, 1) == doctest::Approx(0.7));
  // ... while just below (outside the attainable set) it drops to 0
  const DistanceInfo below = distance_info({0.3, 1.0, 0.0045 - 1e-6}, 1);
  CHECK(below.value == 0.0);
  CHECK_FALSE(below.attainable);
  // approaching from inside, the distance decreases continuously to the value 0.7
  const double d3 = distance({0.3, 1.0, 0.0045 + 1e-3}, 1);
  const double d4 = distance({0.3, 1.0, 0.0045 + 1e-4}, 1);
  CHECK(d3 > d4);
  CHECK(d4 > 0.7);
  CHECK(d4 - 0.7 < 0.1);
}

TEST_CASE("sphere samples lie at distance R and carry consistent tags") {
  for (int problem : {1, 2}) {
    const auto cloud = sphere_sample(1.0, 48, problem);
    REQUIRE(static_cast<int>(cloud.size()) == 48);
    for (const auto& p : cloud) {
      const DistanceInfo info = distance_info(p.q, problem);
      CHECK(info.attainable);
      const bool abnormal_tag = p.tag == SphereTag::SaPlus ||
                                p.tag == SphereTag::SaMinus || p.tag == SphereTag::Sa0;
      if (abnormal_tag) {
        // abnormal strata of the sphere carry the boundary value d = tau1 = R
        CHECK(info.boundary_value);
        CHECK(info.value == doctest::Approx(1.0).epsilon(1e-9));
      } else {
        CHECK(std::abs(info.value - 1.0) < 1e-6);
      }
      if (p.tag == SphereTag::Sn0 || p.tag == SphereTag::Sa0)
        CHECK(p.q.x == doctest::Approx(0.0));
    }
  }
}

TEST_CASE("spheres are exactly equivariant under dilations") {
  const auto s1 = sphere_sample(1.0, 30, 1);
  const auto s2 = sphere_sample(2.0, 30, 1);
  REQUIRE(s1.size() == s2.size());
  for (std::size_t i = 0; i < s1.size(); ++i) {
    CHECK(s2[i].q.x == doctest::Approx(2.0 * s1[i].q.x).epsilon(1e-12));
    CHECK(s2[i].q.y == doctest::Approx(2.0 * s1[i].q.y).epsilon(1e-12));
    CHECK(s2[i].q.z == doctest::Approx(8.0 * s1[i].q.z).epsilon(1e-12));
    CHECK(s2[i].tag == s1[i].tag);
  }
}

TEST_CASE("sphere-plane curve matches the normalized Maxwell endpoint") {
  // k = 0 end of the curve is (y, z) = (1, 0)
  const auto [y0, z0] = sphere_pi_curve(0.0);
  CHECK(y0 == doctest::Approx(1.0));
  CHECK(z0 == doctest::Approx(0.0));
  for (double k = 0.05; k < 0.96; k += 0.1) {
    const Point m = detail::maxwell_point_base(k);
    const double t = detail::maxwell_time_base(k);
    const auto [y, z] = sphere_pi_curve(k);
    CHECK(std::abs(y - m.y / t) < 1e-9);
    CHECK(std::abs(z - m.z / (t * t * t)) < 1e-9);
  }
}

TEST_CASE("eta1 is a strictly increasing bijection from (0,1) onto (-1/24, 0)") {
  double prev = -1.0 / 24.0;
  for (double k = 0.02; k < 1.0; k += 0.02) {
    const double v = eta1(k);
    CHECK(v > prev);
    CHECK(v < 0.0);
    prev = v;
  }
  CHECK(eta1(1e-6) == doctest::Approx(-1.0 / 24.0).epsilon(1e-6));
  CHECK(std::abs(eta1(0.999999)) < 1e-3);
  // frozen reference values
  CHECK(std::abs(eta1(0.3) - -0.033236870594397416) < 1e-14);
  CHECK(std::abs(eta1(0.7) - -0.00924850259597195592) < 1e-14);
}

TEST_CASE("Jacobian diagnostics are strictly negative on the optimal band") {
  for (double tau = 0.01; tau <= std::acos(-1.0) + 1e-12; tau += 0.01) {
    const double J0 = std::cos(3 * tau) + (8 * tau * tau - 1) * std::cos(tau) -
                      4 * tau * std::sin(tau);
    CHECK(J0 < 0.0);
  }
  for (double k = 0.001; k < 0.9995; k += 0.005) {
    const auto [J0, g] = jacobian_diag(0.5, k);
    CHECK(g < 0.0);
  }
  // frozen reference value of g
  CHECK(std::abs(jacobian_diag(0.5, 0.5).second - -0.6627888502335830199962542) < 1e-14);
}
