#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "slmart/oracle.hpp"

using namespace slmart;

TEST_CASE("brute force recovers the singular-ray distance and structure") {
  const OracleResult r = brute_distance_result({0.0, 1.0, 0.0}, 1);
  CHECK(r.feasible);
  CHECK(r.length == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.family == "singular");
}

TEST_CASE("brute force finds lightlike bang-bang plans on the null strata") {
  // upper corner of the problem-1 cross-section: reached by bang-bang, length 0
  const OracleResult r1 = brute_distance_result({0.0, 1.0, 1.0 / 24.0}, 1);
  CHECK(r1.feasible);
  CHECK(r1.length == doctest::Approx(0.0));
  // problem-2 boundary graph: the endpoint ball allows a small positive length,
  // so judge it the way verify_point does
  const Point q2{0.8, 0.8, 0.8 * 0.8 * 0.8 / 6.0};
  const OracleResult r2 = brute_distance_result(q2, 2);
  CHECK(r2.feasible);
  CHECK(r2.length < 0.05);
  CHECK(verify_point(q2, 2).pass);
}

TEST_CASE("brute force reports unattainable targets as infeasible") {
  CHECK_FALSE(brute_distance_result({0.0, -1.0, 0.0}, 1).feasible);
  CHECK_FALSE(brute_distance_result({0.0, 1.0, 0.0}, 2).feasible);
}

TEST_CASE("brute force approaches the analytic distance at interior points") {
  for (int problem : {1, 2}) {
    const Covector lam{1.0, 0.5, problem};
    const Point q = exp_map(lam, 0.5);
    const double analytic = distance(q, problem);
    const OracleResult r = brute_distance_result(q, problem);
    CHECK(r.feasible);
    CHECK(r.family == "normal");
    CHECK(std::abs(r.length - analytic) < 0.01 * analytic + 1e-3);
  }
}

TEST_CASE("verify_point passes on interior, boundary, and outside targets") {
  CHECK(verify_point({0.0, 1.0, 0.0}, 1).pass);
  CHECK(verify_point({0.3, 1.0, 0.0045}, 1).pass);  // S3: boundary value 0.7
  CHECK(verify_point({0.0, -1.0, 0.0}, 1).pass);    // outside: infeasible
  CHECK(verify_point(exp_map({-0.8, -1.0, 1}, 0.6), 1).pass);
  CHECK(verify_point(exp_map({0.7, 2.0, 2}, 0.3), 2).pass);
}

TEST_CASE("piecewise-constant refinement is monotone and never exceeds d") {
  const Point q = exp_map({0.9, -0.7, 1}, 0.8);
  const double analytic = distance(q, 1);
  OracleConfig cfg;
  cfg.structure = OracleConfig::Structure::PiecewiseConstant;
  double prev = -1.0;
  for (int n : {2, 4, 6}) {
    cfg.n_pieces = n;
    const OracleResult r = brute_distance_result(q, 1, cfg);
    CHECK(r.feasible);
    CHECK(r.length >= prev - 1e-12);        // refinement never loses ground
    CHECK(r.length <= analytic + 2e-3);     // length stays a lower bound up to slack
    prev = r.length;
  }
  CHECK(std::abs(prev - analytic) < 0.05 * analytic + 2e-3);
}

TEST_CASE("the oracle lower bound respects dilation normalization") {
  // the same point at very different scales gives consistent relative answers
  const Point q = exp_map({0.6, 1.3, 1}, 0.5);
  for (double a : {0.05, 20.0}) {
    const Point qa = dilate(q, a);
    const OracleResult r = brute_distance_result(qa, 1);
    CHECK(r.feasible);
    CHECK(std::abs(r.length - distance(qa, 1)) < 0.01 * distance(qa, 1) + 1e-3 * a);
  }
}
