#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "spherepoly/montecarlo.hpp"
#include "spherepoly/polynomial_io.hpp"
#include "spherepoly/selfcheck.hpp"

using namespace spherepoly;

namespace {
Polynomial X(VarIndex i, Exponent e = 1) { return Polynomial::variable(i, e); }
}  // namespace

TEST_CASE("sphere sampler emits points of the requested radius") {
  SphereSampler sampler(6, 2.5, 99);
  std::vector<double> point;
  for (int i = 0; i < 200; ++i) {
    sampler.next(point);
    REQUIRE(point.size() == 6);
    double norm_sq = 0.0;
    for (const double x : point) norm_sq += x * x;
    CHECK(std::fabs(std::sqrt(norm_sq) - 2.5) < 1e-9 * 2.5);
  }
}

TEST_CASE("dimension one sampling hits the two-point sphere") {
  SphereSampler sampler(1, 3.0, 7);
  std::vector<double> point;
  for (int i = 0; i < 50; ++i) {
    sampler.next(point);
    CHECK(std::fabs(std::fabs(point[0]) - 3.0) < 1e-12);
  }
}

TEST_CASE("identical seeds give identical streams") {
  SphereSampler a(4, 1.0, 1234), b(4, 1.0, 1234);
  std::vector<double> pa, pb;
  for (int i = 0; i < 100; ++i) {
    a.next(pa);
    b.next(pb);
    CHECK(pa == pb);
  }
  const SphereSpec s(5, Rational(5));
  const auto e1 = mc_sphere_integral(X(1, 2), s, 5000, 77);
  const auto e2 = mc_sphere_integral(X(1, 2), s, 5000, 77);
  CHECK(e1.mean == e2.mean);
  CHECK(e1.standard_error == e2.standard_error);
}

TEST_CASE("constant integrand is exact with zero error") {
  const auto est = mc_sphere_integral(Polynomial(1), SphereSpec(3, Rational(3)), 1000, 5);
  CHECK(est.mean == 1.0);
  CHECK(est.standard_error == 0.0);
}

TEST_CASE("simple estimates agree with exact values") {
  const SphereSpec s(10, Rational(10));
  const auto odd = mc_sphere_integral(X(1), s, 20000, 11);
  CHECK(std::fabs(odd.mean) <= 5.0 * odd.standard_error);

  const auto sq = mc_sphere_integral(X(1, 2), s, 100000, 42);
  CHECK(std::fabs(sq.mean - 1.0) <= 5.0 * sq.standard_error);
}

TEST_CASE("mc_check compares against the exact pairing") {
  CHECK(mc_check(Polynomial(1), Polynomial(1), SphereSpec(4, Rational(4)), 100, 3).pass);
  const auto report = mc_check(X(1, 2), X(1, 2), SphereSpec(8, Rational(8)), 50000, 21);
  CHECK(report.exact == Rational(12, 5));
  CHECK(report.pass);
  CHECK(mc_check(X(1), X(2), SphereSpec(6, Rational(6)), 20000, 31).pass);
}

TEST_CASE("builtin calibration suite passes at reduced sample count") {
  const auto results = mc_suite(42, 20000);
  REQUIRE(results.size() == 20);
  int passed = 0;
  for (const auto& r : results) passed += r.pass ? 1 : 0;
  CHECK(passed >= 19);
}
