#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "spherepoly/polynomial_io.hpp"
#include "spherepoly/selfcheck.hpp"
#include "spherepoly/sphere_laplacian.hpp"

using namespace spherepoly;

namespace {
Polynomial X(VarIndex i, Exponent e = 1) { return Polynomial::variable(i, e); }

Polynomial slap(const Polynomial& p, const SphereSpec& s) { return sphere_laplacian(p, s).value; }
}  // namespace

TEST_CASE("spherical laplacian on powers of x1") {
  for (int N = 3; N <= 12; ++N) {
    const SphereSpec s(N, Rational(N));
    for (int m = 0; m <= 8; ++m) {
      const Polynomial expected =
          Rational(-m) * (Polynomial(1) - Polynomial(Rational(1, N))) * X(1, m) +
          Rational(long(m) * (m - 1)) *
              (Polynomial(1) - Rational(1, N) * X(1, 2)) * X(1, m >= 2 ? m - 2 : 0);
      CHECK(slap(X(1, m), s) == expected);
    }
  }
}

TEST_CASE("spherical laplacian on a cross term") {
  for (const auto& a2 : {Rational(10), Rational(7, 3)}) {
    const SphereSpec s(10, a2);
    const Polynomial f = X(1) * X(2);
    CHECK(slap(f, s) == Rational(-20) / a2 * f);
    // oracle: a^2 Delta_S f is the Casimir mod the sphere ideal
    CHECK(reduce_mod_sphere(casimir(f, AmbientDim(10)) - a2 * slap(f, s), s).remainder.is_zero());
  }
  CHECK(slap(Polynomial(3), SphereSpec(5, Rational(5))).is_zero());
}

TEST_CASE("spherical laplacian falls back to the casimir at full dimension") {
  const SphereSpec s(3, Rational(2));
  const Polynomial p = X(3, 2) + X(1);
  CHECK(slap(p, s) == Rational(1) / s.a2 * casimir(p, AmbientDim(3)));
}

TEST_CASE("hermite operator") {
  CHECK(hermite_operator(X(1, 2)) == Polynomial(2) - Rational(2) * X(1, 2));
  const Polynomial h3 = X(1, 3) - Rational(3) * X(1);
  CHECK(hermite_operator(h3) == Rational(-3) * h3);
  CHECK(hermite_operator(X(1) * X(2)) == Rational(-2) * (X(1) * X(2)));
  CHECK(hermite_operator(Polynomial(4)).is_zero());
}

TEST_CASE("hermite eigenrelation for low orders") {
  // H_{m+1} = X H_m - m H_{m-1}; each H_m satisfies  H H_m = -m H_m.
  Polynomial prev(1), cur = X(1);
  for (int m = 1; m <= 6; ++m) {
    CHECK(hermite_operator(cur) == Rational(-m) * cur);
    Polynomial next = X(1) * cur - Rational(m) * prev;
    prev = cur;
    cur = next;
  }
}

TEST_CASE("limit error examples") {
  CHECK(slap_limit_error(X(1), AmbientDim(10)) == Rational(1, 10));
  CHECK(slap_limit_error(Polynomial(2), AmbientDim(5)) == Rational(0));
  // For x1^2 the two 1/N corrections cancel exactly: the coefficient of x1^2
  // in Delta_S(x1^2) is -2(1-1/N) - 2/N = -2, so the gap to H x1^2 is zero.
  CHECK(slap(X(1, 2), SphereSpec(100, Rational(100))) ==
        Polynomial(2) - Rational(2) * X(1, 2));
  CHECK(slap_limit_error(X(1, 2), AmbientDim(100)) == Rational(0));
}

TEST_CASE("oracle equivalence with the casimir on a random corpus") {
  std::mt19937_64 rng(321);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 3;
    const int N = n + 1 + trial % 5;
    const SphereSpec s(N, trial % 2 == 0 ? Rational(N) : Rational(3, 2));
    const Polynomial p = random_polynomial(rng, n, 5);
    const Polynomial value = slap(p, s);
    CHECK(static_cast<int>(value.max_variable()) <= n);
    CHECK(reduce_mod_sphere(casimir(p, AmbientDim(N)) - s.a2 * value, s).remainder.is_zero());
  }
}

TEST_CASE("linearity and self-adjointness") {
  std::mt19937_64 rng(654);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 2;
    const int N = n + 2 + trial % 4;
    const SphereSpec s(N, Rational(N));
    const Polynomial p = random_polynomial(rng, n, 5);
    const Polynomial q = random_polynomial(rng, n, 5);
    CHECK(slap(Rational(3, 7) * p - Rational(2) * q, s) ==
          Rational(3, 7) * slap(p, s) - Rational(2) * slap(q, s));
    CHECK(sphere_inner(slap(p, s), q, s) == sphere_inner(p, slap(q, s), s));
  }
}

TEST_CASE("product rule on disjoint homogeneous factors") {
  const SphereSpec s(9, Rational(9));
  const Polynomial p = X(1, 2) * X(2);  // degree 3 in x1, x2
  const Polynomial q = X(3, 2);         // degree 2 in x3
  const Polynomial lhs = slap(p * q, s);
  const Polynomial rhs =
      slap(p, s) * q - Rational(2 * 3 * 2) / s.a2 * (p * q) + p * slap(q, s);
  CHECK(lhs == rhs);
}

TEST_CASE("convergence of the spherical laplacian to the hermite operator") {
  const std::vector<Polynomial> suite = {X(1), X(1, 3), X(1, 2) * X(2, 2), X(1) * X(2) * X(3)};
  for (const Polynomial& p : suite) {
    Rational prev;
    for (int N = 16; N <= 256; N *= 2) {
      const Rational err = slap_limit_error(p, AmbientDim(N));
      if (N > 16) CHECK(err <= prev * Rational(3, 4));
      // coefficient gaps are rational with denominator dividing N(N+2),
      // and err * N stays bounded
      CHECK((err * Rational(N) * Rational(N + 2)).is_integer());
      CHECK(err * Rational(N) <= Rational(20));
      prev = err;
    }
  }
  // the N-indexed middle term of the product rule has coefficient 2 d_p d_q / N
  const SphereSpec s(50, Rational(50));
  const Polynomial p = X(1, 2), q = X(2, 3);
  const Polynomial middle =
      slap(p * q, s) - slap(p, s) * q - p * slap(q, s);
  CHECK(middle == Rational(-2 * 2 * 3, 50) * (p * q));
}
