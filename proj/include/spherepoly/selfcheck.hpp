#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "spherepoly/harmonic.hpp"
#include "spherepoly/limits.hpp"
#include "spherepoly/montecarlo.hpp"
#include "spherepoly/operators.hpp"
#include "spherepoly/orthogonal.hpp"
#include "spherepoly/pairing.hpp"
#include "spherepoly/polynomial.hpp"
#include "spherepoly/sphere_laplacian.hpp"

namespace spherepoly {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Deterministic random polynomial: up to `max_terms` terms over
/// X_1..X_{max_var}, total degree <= max_deg, small rational coefficients.
inline Polynomial random_polynomial(std::mt19937_64& rng, int max_var, int max_deg,
                                    int max_terms = 5) {
  std::uniform_int_distribution<int> term_count(1, max_terms);
  std::uniform_int_distribution<int> deg_dist(0, max_deg);
  std::uniform_int_distribution<int> var_dist(1, max_var);
  std::uniform_int_distribution<long> num_dist(-9, 9);
  std::uniform_int_distribution<long> den_dist(1, 4);
  Polynomial p;
  const int terms = term_count(rng);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    const int degree = deg_dist(rng);
    for (int i = 0; i < degree; ++i) {
      const auto var = static_cast<VarIndex>(var_dist(rng));
      m = m.with_exponent(var, m.exponent_of(var) + 1);
    }
    long num = num_dist(rng);
    if (num == 0) num = 1;
    p.add_term(m, Rational(num, den_dist(rng)));
  }
  return p;
}

namespace detail {

class IdentitySuite {
 public:
  explicit IdentitySuite(std::uint64_t seed) : rng_(seed) {}

  std::vector<CheckResult> run() {
    results_.clear();
    casimir_identity();
    operator_commutations();
    adjointness();
    euler_and_casimir_eigenvalues();
    harmonic_division();
    la_properties();
    slap_oracle();
    zonal_checks();
    pairing_scaling();
    projection_checks();
    return results_;
  }

 private:
  void record(const std::string& name, bool pass, const std::string& detail = "") {
    results_.push_back({name, pass, detail});
  }

  Polynomial random_poly(int max_var, int max_deg) {
    return random_polynomial(rng_, max_var, max_deg);
  }

  // ||X||^2 Delta_N = (r d_r)^2 + (N-2) r d_r + ||M||^2 on a random corpus.
  void casimir_identity() {
    bool ok = true;
    for (int trial = 0; trial < 40 && ok; ++trial) {
      const int N = 2 + trial % 5;
      const Polynomial p = random_poly(N, 6);
      const AmbientDim ambient(N);
      const Polynomial lhs = norm_sq_times(laplacian(p, ambient), ambient);
      const Polynomial rhs =
          euler(euler(p)) + Rational(long(N) - 2) * euler(p) + casimir(p, ambient);
      ok = lhs == rhs;
    }
    record("casimir_identity", ok);
  }

  void operator_commutations() {
    bool lap_ok = true, norm_ok = true, antisym_ok = true;
    for (int trial = 0; trial < 40; ++trial) {
      const int N = 2 + trial % 5;
      const AmbientDim ambient(N);
      const Polynomial p = random_poly(N, 6);
      const VarIndex j = 1 + trial % N, k = 1 + (trial + 1) % N;
      if (j == k) continue;
      lap_ok = lap_ok && laplacian(apply_Mjk(j, k, p), ambient) ==
                             apply_Mjk(j, k, laplacian(p, ambient));
      norm_ok = norm_ok && norm_sq_times(apply_Mjk(j, k, p), ambient) ==
                               apply_Mjk(j, k, norm_sq_times(p, ambient));
      antisym_ok = antisym_ok && apply_Mjk(k, j, p) == Rational(-1) * apply_Mjk(j, k, p);
    }
    record("laplacian_commutes_with_Mjk", lap_ok);
    record("norm_sq_commutes_with_Mjk", norm_ok);
    record("Mjk_antisymmetry", antisym_ok);
  }

  void adjointness() {
    bool skew_ok = true, casimir_ok = true, hermite_ok = true;
    for (int trial = 0; trial < 25; ++trial) {
      const int m = 2 + trial % 3;          // polynomials in X_1..X_m
      const int N = m + 1 + trial % 3;      // strictly larger sphere dimension
      const SphereSpec s(N, Rational(1 + trial % 4));
      const AmbientDim ambient(N);
      const Polynomial p = random_poly(m, 5);
      const Polynomial q = random_poly(m, 5);
      skew_ok = skew_ok && sphere_inner(apply_Mjk(1, 2, p), q, s) ==
                               Rational(-1) * sphere_inner(p, apply_Mjk(1, 2, q), s);
      casimir_ok = casimir_ok && sphere_inner(casimir(p, ambient), q, s) ==
                                     sphere_inner(p, casimir(q, ambient), s);
      hermite_ok = hermite_ok && hermite_inner(laplacian(p, ambient), q) ==
                                     hermite_inner(p, norm_sq_times(q, ambient));
    }
    record("Mjk_skew_adjoint_sphere", skew_ok);
    record("casimir_self_adjoint_sphere", casimir_ok);
    record("laplacian_adjoint_hermite", hermite_ok);
  }

  void euler_and_casimir_eigenvalues() {
    bool euler_ok = true, eigen_ok = true;
    for (int trial = 0; trial < 30; ++trial) {
      const int N = 2 + trial % 5;
      const AmbientDim ambient(N);
      const Polynomial p = random_poly(N, 6);
      for (const auto& [d, comp] : homogeneous_components(p))
        euler_ok = euler_ok && euler(comp) == Rational(long(d)) * comp;
      const auto [p0, q] = harmonic_decompose(p, ambient);
      for (const auto& [d, comp] : homogeneous_components(p0))
        eigen_ok = eigen_ok &&
                   casimir(comp, ambient) == Rational(-long(d) * (long(d) + N - 2)) * comp;
    }
    record("euler_eigenvalue", euler_ok);
    record("casimir_eigenvalue_on_harmonics", eigen_ok);
  }

  void harmonic_division() {
    bool harmonic_ok = true, reassemble_ok = true;
    for (int trial = 0; trial < 30; ++trial) {
      const int N = 2 + trial % 5;
      const AmbientDim ambient(N);
      const Polynomial p = random_poly(N, 6);
      const auto [p0, q] = harmonic_decompose(p, ambient);
      harmonic_ok = harmonic_ok && laplacian(p0, ambient).is_zero();
      reassemble_ok = reassemble_ok && p0 + norm_sq_times(q, ambient) == p;
      const auto expansion = base_r2_expansion(p, ambient);
      Polynomial sum;
      for (std::size_t i = 0; i < expansion.components.size(); ++i) {
        harmonic_ok = harmonic_ok && laplacian(expansion.components[i], ambient).is_zero();
        sum += pow(norm_sq_poly(N), static_cast<unsigned>(i)) * expansion.components[i];
      }
      reassemble_ok = reassemble_ok && sum == p;
    }
    record("harmonic_decomposition", harmonic_ok);
    record("base_r2_reassembly", reassemble_ok);
  }

  void la_properties() {
    bool idem_ok = true, kernel_ok = true, commute_ok = true, selfadj_ok = true;
    for (int trial = 0; trial < 20; ++trial) {
      const int N = 2 + trial % 5;
      const SphereSpec s(N, trial % 2 == 0 ? Rational(long(N)) : Rational(1 + trial % 3));
      const Polynomial p = random_poly(N, 5);
      const Polynomial lp = la_project(p, s);
      idem_ok = idem_ok && la_project(lp, s) == lp;
      kernel_ok = kernel_ok && reduce_mod_sphere(p - lp, s).remainder.is_zero();
      const Polynomial member =
          (norm_sq_poly(N) - Polynomial(s.a2)) * random_poly(N, 3);
      kernel_ok = kernel_ok && la_project(member, s).is_zero();
      if (N >= 2)
        commute_ok = commute_ok &&
                     la_project(apply_Mjk(1, 2, p), s) == apply_Mjk(1, 2, la_project(p, s));
      const Polynomial q = random_poly(N, 5);
      selfadj_ok = selfadj_ok && sphere_inner(lp, q, s) == sphere_inner(p, la_project(q, s), s);
    }
    record("la_idempotent", idem_ok);
    record("la_kernel_is_sphere_ideal", kernel_ok);
    record("la_commutes_with_Mjk", commute_ok);
    record("la_self_adjoint", selfadj_ok);
  }

  void slap_oracle() {
    bool oracle_ok = true, linear_ok = true, selfadj_ok = true;
    for (int trial = 0; trial < 25; ++trial) {
      const int n = 1 + trial % 3;
      const int N = n + 1 + trial % 4;
      const SphereSpec s(N, trial % 2 == 0 ? Rational(long(N)) : Rational(2 + trial % 3));
      const AmbientDim ambient(N);
      const Polynomial p = random_poly(n, 5);
      const Polynomial value = sphere_laplacian(p, s).value;
      oracle_ok = oracle_ok &&
                  reduce_mod_sphere(casimir(p, ambient) - s.a2 * value, s).remainder.is_zero();
      const Polynomial q = random_poly(n, 5);
      const Polynomial combo = Rational(2, 3) * p + Rational(-5, 2) * q;
      linear_ok = linear_ok &&
                  sphere_laplacian(combo, s).value ==
                      Rational(2, 3) * value + Rational(-5, 2) * sphere_laplacian(q, s).value;
      selfadj_ok = selfadj_ok && sphere_inner(value, q, s) ==
                                     sphere_inner(p, sphere_laplacian(q, s).value, s);
    }
    record("slap_matches_casimir_mod_ideal", oracle_ok);
    record("slap_linear", linear_ok);
    record("slap_self_adjoint", selfadj_ok);
  }

  void zonal_checks() {
    bool ode_ok = true, gegen_ok = true, harmonic_ok = true;
    for (int N = 2; N <= 7; ++N) {
      for (int m = 0; m <= 5; ++m) {
        const SphereSpec s(N, Rational(long(N)));
        const Polynomial q = zonal_poly(m, s);
        const Polynomial x = Polynomial::variable(1);
        const Polynomial lhs =
            (Polynomial(s.a2) - x * x) * partial_derivative(1, partial_derivative(1, q)) -
            Rational(long(N) - 1) * x * partial_derivative(1, q) +
            Rational(long(m) * (long(m) + N - 2)) * q;
        ode_ok = ode_ok && lhs.is_zero();
        gegen_ok = gegen_ok && q == scaled_gegenbauer(m, s);
        const Polynomial zh = zonal_harmonic(m, s);
        harmonic_ok = harmonic_ok && laplacian(zh, AmbientDim(N)).is_zero() &&
                      (zh.is_zero() || (is_homogeneous(zh) && zh.degree() == m));
      }
    }
    record("zonal_ode", ode_ok);
    record("zonal_matches_gegenbauer", gegen_ok);
    record("zonal_harmonic_homogeneous_harmonic", harmonic_ok);
  }

  // a^m C_m^{((N-2)/2)}(X/a) expressed through a^2 only (same-parity powers).
  static Polynomial scaled_gegenbauer(int m, const SphereSpec& s) {
    const Polynomial c = gegenbauer_monic(Rational(long(s.dimension) - 2, 2), m);
    Polynomial out;
    for (const auto& [mono, coeff] : c.terms()) {
      const int k = mono.total_degree();
      out.add_term(mono, coeff * pow(s.a2, static_cast<unsigned long>((m - k) / 2)));
    }
    return out;
  }

  void pairing_scaling() {
    bool ok = true;
    std::uniform_int_distribution<int> deg_dist(0, 4);
    for (int trial = 0; trial < 60 && ok; ++trial) {
      const int k = 1 + trial % 3;
      const int N = k + 1 + trial % 6;
      Monomial mf, mg;
      std::uniform_int_distribution<int> var_dist(1, k);
      for (int i = deg_dist(rng_); i > 0; --i) {
        const auto v = static_cast<VarIndex>(var_dist(rng_));
        mf = mf.with_exponent(v, mf.exponent_of(v) + 1);
      }
      for (int i = deg_dist(rng_); i > 0; --i) {
        const auto v = static_cast<VarIndex>(var_dist(rng_));
        mg = mg.with_exponent(v, mg.exponent_of(v) + 1);
      }
      const Polynomial f = Polynomial::monomial(mf, Rational(1));
      const Polynomial g = Polynomial::monomial(mg, Rational(1));
      const int total = mf.total_degree() + mg.total_degree();
      const SphereSpec s(N, Rational(long(N)));
      if (total % 2 == 1) {
        ok = gaussian_inner(f, g).is_zero() && sphere_inner(f, g, s).is_zero();
      } else {
        ok = gaussian_inner(f, g) == adN_factor(total / 2, N) * sphere_inner(f, g, s);
      }
    }
    record("gaussian_equals_scaled_sphere_pairing", ok);
  }

  void projection_checks() {
    bool consistent_ok = true, commute_ok = true;
    for (const Monomial& m : monomial_basis_upto(4, 2)) {
      const Polynomial p = Polynomial::monomial(m, Rational(1));
      consistent_ok = consistent_ok && gauss_projection_complement(p, 4, 2) ==
                                           gauss_projection_complement(p, 4, 3);
      const auto project = [](const Polynomial& r) {
        return r - gauss_projection_complement(r, 4, 2);
      };
      commute_ok = commute_ok &&
                   hermite_operator(project(p)) == project(hermite_operator(p));
    }
    record("gauss_projection_consistency", consistent_ok);
    record("hermite_operator_commutes_with_projection", commute_ok);
  }

  std::mt19937_64 rng_;
  std::vector<CheckResult> results_;
};

}  // namespace detail

/// Exact-identity battery over a seeded random corpus; every check must pass.
inline std::vector<CheckResult> identity_suite(std::uint64_t seed = 2024) {
  return detail::IdentitySuite(seed).run();
}

/// Built-in Monte Carlo calibration: each case compares the exact spherical
/// pairing against a seeded MC estimate at the 5-sigma level.
inline std::vector<CheckResult> mc_suite(std::uint64_t seed, std::uint64_t samples) {
  std::vector<CheckResult> results;
  std::uint64_t case_seed = seed;
  for (const MCCase& c : builtin_mc_suite()) {
    const MCCheckReport report = mc_check(c.p, c.q, c.spec, samples, case_seed++);
    std::string detail = "mean=" + std::to_string(report.estimate.mean) +
                         " se=" + std::to_string(report.estimate.standard_error) +
                         " exact=" + report.exact.str();
    results.push_back({c.name, report.pass, std::move(detail)});
  }
  return results;
}

}  // namespace spherepoly
