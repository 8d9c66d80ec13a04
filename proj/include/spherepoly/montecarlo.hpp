#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "spherepoly/pairing.hpp"
#include "spherepoly/polynomial.hpp"

namespace spherepoly {

/// Monte Carlo estimate of a spherical integral.
struct MCEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Deterministic stream of uniform points on S^{N-1}(a): standard normal
/// vectors (mt19937_64 + Box-Muller) normalized to radius a.  Identical
/// seeds give bit-identical streams.
class SphereSampler {
 public:
  SphereSampler(int dimension, double radius, std::uint64_t seed)
      : dimension_(dimension), radius_(radius), rng_(seed) {
    if (dimension < 1) throw std::invalid_argument("SphereSampler: dimension must be >= 1");
    if (!(radius > 0.0)) throw std::invalid_argument("SphereSampler: radius must be positive");
  }

  void next(std::vector<double>& point) {
    point.resize(static_cast<std::size_t>(dimension_));
    for (;;) {
      double norm_sq = 0.0;
      for (double& x : point) {
        x = next_normal();
        norm_sq += x * x;
      }
      if (norm_sq > 0.0) {
        const double scale = radius_ / std::sqrt(norm_sq);
        for (double& x : point) x *= scale;
        return;
      }
    }
  }

 private:
  double uniform01() {  // [0, 1), 53-bit resolution
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  }

  double next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.141592653589793238462643383279502884 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  int dimension_;
  double radius_;
  std::mt19937_64 rng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Sample mean and standard error of p over the uniform measure on
/// S^{N-1}(a), with Welford accumulation.
inline MCEstimate mc_sphere_integral(const Polynomial& p, const SphereSpec& s,
                                     std::uint64_t samples, std::uint64_t seed) {
  require_within_dimension(p, s.dimension, "mc_sphere_integral");
  if (samples < 1) throw std::invalid_argument("mc_sphere_integral: need at least one sample");
  SphereSampler sampler(s.dimension, std::sqrt(s.a2.to_double()), seed);
  std::vector<double> point;
  double mean = 0.0, m2 = 0.0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    sampler.next(point);
    const double value = evaluate(p, point);
    const double delta = value - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (value - mean);
  }
  MCEstimate est;
  est.mean = mean;
  est.samples = samples;
  est.seed = seed;
  if (samples > 1) {
    const double sample_var = m2 / static_cast<double>(samples - 1);
    est.standard_error = std::sqrt(std::max(sample_var, 0.0) / static_cast<double>(samples));
  }
  return est;
}

/// Exact-vs-Monte-Carlo comparison of <p, q> on S^{N-1}(a).
struct MCCheckReport {
  MCEstimate estimate;
  Rational exact;
  double z_threshold = 5.0;
  bool pass = false;
};

inline MCCheckReport mc_check(const Polynomial& p, const Polynomial& q, const SphereSpec& s,
                              std::uint64_t samples, std::uint64_t seed, double z = 5.0) {
  MCCheckReport report;
  report.exact = sphere_inner(p, q, s);
  report.estimate = mc_sphere_integral(p * q, s, samples, seed);
  report.z_threshold = z;
  const double gap = std::fabs(report.estimate.mean - report.exact.to_double());
  report.pass = gap <= z * report.estimate.standard_error;
  return report;
}

/// One case of the built-in calibration suite.
struct MCCase {
  std::string name;
  Polynomial p, q;
  SphereSpec spec;
};

/// Twenty fixed exact-vs-MC comparisons spanning dimensions, radii and
/// degrees; at 1e5 samples and z = 5 at least 19 are expected to pass.
inline std::vector<MCCase> builtin_mc_suite() {
  const auto X = [](VarIndex i, Exponent e = 1) { return Polynomial::variable(i, e); };
  std::vector<MCCase> cases;
  cases.push_back({"<1,1> N=5 a2=5", Polynomial(1), Polynomial(1), SphereSpec(5, Rational(5))});
  cases.push_back({"<x1,x1> N=5 a2=5", X(1), X(1), SphereSpec(5, Rational(5))});
  cases.push_back({"<x1,x2> N=5 a2=5", X(1), X(2), SphereSpec(5, Rational(5))});
  cases.push_back({"<x1^2,x1^2> N=8 a2=8", X(1, 2), X(1, 2), SphereSpec(8, Rational(8))});
  cases.push_back({"<x1^2,x1^2> N=10 a2=10", X(1, 2), X(1, 2), SphereSpec(10, Rational(10))});
  cases.push_back({"<x1,x1^2> N=6 a2=6", X(1), X(1, 2), SphereSpec(6, Rational(6))});
  cases.push_back({"<x1^2,x2^2> N=7 a2=7", X(1, 2), X(2, 2), SphereSpec(7, Rational(7))});
  cases.push_back({"<x1*x2,x1*x2> N=6 a2=6", X(1) * X(2), X(1) * X(2), SphereSpec(6, Rational(6))});
  cases.push_back({"<x1^3,x1^3> N=6 a2=6", X(1, 3), X(1, 3), SphereSpec(6, Rational(6))});
  cases.push_back({"<x1^2-1,x1^2-1> N=9 a2=9", X(1, 2) - Polynomial(1), X(1, 2) - Polynomial(1),
                   SphereSpec(9, Rational(9))});
  cases.push_back({"<x1*x2^2,x1*x2^2> N=5 a2=5", X(1) * X(2, 2), X(1) * X(2, 2),
                   SphereSpec(5, Rational(5))});
  cases.push_back({"<x1+x2,x1-x2> N=7 a2=7", X(1) + X(2), X(1) - X(2), SphereSpec(7, Rational(7))});
  cases.push_back({"<x1^2+x2^2,1> N=4 a2=4", X(1, 2) + X(2, 2), Polynomial(1),
                   SphereSpec(4, Rational(4))});
  cases.push_back({"<x1,x1^3> N=8 a2=8", X(1), X(1, 3), SphereSpec(8, Rational(8))});
  cases.push_back({"<x1^2*x2,x2> N=10 a2=10", X(1, 2) * X(2), X(2), SphereSpec(10, Rational(10))});
  cases.push_back({"<x1^2*x2^2*x3^2,1> N=6 a2=6", X(1, 2) * X(2, 2) * X(3, 2), Polynomial(1),
                   SphereSpec(6, Rational(6))});
  cases.push_back({"<x1^4,1> N=9 a2=9", X(1, 4), Polynomial(1), SphereSpec(9, Rational(9))});
  cases.push_back({"<x1^4,x1^4> N=8 a2=8", X(1, 4), X(1, 4), SphereSpec(8, Rational(8))});
  cases.push_back({"<x2^3,x2> N=12 a2=1", X(2, 3), X(2), SphereSpec(12, Rational(1))});
  cases.push_back({"<x1-x2^2,x1> N=5 a2=5/2", X(1) - X(2, 2), X(1), SphereSpec(5, Rational(5, 2))});
  return cases;
}

}  // namespace spherepoly
