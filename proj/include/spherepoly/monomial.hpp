#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace spherepoly {

using VarIndex = std::uint32_t;  // 1-based, matching X_1, X_2, ...
using Exponent = std::uint32_t;

namespace detail {
inline std::atomic<Exponent>& exponent_limit_storage() {
  static std::atomic<Exponent> limit{1u << 16};
  return limit;
}
}  // namespace detail

/// Largest exponent a monomial may carry; exceeding it throws.  Guards
/// against runaway computations.
inline Exponent exponent_limit() { return detail::exponent_limit_storage().load(); }
inline void set_exponent_limit(Exponent limit) { detail::exponent_limit_storage().store(limit); }

/// A monomial X_1^{e_1} X_2^{e_2} ...: a sparse exponent multi-index.
/// Zero exponents are never stored; the empty monomial is 1.
class Monomial {
 public:
  using Factor = std::pair<VarIndex, Exponent>;

  Monomial() = default;

  static Monomial variable(VarIndex index, Exponent exp = 1) {
    Monomial m;
    m.set_exponent(index, exp);
    return m;
  }

  bool is_constant() const { return factors_.empty(); }

  Exponent exponent_of(VarIndex index) const {
    const auto it = find(index);
    return it != factors_.end() && it->first == index ? it->second : 0;
  }

  int total_degree() const {
    long d = 0;
    for (const auto& [i, e] : factors_) d += e;
    return static_cast<int>(d);
  }

  VarIndex max_variable() const { return factors_.empty() ? 0 : factors_.back().first; }

  /// Sorted (variable, exponent) pairs, all exponents positive.
  const std::vector<Factor>& factors() const { return factors_; }

  /// Copy with the exponent of one variable replaced (0 removes it).
  Monomial with_exponent(VarIndex index, Exponent exp) const {
    Monomial m = *this;
    m.set_exponent(index, exp);
    return m;
  }

  Monomial times(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin(), b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
      if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
        out.factors_.push_back(*a++);
      } else if (a == factors_.end() || b->first < a->first) {
        out.factors_.push_back(*b++);
      } else {
        const std::uint64_t e = std::uint64_t(a->second) + b->second;
        if (e > exponent_limit()) throw std::overflow_error("monomial exponent limit exceeded");
        out.factors_.emplace_back(a->first, static_cast<Exponent>(e));
        ++a, ++b;
      }
    }
    return out;
  }

  /// Graded lexicographic comparison: total degree first, then earlier
  /// variables with higher exponents rank higher.  Returns -1, 0 or 1.
  static int compare(const Monomial& a, const Monomial& b) {
    const int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
      if (i->first != j->first) return i->first < j->first ? 1 : -1;
      if (i->second != j->second) return i->second > j->second ? 1 : -1;
      ++i, ++j;
    }
    return 0;  // equal degree and common prefix exhausted together
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  };

 private:
  std::vector<Factor>::const_iterator find(VarIndex index) const {
    return std::lower_bound(factors_.begin(), factors_.end(), index,
                            [](const Factor& f, VarIndex i) { return f.first < i; });
  }

  void set_exponent(VarIndex index, Exponent exp) {
    if (index < 1) throw std::invalid_argument("variable index must be >= 1");
    if (exp > exponent_limit()) throw std::overflow_error("monomial exponent limit exceeded");
    const auto it = std::lower_bound(factors_.begin(), factors_.end(), index,
                                     [](const Factor& f, VarIndex i) { return f.first < i; });
    if (it != factors_.end() && it->first == index) {
      if (exp == 0)
        factors_.erase(it);
      else
        factors_[it - factors_.begin()].second = exp;
    } else if (exp != 0) {
      factors_.insert(it, Factor{index, exp});
    }
  }

  std::vector<Factor> factors_;
};

/// All monomials of exact total degree `degree` in variables X_1..X_nvars,
/// in a fixed deterministic order.
inline std::vector<Monomial> monomial_basis(int degree, int nvars) {
  std::vector<Monomial> out;
  if (degree < 0 || nvars < 0) return out;
  std::vector<Exponent> exps(static_cast<std::size_t>(nvars), 0);
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars) {
      if (remaining == 0) {
        Monomial m;
        for (int i = 0; i < nvars; ++i)
          if (exps[i] > 0) m = m.with_exponent(static_cast<VarIndex>(i + 1), exps[i]);
        out.push_back(m);
      }
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      exps[var] = static_cast<Exponent>(e);
      self(self, var + 1, remaining - e);
    }
    exps[var] = 0;
  };
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  rec(rec, 0, degree);
  return out;
}

/// All monomials of total degree <= max_degree in X_1..X_nvars, lowest
/// degree first.
inline std::vector<Monomial> monomial_basis_upto(int max_degree, int nvars) {
  std::vector<Monomial> out;
  for (int d = 0; d <= max_degree; ++d) {
    auto layer = monomial_basis(d, nvars);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace spherepoly
