#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "spherepoly/rational.hpp"

namespace spherepoly {

class SingularMatrixError : public std::domain_error {
 public:
  explicit SingularMatrixError(const std::string& what) : std::domain_error(what) {}
};

/// Dense matrix of exact rationals.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

namespace detail {

// Integer working copy of [A | B]: rows are scaled by the (positive) lcm of
// their denominators, which leaves the solution set of A x = b unchanged and
// the signs of all leading principal minors intact.
inline std::vector<std::vector<mpz_class>> scaled_integer_rows(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.rows(), ca = a.cols(), cb = b.cols();
  std::vector<std::vector<mpz_class>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class scale = 1;
    for (std::size_t j = 0; j < ca; ++j)
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a.at(i, j).denominator().get_mpz_t());
    for (std::size_t j = 0; j < cb; ++j)
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), b.at(i, j).denominator().get_mpz_t());
    rows[i].reserve(ca + cb);
    for (std::size_t j = 0; j < ca; ++j)
      rows[i].push_back(a.at(i, j).numerator() * (scale / a.at(i, j).denominator()));
    for (std::size_t j = 0; j < cb; ++j)
      rows[i].push_back(b.at(i, j).numerator() * (scale / b.at(i, j).denominator()));
  }
  return rows;
}

}  // namespace detail

/// Solves A X = B exactly by Bareiss fraction-free elimination with row
/// pivoting; nullopt when A is singular.
inline std::optional<Matrix> solve_exact(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows())
    throw std::invalid_argument("solve_exact: shape mismatch");
  const std::size_t n = a.rows(), m = b.cols(), w = n + m;
  if (n == 0) return Matrix(0, m);
  auto rows = detail::scaled_integer_rows(a, b);

  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (rows[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && rows[swap][k] == 0) ++swap;
      if (swap == n) return std::nullopt;
      std::swap(rows[k], rows[swap]);
    }
    if (k + 1 == n) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < w; ++j) {
        mpz_class t = rows[k][k] * rows[i][j] - rows[i][k] * rows[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        rows[i][j] = t;
      }
      rows[i][k] = 0;
    }
    prev = rows[k][k];
  }
  if (rows[n - 1][n - 1] == 0) return std::nullopt;

  Matrix x(n, m);
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t i = n; i-- > 0;) {
      Rational acc(rows[i][n + c]);
      for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(rows[i][j]) * x.at(j, c);
      x.at(i, c) = acc / Rational(rows[i][i]);
    }
  }
  return x;
}

inline std::optional<std::vector<Rational>> solve_exact(const Matrix& a,
                                                        const std::vector<Rational>& b) {
  Matrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs.at(i, 0) = b[i];
  auto x = solve_exact(a, rhs);
  if (!x) return std::nullopt;
  std::vector<Rational> out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = x->at(i, 0);
  return out;
}

inline Matrix invert_exact(const Matrix& a) {
  auto inv = solve_exact(a, Matrix::identity(a.rows()));
  if (!inv) throw SingularMatrixError("invert_exact: singular matrix");
  return *inv;
}

/// Sylvester criterion via Bareiss pivots without row exchanges: the k-th
/// pivot carries the sign of the leading k x k minor.
inline bool is_positive_definite(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("is_positive_definite: not square");
  const std::size_t n = a.rows();
  auto rows = detail::scaled_integer_rows(a, Matrix(n, 0));
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (rows[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = rows[k][k] * rows[i][j] - rows[i][k] * rows[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        rows[i][j] = t;
      }
      rows[i][k] = 0;
    }
    prev = rows[k][k];
  }
  return true;
}

}  // namespace spherepoly
