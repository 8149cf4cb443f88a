#pragma once

#include "descartes/multivariate.hpp"
#include "descartes/numeric.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace descartes {

// Dense row-major matrix over a commutative ring (Rational, Integer or
// MultivariatePolynomial).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, T(0)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be >= 0");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(int r, int c) { return data_[index(r, c)]; }
  const T& operator()(int r, int c) const { return data_[index(r, c)]; }

  void swap_rows(int a, int b) {
    for (int c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  // Copy without row r and column c.
  Matrix minor(int r, int c) const {
    Matrix m(rows_ - 1, cols_ - 1);
    for (int i = 0, mi = 0; i < rows_; ++i) {
      if (i == r) continue;
      for (int j = 0, mj = 0; j < cols_; ++j) {
        if (j == c) continue;
        m(mi, mj++) = (*this)(i, j);
      }
      ++mi;
    }
    return m;
  }

  Matrix block(int r0, int c0, int rows, int cols) const {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using PolynomialMatrix = Matrix<MultivariatePolynomial>;

namespace detail {

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const Integer& x) { return x == 0; }
inline bool is_zero(const MultivariatePolynomial& x) { return x.is_zero(); }

inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }
inline Integer exact_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline MultivariatePolynomial exact_quotient(const MultivariatePolynomial& a, const MultivariatePolynomial& b) {
  if (b.size() == 1 && b.terms().front().exponents == MultivariatePolynomial::Exponents{})
    return a.divide_exact(b.terms().front().coefficient);
  return divide_exact(a, b);
}

// Cheap size proxy for pivot choice.
inline std::size_t weight(const Rational&) { return 1; }
inline std::size_t weight(const Integer&) { return 1; }
inline std::size_t weight(const MultivariatePolynomial& x) {
  return x.size() * static_cast<std::size_t>(x.total_degree() + 1);
}

}  // namespace detail

// Fraction-free Gaussian elimination (Bareiss). Every division is exact, so the
// same code serves rationals and integer polynomials. Pivots are the lightest
// nonzero entry in the current column; each swap flips the sign.
template <class T>
T det_fraction_free(Matrix<T> m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return T(1);
  int sign = 1;
  T prev(1);
  for (int k = 0; k < n - 1; ++k) {
    int pivot = -1;
    std::size_t best = 0;
    for (int r = k; r < n; ++r) {
      if (detail::is_zero(m(r, k))) continue;
      const auto w = detail::weight(m(r, k));
      if (pivot < 0 || w < best) {
        pivot = r;
        best = w;
      }
    }
    if (pivot < 0) return T(0);
    if (pivot != k) {
      m.swap_rows(pivot, k);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        T num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = detail::exact_quotient(num, prev);
      }
      m(i, k) = T(0);
    }
    prev = m(k, k);
  }
  T out = m(n - 1, n - 1);
  return sign < 0 ? T(-out) : out;
}

// Cofactor expansion along the first row; an independent oracle for small n.
template <class T>
T det_cofactor(const Matrix<T>& m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  T acc(0);
  for (int j = 0; j < n; ++j) {
    if (detail::is_zero(m(0, j))) continue;
    T term = m(0, j) * det_cofactor(m.minor(0, j));
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

}  // namespace descartes
