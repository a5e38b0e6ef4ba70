#pragma once

#include <prsyn/polyrat/polynomial.hpp>

#include <optional>
#include <vector>

namespace prsyn {

// Dense row-major matrix over an exact ring.
template <class T> class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T &fill = T(0)) : r_(rows), c_(cols), a_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    r_ = rows.size();
    c_ = r_ ? rows.begin()->size() : 0;
    for (const auto &row : rows) {
      if (row.size() != c_) fail(ErrorKind::InvalidArgument, "ragged matrix literal");
      for (const auto &x : row) a_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  T &operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T &operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // Copy without row `ri` and column `ci`.
  Matrix minor(std::size_t ri, std::size_t ci) const {
    Matrix m(r_ - 1, c_ - 1);
    for (std::size_t i = 0, mi = 0; i < r_; ++i) {
      if (i == ri) continue;
      for (std::size_t j = 0, mj = 0; j < c_; ++j) {
        if (j == ci) continue;
        m(mi, mj++) = (*this)(i, j);
      }
      ++mi;
    }
    return m;
  }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  friend Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.c_ != b.r_) fail(ErrorKind::InvalidArgument, "matrix shape mismatch");
    Matrix m(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.c_; ++j) m(i, j) = m(i, j) + a(i, k) * b(k, j);
      }
    return m;
  }
  friend Matrix operator+(const Matrix &a, const Matrix &b) {
    Matrix m = a;
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = m.a_[i] + b.a_[i];
    return m;
  }
  friend Matrix operator-(const Matrix &a, const Matrix &b) {
    Matrix m = a;
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = m.a_[i] - b.a_[i];
    return m;
  }
  friend Matrix operator*(const T &s, const Matrix &b) {
    Matrix m = b;
    for (auto &x : m.a_) x = s * x;
    return m;
  }
  friend bool operator==(const Matrix &a, const Matrix &b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }
  friend bool operator!=(const Matrix &a, const Matrix &b) { return !(a == b); }

  void swap_rows(std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }

private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

namespace detail {
inline Rational exact_quotient(const Rational &a, const Rational &b) { return a / b; }
inline Poly exact_quotient(const Poly &a, const Poly &b) { return exact_div(a, b); }
} // namespace detail

// Fraction-free determinant. Every intermediate division is exact, so this
// works over Z, Q and Q[s] alike.
template <class T> T bareiss_determinant(Matrix<T> m) {
  std::size_t n = m.rows();
  if (n != m.cols()) fail(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  if (n == 0) return T(1);
  T prev(1);
  bool neg = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(m(p, k))) ++p;
      if (p == n) return T(0);
      m.swap_rows(k, p);
      neg = !neg;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = detail::exact_quotient(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      m(i, k) = T(0);
    }
    prev = m(k, k);
  }
  T d = m(n - 1, n - 1);
  return neg ? T(-d) : d;
}

// Reduced row echelon form over a field; returns the pivot columns.
template <class T> std::vector<std::size_t> rref_in_place(Matrix<T> &m) {
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(row, p);
    T inv = T(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      T f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(row, j);
    }
    piv.push_back(col);
    ++row;
  }
  return piv;
}

template <class T> std::size_t rank(Matrix<T> m) { return rref_in_place(m).size(); }

// Basis of {x : m x = 0}.
template <class T> std::vector<std::vector<T>> nullspace(Matrix<T> m) {
  auto piv = rref_in_place(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    std::vector<T> v(m.cols(), T(0));
    v[f] = T(1);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// One solution of m X = B for every column of B, or nullopt if any column is
// inconsistent. Free variables are set to zero.
template <class T> std::optional<Matrix<T>> solve(const Matrix<T> &m, const Matrix<T> &b) {
  std::size_t n = m.cols(), k = b.cols();
  Matrix<T> aug(m.rows(), n + k);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
  }
  Matrix<T> red = aug;
  // pivot only on coefficient columns
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < red.rows(); ++col) {
    std::size_t p = row;
    while (p < red.rows() && is_zero(red(p, col))) ++p;
    if (p == red.rows()) continue;
    red.swap_rows(row, p);
    T inv = T(1) / red(row, col);
    for (std::size_t j = col; j < red.cols(); ++j) red(row, j) = red(row, j) * inv;
    for (std::size_t i = 0; i < red.rows(); ++i) {
      if (i == row || is_zero(red(i, col))) continue;
      T f = red(i, col);
      for (std::size_t j = col; j < red.cols(); ++j) red(i, j) = red(i, j) - f * red(row, j);
    }
    piv.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < red.rows(); ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (!is_zero(red(i, n + j))) return std::nullopt;
  Matrix<T> x(n, k);
  for (std::size_t r = 0; r < piv.size(); ++r)
    for (std::size_t j = 0; j < k; ++j) x(piv[r], j) = red(r, n + j);
  return x;
}

// Characteristic polynomial det(sI - A) over Q[s].
inline Poly characteristic_polynomial(const Matrix<Rational> &a) {
  std::size_t n = a.rows();
  Matrix<Poly> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = (i == j) ? Poly{Rational(-a(i, j)), Rational(1)} : Poly(Rational(-a(i, j)));
  return bareiss_determinant(m);
}

} // namespace prsyn
