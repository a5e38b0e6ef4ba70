#pragma once

#include <prsyn/polyrat/matrix.hpp>

namespace prsyn {

// Leading (m+n-2k) square block of the Sylvester matrix: n-k shifted rows of
// p, then m-k shifted rows of q, coefficients from the highest degree down.
// R_0 = ... = R_{r-1} = 0 iff p and q share at least r roots.
template <class T> Matrix<T> sylvester_matrix(const Polynomial<T> &p, const Polynomial<T> &q, int k) {
  int m = p.degree(), n = q.degree();
  if (p.zero() || q.zero() || k < 0 || k >= std::min(m, n))
    fail(ErrorKind::DegreeTooSmall, "need 0 <= k < min(deg p, deg q)");
  std::size_t size = static_cast<std::size_t>(m + n - 2 * k);
  Matrix<T> s(size, size);
  std::size_t row = 0;
  for (int i = 0; i < n - k; ++i, ++row)
    for (int j = 0; j <= m; ++j)
      if (static_cast<std::size_t>(i + j) < size) s(row, static_cast<std::size_t>(i + j)) = p[m - j];
  for (int i = 0; i < m - k; ++i, ++row)
    for (int j = 0; j <= n; ++j)
      if (static_cast<std::size_t>(i + j) < size) s(row, static_cast<std::size_t>(i + j)) = q[n - j];
  return s;
}

inline Rational sylvester_determinant(const Poly &p, const Poly &q, int k) {
  return bareiss_determinant(sylvester_matrix(p, q, k));
}

// Same determinant with polynomial entries, e.g. for resultants with respect
// to one variable of a two-variable identity.
template <class T>
T sylvester_determinant(const Polynomial<T> &p, const Polynomial<T> &q, int k) {
  return bareiss_determinant(sylvester_matrix(p, q, k));
}

} // namespace prsyn
