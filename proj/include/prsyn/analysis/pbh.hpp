#pragma once

#include <prsyn/analysis/state_space.hpp>

#include <complex>

namespace prsyn {

struct Mode {
  std::optional<Rational> exact; // eigenvalue when rational
  ComplexValue approx;
  // left (uncontrollable) or right (unobservable) PBH vector, exact modes only
  std::vector<Rational> vector;
};

struct PbhReport {
  Poly uncontrollable_poly, unobservable_poly;
  std::vector<Mode> uncontrollable_modes, unobservable_modes;
  bool stabilizable = true;
  bool detectable = true;
};

namespace detail {

// Monic polynomial of the smallest degree with p(A) b = 0: the
// characteristic polynomial of A on the Krylov space of b.
inline Poly krylov_polynomial(const Matrix<Rational> &a, const Matrix<Rational> &b) {
  std::size_t n = a.rows();
  std::vector<Matrix<Rational>> ks{b};
  for (std::size_t k = 0; k <= n; ++k) {
    Matrix<Rational> kr(n, ks.size());
    for (std::size_t j = 0; j < ks.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) kr(i, j) = ks[j](i, 0);
    Matrix<Rational> next = a * ks.back();
    auto c = solve(kr, next);
    if (c) {
      // A^k b = sum c_j A^j b  ->  s^k - sum c_j s^j
      std::vector<Rational> coef(ks.size() + 1, Rational(0));
      coef.back() = 1;
      for (std::size_t j = 0; j < ks.size(); ++j) coef[j] = -(*c)(j, 0);
      return Poly(std::move(coef));
    }
    ks.push_back(next);
  }
  return Poly(Rational(1));
}

inline Poly krylov_or_trivial(const Matrix<Rational> &a, const Matrix<Rational> &b) {
  bool zero = true;
  for (std::size_t i = 0; i < b.rows(); ++i) zero = zero && sgn(b(i, 0)) == 0;
  return zero ? Poly(Rational(1)) : krylov_polynomial(a, b);
}

// Durand-Kerner on a polynomial without rational roots.
inline std::vector<ComplexValue> complex_roots(const Poly &p) {
  int n = p.degree();
  std::vector<ComplexValue> c, z;
  for (int i = 0; i <= n; ++i) c.push_back(ComplexValue(to_real(p[i] / p.lead())));
  for (int i = 0; i < n; ++i) z.push_back(boost::multiprecision::pow(ComplexValue(Real("0.4"), Real("0.9")), i));
  auto eval = [&](const ComplexValue &x) {
    ComplexValue r = 0;
    for (int i = n; i >= 0; --i) r = r * x + c[static_cast<std::size_t>(i)];
    return r;
  };
  for (int it = 0; it < 500; ++it) {
    Real delta = 0;
    for (int i = 0; i < n; ++i) {
      ComplexValue den = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
      ComplexValue step = eval(z[static_cast<std::size_t>(i)]) / den;
      z[static_cast<std::size_t>(i)] -= step;
      delta = std::max(delta, Real(abs(step)));
    }
    if (delta < Real("1e-40")) break;
  }
  return z;
}

// Eigenvalues of p: rational roots exactly, the rest numerically.
inline std::vector<Mode> modes_of(Poly p) {
  std::vector<Mode> out;
  if (p.degree() <= 0) return out;
  for (const auto &r : real_roots(squarefree_part(p))) {
    if (!r.exact) continue;
    while (p.degree() > 0 && sgn(p(*r.exact)) == 0) {
      out.push_back({*r.exact, ComplexValue(to_real(*r.exact)), {}});
      p = exact_div(p, Poly{Rational(-*r.exact), Rational(1)});
    }
  }
  if (p.degree() > 0)
    for (const auto &z : complex_roots(p)) out.push_back({std::nullopt, z, {}});
  return out;
}

// Some nonzero x with [A - lI; C] x = 0.
inline std::vector<Rational> pbh_right(const Matrix<Rational> &a, const Matrix<Rational> &c, const Rational &l) {
  std::size_t n = a.rows();
  Matrix<Rational> m(n + c.rows(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j) - (i == j ? l : Rational(0));
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(n + i, j) = c(i, j);
  auto ns = nullspace(m);
  return ns.empty() ? std::vector<Rational>{} : ns.front();
}

} // namespace detail

// Uncontrollable part: char(A) divided by the characteristic polynomial of
// A on the controllable subspace; unobservable likewise with (A^T, C^T).
inline PbhReport pbh_diagnostics(const StateSpace &ss) {
  PbhReport r;
  Poly chi = characteristic_polynomial(ss.A);
  Matrix<Rational> at = ss.A.transpose();
  r.uncontrollable_poly = exact_div(chi, detail::krylov_or_trivial(ss.A, ss.B));
  r.unobservable_poly = exact_div(chi, detail::krylov_or_trivial(at, ss.C.transpose()));
  r.uncontrollable_modes = detail::modes_of(r.uncontrollable_poly);
  r.unobservable_modes = detail::modes_of(r.unobservable_poly);
  for (auto &m : r.uncontrollable_modes)
    if (m.exact) m.vector = detail::pbh_right(at, ss.B.transpose(), *m.exact);
  for (auto &m : r.unobservable_modes)
    if (m.exact) m.vector = detail::pbh_right(ss.A, ss.C, *m.exact);
  r.stabilizable = strictly_hurwitz(r.uncontrollable_poly);
  r.detectable = strictly_hurwitz(r.unobservable_poly);
  return r;
}

} // namespace prsyn
