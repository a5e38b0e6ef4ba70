#pragma once

#include <prsyn/polyrat/ratfunc.hpp>
#include <prsyn/polyrat/sturm.hpp>

#include <optional>
#include <vector>

namespace prsyn {

// Even-part numerator as a polynomial in u = w^2:
// r(s) = p(s)q(-s) + p(-s)q(s) = R(s^2), returned as R(-u) so that
// R(-u) = r(jw) = 2 |q(jw)|^2 Re G(jw).
inline Poly even_part_numerator(const RationalFunction &g) {
  const Poly &p = g.num(), &q = g.den();
  Poly r = p * q.reflect() + p.reflect() * q;
  Poly big_r = r.even_odd().first;
  return big_r.scale_arg(Rational(-1));
}

namespace detail {

// Roots of h = gcd(q(s), q(-s)) are the imaginary-axis poles (for a
// candidate PR function). Writes h = s^e P(s^2).
struct AxisPoles {
  Poly h;
  int e = 0;
  Poly P; // in u = s^2
};

inline AxisPoles axis_poles(const Poly &q) {
  AxisPoles a;
  a.h = gcd(q, q.reflect());
  Poly rest = a.h;
  if (rest.degree() > 0 && sgn(rest[0]) == 0) {
    rest = exact_div(rest, Poly::x());
    a.e = 1;
  }
  auto [ev, od] = rest.even_odd();
  // h is even or odd up to the s factor, so the remainder is even
  a.P = od.zero() ? ev : Poly();
  return a;
}

// Residue of p/q at s = jw where w^2 = -u for each root u of P is real and
// positive. P squarefree, all its roots real and negative.
inline bool axis_residues_positive(const Poly &p, const Poly &q, const Poly &P) {
  if (P.degree() <= 0) return true;
  Poly dq = q.derivative();
  auto [pe, po] = p.even_odd();
  auto [qe, qo] = dq.even_odd();
  Poly u = Poly::x();
  // imaginary part vanishes at every root of P
  Poly t = po * qe - pe * qo;
  if (!(t % P).zero()) return false;
  Poly sgn_poly = pe * qe - u * po * qo;
  for (const auto &root : real_roots(P))
    if (sign_at_root(squarefree_part(P), sgn_poly, root) <= 0) return false;
  return true;
}

} // namespace detail

inline bool is_positive_real(const RationalFunction &g) {
  if (g.zero()) return true;
  const Poly &p = g.num(), &q = g.den();

  // behaviour at infinity: at most a simple pole with positive residue
  int dp = p.degree(), dq = q.degree();
  if (dp > dq + 1 || dq > dp + 1) return false;
  if (dp == dq + 1 && sgn(p.lead() / q.lead()) <= 0) return false;

  auto ax = detail::axis_poles(q);
  if (ax.P.zero()) return false;
  if (squarefree_part(ax.h).degree() != ax.h.degree()) return false; // repeated axis pole
  if (ax.P.degree() > 0) {
    if (sgn(ax.P[0]) == 0) return false;
    SturmChain sc(ax.P);
    if (sc.count_below_or_at(Rational(0)) != ax.P.degree()) return false;
  }
  if (!strictly_hurwitz(exact_div(q, ax.h))) return false;

  if (ax.e == 1 && sgn(p[0] / q.derivative()[0]) <= 0) return false;
  if (!detail::axis_residues_positive(p, q, ax.P)) return false;

  Poly rt = even_part_numerator(g);
  if (rt.zero()) return true;
  if (sgn(rt.lead()) < 0) return false;
  for (const auto &[mult, f] : squarefree_decomposition(rt)) {
    if (mult % 2 == 0) continue;
    SturmChain sc(f);
    if (sc.count_above(Rational(0)) != 0) return false;
  }
  return true;
}

inline bool is_lossless(const RationalFunction &g) { return is_positive_real(g) && even_part_numerator(g).zero(); }

// A positive frequency w with Re G(jw) = 0. omega_sq is exact whenever w^2
// is rational; omega is exact when w itself is.
struct MinFrequency {
  std::optional<Rational> omega;
  std::optional<Rational> omega_sq;
  Real value;
};

// Irrational roots are isolated to intervals narrower than width.
inline std::vector<MinFrequency> minimum_frequencies(const RationalFunction &g,
                                                     const Rational &width = Rational(1, 1000000000) / 1000) {
  if (!is_positive_real(g)) fail(ErrorKind::NotPR, "function is not positive-real");
  Poly rt = even_part_numerator(g);
  if (rt.zero()) fail(ErrorKind::NotPR, "lossless function has no isolated minimum frequency");
  // drop the axis-pole frequencies, where Re G is undefined
  Poly pu = detail::axis_poles(g.den()).P.scale_arg(Rational(-1));
  if (pu.degree() > 0) {
    for (Poly c = gcd(rt, pu); c.degree() > 0; c = gcd(rt, pu)) rt = exact_div(rt, c);
  }
  std::vector<MinFrequency> out;
  for (const auto &r : real_roots(rt, width)) {
    if (r.exact ? sgn(*r.exact) <= 0 : sgn(r.hi) <= 0) continue;
    MinFrequency m;
    if (r.exact) {
      m.omega_sq = *r.exact;
      m.omega = rational_sqrt(*r.exact);
    }
    m.value = boost::multiprecision::sqrt(r.approx());
    out.push_back(m);
  }
  return out;
}

inline bool is_minimum_function(const RationalFunction &g) {
  if (g.zero() || !is_positive_real(g)) return false;
  if (g.num().degree() != g.den().degree()) return false;
  if (gcd(g.den(), g.den().reflect()).degree() > 0) return false;
  if (gcd(g.num(), g.num().reflect()).degree() > 0) return false;
  if (even_part_numerator(g).zero()) return false;
  return !minimum_frequencies(g).empty();
}

} // namespace prsyn
