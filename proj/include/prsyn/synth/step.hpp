#pragma once

#include <prsyn/polyrat/biquad.hpp>
#include <prsyn/polyrat/positive_real.hpp>
#include <prsyn/polyrat/sturm.hpp>

#include <array>

namespace prsyn {

enum class Branch { X_positive, X_negative };

inline const char *to_string(Branch b) { return b == Branch::X_positive ? "X_positive" : "X_negative"; }

// One reactance-extraction step at a minimum frequency w0 with
// H(j w0) = j w0 X. On the X > 0 branch mu solves H(mu) = mu X, h = H(mu),
// and derived = {chi, gamma, phi} = {w0^2 + 2 alpha mu, mu + 2 alpha, chi + mu^2}.
// On the X < 0 branch nu solves H(nu) nu = -w0^2 X, h = H(nu), and
// derived = {eta, zeta, psi} = {w0^2 + 2 beta nu, nu + 2 beta, eta + nu^2}.
struct SynthesisStep {
  Branch variant = Branch::X_positive;
  Rational X;
  Rational omega0;
  Rational mu_or_nu;
  Rational alpha_or_beta;
  RationalFunction reduced;
  Rational h;
  std::array<Rational, 3> derived;
  // true when several positive roots were available and the smallest taken
  bool root_choice_flagged = false;

  std::array<const char *, 3> derived_names() const {
    if (variant == Branch::X_positive) return {"chi", "gamma", "phi"};
    return {"eta", "zeta", "psi"};
  }
};

namespace detail {

struct PositiveStep {
  Rational mu, alpha, h;
  RationalFunction reduced;
  bool flagged = false;
};

// X > 0 extraction on g with g(j w0) = j w0 x.
inline PositiveStep positive_step(const RationalFunction &g, const Rational &w0, const Rational &x) {
  Rational w2 = w0 * w0;
  const Poly &n = g.num(), &d = g.den();
  Poly eq = n - Poly{Rational(0), x} * d;
  std::optional<Rational> mu;
  int positive = 0;
  for (const auto &r : real_roots(eq)) {
    bool pos = r.exact ? sgn(*r.exact) > 0 : sgn(r.lo) >= 0;
    if (!pos) continue;
    ++positive;
    if (positive > 1) continue;
    if (!r.exact)
      fail(ErrorKind::IrrationalValue, "the smallest positive mu (about " + r.approx().str(12) + ") is irrational");
    mu = *r.exact;
  }
  if (!mu) fail(ErrorKind::NotMinimum, "no positive mu with H(mu) = mu X");
  PositiveStep st;
  st.mu = *mu;
  st.h = g.eval(*mu);
  st.flagged = positive > 1;

  Poly s = Poly::x();
  RationalFunction q(Poly(st.mu * st.h) * d - s * n, Poly(st.mu) * n - Poly(st.h) * s * d);
  Poly axis{w2, Rational(0), Rational(1)};
  RationalFunction t = q * RationalFunction(axis);
  CRational jw = CRational::jw(w2);
  if (t.den().eval(jw).zero()) fail(ErrorKind::NotMinimum, "quotient function has a double pole at j*omega0");
  // residue form: t(j w0) = 2 alpha j w0
  CRational v = t.eval(jw);
  if (sgn(v.re) != 0) fail(ErrorKind::NotMinimum, "residue at j*omega0 is not real");
  st.alpha = v.im / 2;
  if (sgn(st.alpha) <= 0) fail(ErrorKind::NotMinimum, "residue at j*omega0 is not positive");
  RationalFunction inv = q - RationalFunction(Poly{Rational(0), Rational(2 * st.alpha)}, axis);
  if (inv.zero()) fail(ErrorKind::NotMinimum, "reduced function vanishes");
  st.reduced = inv.reciprocal();
  return st;
}

// w0 with H(j w0) purely imaginary and nonzero, or the smallest minimum
// frequency when none is given.
inline Rational step_frequency(const RationalFunction &h, const std::optional<Rational> &omega0) {
  if (!is_minimum_function(h)) fail(ErrorKind::NotMinimum, "not a minimum function: " + to_string(h));
  if (omega0) {
    if (sgn(*omega0) <= 0) fail(ErrorKind::InvalidArgument, "omega0 must be positive");
    CRational v = h.eval(CRational::jw(*omega0 * *omega0));
    if (sgn(v.re) != 0) fail(ErrorKind::NotMinimum, "Re H(j*omega0) is not zero at omega0 = " + to_string(*omega0));
    return *omega0;
  }
  auto mf = minimum_frequencies(h);
  if (!mf.front().omega) fail(ErrorKind::IrrationalValue, "the smallest minimum frequency is not rational");
  return *mf.front().omega;
}

} // namespace detail

// Pass sign = +1 or -1 to demand a branch; WrongBranch otherwise.
inline SynthesisStep theorem2_step(const RationalFunction &h, std::optional<Rational> omega0 = std::nullopt,
                                   int sign = 0) {
  Rational w0 = detail::step_frequency(h, omega0);
  Rational w2 = w0 * w0;
  CRational v = h.eval(CRational::jw(w2));
  SynthesisStep st;
  st.omega0 = w0;
  st.X = v.im; // H(j w0) = X * (j w0)
  if (sgn(st.X) == 0) fail(ErrorKind::NotMinimum, "H(j*omega0) is zero");
  st.variant = sgn(st.X) > 0 ? Branch::X_positive : Branch::X_negative;
  if (sign != 0 && sign != sgn(st.X)) fail(ErrorKind::WrongBranch, std::string("X has the other sign: ") + to_string(st.X));

  if (st.variant == Branch::X_positive) {
    auto p = detail::positive_step(h, w0, st.X);
    st.mu_or_nu = p.mu;
    st.alpha_or_beta = p.alpha;
    st.h = p.h;
    st.reduced = p.reduced;
    st.root_choice_flagged = p.flagged;
    Rational chi = w2 + 2 * p.alpha * p.mu;
    st.derived = {chi, Rational(p.mu + 2 * p.alpha), Rational(chi + p.mu * p.mu)};
  } else {
    // the X > 0 step on 1/H, whose value at j w0 is j w0 (-1/(w0^2 X))
    auto p = detail::positive_step(h.reciprocal(), w0, Rational(-1 / (w2 * st.X)));
    st.mu_or_nu = p.mu;
    st.alpha_or_beta = p.alpha;
    st.h = 1 / p.h;
    st.reduced = p.reduced;
    st.root_choice_flagged = p.flagged;
    Rational eta = w2 + 2 * p.alpha * p.mu;
    st.derived = {eta, Rational(p.mu + 2 * p.alpha), Rational(eta + p.mu * p.mu)};
  }
  if (st.reduced.mcmillan_degree() > h.mcmillan_degree() - 2)
    fail(ErrorKind::NotMinimum, "reduced function did not lose two degrees");
  return st;
}

namespace detail {

// h (s^3 + R(2a + m)s^2 + w^2 s + R m w^2) / (R s^3 + m s^2 + R(2 a m + w^2) s + m w^2)
inline RationalFunction cubic_composite(const Rational &h, const Rational &m, const Rational &a, const Rational &w2,
                                        const RationalFunction &r) {
  auto c = [](const Rational &x) { return RationalFunction(x); };
  RationalFunction s = RationalFunction::s();
  RationalFunction s2 = s * s, s3 = s2 * s;
  RationalFunction num = s3 + r * c(2 * a + m) * s2 + c(w2) * s + r * c(m * w2);
  RationalFunction den = r * s3 + c(m) * s2 + r * c(2 * a * m + w2) * s + c(m * w2);
  return c(h) * num / den;
}

} // namespace detail

inline bool verify_theorem2_identity(const RationalFunction &h, const SynthesisStep &st) {
  Rational w2 = st.omega0 * st.omega0;
  if (sgn(st.h) == 0 || st.reduced.zero()) return false;
  if (st.variant == Branch::X_positive)
    return detail::cubic_composite(st.h, st.mu_or_nu, st.alpha_or_beta, w2, st.reduced) == h;
  return detail::cubic_composite(1 / st.h, st.mu_or_nu, st.alpha_or_beta, w2, st.reduced) == h.reciprocal();
}

} // namespace prsyn
