#pragma once

#include <prsyn/polyrat/sylvester.hpp>
#include <prsyn/synth/quartet.hpp>
#include <prsyn/analysis/impedance.hpp>

namespace prsyn {

// Families whose biquadratic members are pinned down by eliminating one
// parameter from the resultant conditions R0(p, q) = R1(p, q) = 0.
enum class ResultantFamily { Q7, Q8, N11, N12 };

inline const char *to_string(ResultantFamily f) {
  static const char *names[] = {"Q7", "Q8", "N11", "N12"};
  return names[static_cast<int>(f)];
}

// Substitution values by name:
//   Q7:  K, omega0, F, g1, g2
//   Q8:  K, omega0, g1, g2, c2, and F for pointwise use
//   N11: K, omega0, F, r1, g2, g3, and c1 for pointwise use
//   N12: K, omega0, F, r1, g2, g3, and x1 for pointwise use
struct ResultantFixture {
  ResultantFamily family = ResultantFamily::Q7;
  std::map<std::string, Rational> values;

  const Rational &at(const std::string &k) const {
    auto it = values.find(k);
    if (it == values.end()) fail(ErrorKind::InvalidArgument, std::string(to_string(family)) + " fixture needs " + k);
    return it->second;
  }
};

// The member network at the fixture's values.
inline Network resultant_network(const ResultantFixture &fx) {
  const Rational &K = fx.at("K"), &w = fx.at("omega0");
  QuartetParams q;
  switch (fx.family) {
  case ResultantFamily::Q7:
    q.family = QuartetFamily::Q7;
    q.A = K / fx.at("g1");
    q.B = K / fx.at("g2");
    q.C = K * fx.at("F");
    break;
  case ResultantFamily::Q8:
    q.family = QuartetFamily::Q8;
    q.A = K / fx.at("g1");
    q.B = K / fx.at("g2");
    q.C = K * fx.at("F") / fx.at("c2");
    q.D = K * fx.at("F");
    break;
  case ResultantFamily::N11:
  case ResultantFamily::N12: {
    bool eleven = fx.family == ResultantFamily::N11;
    q.family = eleven ? QuartetFamily::N11 : QuartetFamily::N12;
    q.A = K * fx.at("r1");
    q.B = K / fx.at("g3");
    q.C = fx.at("g2") / K;
    q.D = K * fx.at("F") / fx.at(eleven ? "c1" : "x1");
    q.E = K * fx.at("F");
    break;
  }
  }
  return build_quartet(q, w);
}

struct ResultantValues {
  Poly p, q;
  Rational R0, R1;
};

// p/q = H/(K F) with p(0) fixed as in the elimination, both from the
// unreduced nodal determinants, and their first two subresultants.
inline ResultantValues family_resultants(const ResultantFixture &fx) {
  const Rational &K = fx.at("K"), &w = fx.at("omega0");
  auto pq = impedance_unreduced(resultant_network(fx));
  if (!pq) fail(ErrorKind::InvalidArgument, "fixture network has no impedance");
  Rational w3 = w * w * w, w4 = w3 * w, p0;
  switch (fx.family) {
  case ResultantFamily::Q7: p0 = w3; break;
  case ResultantFamily::Q8: p0 = (1 + fx.at("c2")) * w4; break;
  case ResultantFamily::N11: p0 = fx.at("F") * (1 + fx.at("r1") * fx.at("g2")) * w4; break;
  case ResultantFamily::N12: p0 = fx.at("r1") * fx.at("x1") * w4; break;
  }
  Poly num = pq->first * Poly(1 / (K * fx.at("F"))), den = pq->second;
  if (sgn(num[0]) == 0) fail(ErrorKind::InvalidArgument, "p(0) vanishes at this fixture");
  Rational scale = p0 / num[0];
  ResultantValues r{num * Poly(scale), den * Poly(scale), 0, 0};
  int want = fx.family == ResultantFamily::Q7 ? 3 : 4;
  if (r.p.degree() != want || r.q.degree() != want)
    fail(ErrorKind::InvalidArgument, "p and q should both have degree " + std::to_string(want));
  r.R0 = sylvester_determinant(r.p, r.q, 0);
  r.R1 = sylvester_determinant(r.p, r.q, 1);
  return r;
}

struct ResultantReport {
  bool ok = false;
  Rational lhs, rhs; // resultant computed from the network, closed form
  std::string note;
  // closed form with the sign of the g2 term flipped, the commonly quoted variant
  std::optional<Rational> uncorrected;
};

namespace detail {

// The polynomial t -> value(t) of degree below the sample count, or
// nullopt when three further samples disagree with the interpolant.
template <class Fn> std::optional<Poly> sample_polynomial(Fn value, int samples = 24) {
  std::vector<Rational> xs, ys;
  for (int j = 1; j <= samples; ++j) {
    xs.push_back(make_rational(j, 3));
    ys.push_back(value(xs.back()));
  }
  Poly p = interpolate(xs, ys);
  for (int j = samples + 1; j <= samples + 3; ++j)
    if (p(make_rational(j, 3)) != value(make_rational(j, 3))) return std::nullopt;
  return p;
}

inline ResultantFixture with(ResultantFixture fx, const std::string &k, const Rational &v) {
  fx.values[k] = v;
  return fx;
}

inline Rational pw(const Rational &x, int n) {
  Rational r = 1;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

} // namespace detail

inline ResultantReport resultant_report(const ResultantFixture &fx) {
  using detail::pw;
  ResultantReport rep;
  const Rational &w = fx.at("omega0");
  switch (fx.family) {
  case ResultantFamily::Q7: {
    const Rational &F = fx.at("F"), &g1 = fx.at("g1"), &g2 = fx.at("g2");
    rep.lhs = family_resultants(fx).R0;
    rep.rhs = F * F * pw(w, 9) * pw(g1 - g2, 2) * pw(1 + F * F * g1 * g2, 4);
    rep.ok = rep.lhs == rep.rhs;
    return rep;
  }
  case ResultantFamily::Q8: {
    const Rational &g1 = fx.at("g1"), &g2 = fx.at("g2"), &c2 = fx.at("c2");
    auto r0 = [&](const Rational &F) { return family_resultants(detail::with(fx, "F", F)); };
    auto f1sq = detail::sample_polynomial([&](const Rational &F) -> Rational {
      return r0(F).R0 / (c2 * pw(w, 16) * (1 + c2) * pw(1 + F * F * g1 * g2, 4));
    });
    auto f2 = detail::sample_polynomial([&](const Rational &F) -> Rational {
      return r0(F).R1 / (-c2 * pw(w, 9) * pw(1 + F * F * g1 * g2, 2));
    });
    std::optional<Poly> f1;
    if (f1sq) f1 = poly_sqrt(*f1sq);
    if (!f1 || !f2) {
      rep.note = "R0 / prefactor is not the square of a polynomial in F, or R1 / prefactor is not a polynomial";
      return rep;
    }
    // f1 is fixed up to sign; take a positive leading coefficient
    if (sgn(f1->lead()) < 0) f1 = -*f1;
    rep.lhs = sylvester_determinant(*f1, *f2, 0);
    rep.rhs = pw(c2, 6) * pw(g2, 10) * pw(1 + c2, 2) * pw(c2 * c2 * g1 + 2 * c2 * (g1 - g2) + g1 - 3 * g2, 2);
    rep.ok = rep.lhs == rep.rhs;
    return rep;
  }
  case ResultantFamily::N11:
  case ResultantFamily::N12: {
    bool eleven = fx.family == ResultantFamily::N11;
    const Rational &F = fx.at("F"), &r1 = fx.at("r1"), &g2 = fx.at("g2"), &g3 = fx.at("g3");
    const std::string var = eleven ? "c1" : "x1";
    Rational u = 1 - r1 * g3;
    // f1 must keep its term in the eliminated variable for the elimination to mean anything
    if (sgn(u) == 0) fail(ErrorKind::InvalidArgument, "r1 g3 = 1 makes f1 constant");
    // f1 in closed form, linear in the eliminated variable
    Poly f1 = eleven ? Poly{Rational(F * F * g3 * (g3 - g2 * u)), u} : Poly{Rational(g3 - g2 * u), Rational(g3 * u)};
    auto pref0 = [&](const Rational &t) -> Rational {
      Rational m = eleven ? Rational(t * t * pw(r1 + F * F * g3, 2)) : Rational(pw(F * F * g3 + r1, 2) * t * t);
      Rational k = m + F * F * pw(1 + r1 * g2 + F * F * g2 * g3, 2);
      return eleven ? Rational(pw(F, 4) * pw(w, 16) * t * k * k) : Rational(-pw(F, 6) * pw(w, 16) * t * k * k);
    };
    auto pref1 = [&](const Rational &t) -> Rational {
      return eleven ? Rational(-F * F * t * pw(w, 9)) : Rational(pw(F, 6) * pw(w, 9));
    };
    bool r0_form = true;
    auto f2 = detail::sample_polynomial([&](const Rational &t) -> Rational {
      auto v = family_resultants(detail::with(fx, var, t));
      if (v.R0 != pref0(t) * pw(f1(t), 2)) r0_form = false;
      return v.R1 / pref1(t);
    });
    if (!r0_form || !f2) {
      rep.note = !r0_form ? "R0 does not factor with the stated f1" : "R1 / prefactor is not a polynomial";
      return rep;
    }
    rep.lhs = sylvester_determinant(f1, *f2, 0);
    if (eleven) {
      Rational last = g3 * (3 - r1 * g3 + r1 * g2 * (2 - r1 * g3)) - g2;
      Rational common = pw(F, 10) * pw(g3, 5) * (r1 * g3 - 1);
      Rational tail = F * F * g3 * g3 + g3 * r1 - 1;
      Rational corrected = -g2 * u * (r1 + F * F * g3) + tail;
      Rational flipped = g2 * u * (r1 + F * F * g3) + tail;
      rep.rhs = -common * pw(corrected * corrected + g3 * g3 * F * F, 2) * last;
      rep.uncorrected = common * pw(flipped * flipped + g3 * g3 * F * F, 2) * last;
    } else {
      Rational inner = g2 * u * (r1 + F * F * g3) - g3 * r1;
      rep.rhs = -F * F * pw(g3, 5) * pw(inner * inner + g3 * g3 * F * F, 2) * (g3 - g2 * u) *
                (g2 * u * u + g3 * (1 + r1 * g3));
    }
    rep.ok = rep.lhs == rep.rhs;
    return rep;
  }
  }
  return rep;
}

inline bool resultant_fixture_check(const ResultantFixture &fx) { return resultant_report(fx).ok; }

} // namespace prsyn
