#pragma once

#include <prsyn/network/netlist.hpp>
#include <prsyn/synth/step.hpp>

namespace prsyn {

enum class SevenElement { rpfg_first, rpfg_second, alt_first, alt_second };

inline const char *to_string(SevenElement w) {
  switch (w) {
  case SevenElement::rpfg_first: return "rpfg_first";
  case SevenElement::rpfg_second: return "rpfg_second";
  case SevenElement::alt_first: return "alt_first";
  case SevenElement::alt_second: return "alt_second";
  }
  return "?";
}

inline SevenElement parse_seven_element(const std::string &s) {
  for (auto w : {SevenElement::rpfg_first, SevenElement::rpfg_second, SevenElement::alt_first, SevenElement::alt_second})
    if (s == to_string(w)) return w;
  fail(ErrorKind::InvalidArgument, "unknown seven-element variant '" + s + "'");
}

namespace detail {

inline Element res(std::string id, Rational v, std::string h, std::string t) {
  return {std::move(id), ElementKind::Resistor, std::move(v), std::move(h), std::move(t)};
}
inline Element ind(std::string id, Rational v, std::string h, std::string t) {
  return {std::move(id), ElementKind::Inductor, std::move(v), std::move(h), std::move(t)};
}
inline Element cap(std::string id, Rational v, std::string h, std::string t) {
  return {std::move(id), ElementKind::Capacitor, std::move(v), std::move(h), std::move(t)};
}

} // namespace detail

// Two resistors and five storage elements realizing H, with the reduced
// function a positive constant. For X > 0 the first and second networks are
// the top-left and bottom-right ones; for X < 0 the top-right and bottom-left.
inline Network build_seven_element(const SynthesisStep &st, SevenElement which) {
  using namespace detail;
  const RationalFunction &hr = st.reduced;
  if (hr.num().degree() != 0 || hr.den().degree() != 0 || sgn(hr.num()[0] / hr.den()[0]) <= 0)
    fail(ErrorKind::NonConstantReduced, "reduced function " + to_string(hr) + " is not a positive constant");
  Rational r = hr.num()[0] / hr.den()[0];
  const Rational &h = st.h, &w0 = st.omega0;
  Rational w2 = w0 * w0;
  bool alt = which == SevenElement::alt_first || which == SevenElement::alt_second;
  bool first = which == SevenElement::rpfg_first || which == SevenElement::alt_first;
  std::vector<Element> es;

  if (st.variant == Branch::X_positive) {
    const Rational &mu = st.mu_or_nu, &a = st.alpha_or_beta;
    const Rational &chi = st.derived[0], &gam = st.derived[1], &phi = st.derived[2];
    es.push_back(res("r1", h / r, "a", "c"));
    es.push_back(res("r2", h * r, "b", "d"));
    if (first) {
      if (alt) {
        es.push_back(ind("l1", 2 * a * h / w2, "c", "d"));
        es.push_back(ind("l2", 2 * a * h * mu * mu / (chi * chi), "d", "e"));
      } else {
        es.push_back(ind("l1", 2 * a * h * phi / (w2 * chi), "c", "e"));
        es.push_back(ind("l2", h * mu / chi, "d", "e"));
      }
      es.push_back(ind("l3", h / mu, "a", "d"));
      es.push_back(cap("c1", chi / (2 * a * h * phi), "c", "e"));
      es.push_back(cap("c3", chi / (h * mu * w2), "b", "e"));
    } else {
      es.push_back(cap("cdi1", 2 * a * phi / (h * gam * mu * w2), "b", "e"));
      es.push_back(cap("cdi3", 1 / (h * gam), "b", "c"));
      if (alt) {
        es.push_back(ind("ldi1", h / (2 * a), "d", "e"));
        es.push_back(ind("ldi2", h * gam * gam / (2 * a * w2), "c", "e"));
      } else {
        es.push_back(ind("ldi1", h * gam * mu / (2 * a * phi), "d", "e"));
        es.push_back(ind("ldi2", h * gam / w2, "c", "d"));
      }
      es.push_back(ind("l3", h / mu, "a", "d"));
    }
  } else {
    const Rational &nu = st.mu_or_nu, &b = st.alpha_or_beta;
    const Rational &eta = st.derived[0], &zeta = st.derived[1], &psi = st.derived[2];
    es.push_back(res("rd1", h * r, "a", "c"));
    es.push_back(res("rd2", h / r, "b", "d"));
    if (first) {
      es.push_back(ind("ld1", eta * h / (2 * b * psi), "a", "e"));
      es.push_back(ind("ld3", h * eta / (nu * w2), "a", "d"));
      if (alt) {
        es.push_back(cap("cd1", 2 * b / (h * w2), "c", "e"));
        es.push_back(cap("cd2", 2 * b * nu * nu / (h * eta * eta), "d", "e"));
      } else {
        es.push_back(cap("cd1", 2 * b * psi / (eta * h * w2), "c", "e"));
        es.push_back(cap("cd2", nu / (eta * h), "c", "d"));
      }
      es.push_back(cap("cd3", 1 / (h * nu), "b", "c"));
    } else {
      es.push_back(ind("li1", 2 * b * psi * h / (nu * zeta * w2), "d", "e"));
      es.push_back(ind("li3", h / zeta, "a", "e"));
      if (alt) {
        es.push_back(cap("ci1", 1 / (2 * b * h), "c", "d"));
        es.push_back(cap("ci2", zeta * zeta / (2 * b * h * w2), "c", "e"));
      } else {
        es.push_back(cap("ci1", nu * zeta / (2 * b * psi * h), "d", "e"));
        es.push_back(cap("ci2", zeta / (h * w2), "c", "e"));
      }
      es.push_back(cap("cd3", 1 / (h * nu), "b", "c"));
    }
  }
  return make_network("a", "b", std::move(es));
}

} // namespace prsyn
