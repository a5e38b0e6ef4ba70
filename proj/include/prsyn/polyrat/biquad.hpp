#pragma once

#include <prsyn/polyrat/positive_real.hpp>

#include <ostream>
#include <string>

namespace prsyn {

// Parametrization of a biquadratic minimum function:
//   K (s^2 + w0(1-W)F/W s + w0^2 W) / (s^2 + w0(1-W)/F s + w0^2/W)
// with K = H(inf), K W^2 = H(0), K F j = H(j w0).
struct BiquadParams {
  Rational K, omega0, W, F;

  bool valid() const {
    if (sgn(K) <= 0 || sgn(omega0) <= 0 || sgn(W) <= 0 || W == 1 || sgn(F) == 0) return false;
    return (W < 1 && sgn(F) > 0) || (W > 1 && sgn(F) < 0);
  }
  void validate() const {
    if (!valid()) fail(ErrorKind::InvalidArgument, "biquad parameters violate 0<W<1,F>0 or W>1,F<0");
  }

  friend bool operator==(const BiquadParams &a, const BiquadParams &b) {
    return a.K == b.K && a.omega0 == b.omega0 && a.W == b.W && a.F == b.F;
  }
  friend bool operator!=(const BiquadParams &a, const BiquadParams &b) { return !(a == b); }
};

inline std::string to_string(const BiquadParams &p) {
  return "K=" + to_string(p.K) + " omega0=" + to_string(p.omega0) + " W=" + to_string(p.W) + " F=" + to_string(p.F);
}
inline std::ostream &operator<<(std::ostream &os, const BiquadParams &p) { return os << to_string(p); }

inline RationalFunction biquad_template(const BiquadParams &p) {
  p.validate();
  const Rational &w = p.omega0, &W = p.W, &F = p.F;
  Poly num{Rational(w * w * W), Rational(w * (1 - W) * F / W), Rational(1)};
  Poly den{Rational(w * w / W), Rational(w * (1 - W) / F), Rational(1)};
  return RationalFunction(num * Poly(p.K), den);
}

inline BiquadParams biquad_params(const RationalFunction &h) {
  if (!is_minimum_function(h)) fail(ErrorKind::NotMinimum, "not a minimum function: " + to_string(h));
  if (h.mcmillan_degree() != 2) fail(ErrorKind::NotBiquadratic, "McMillan degree " + std::to_string(h.mcmillan_degree()));
  auto mf = minimum_frequencies(h);
  if (mf.size() != 1 || !mf[0].omega_sq) fail(ErrorKind::NotBiquadratic, "expected a single rational minimum frequency");
  if (!mf[0].omega)
    fail(ErrorKind::IrrationalValue, "omega0^2 = " + to_string(*mf[0].omega_sq) + " has no rational square root");
  BiquadParams out;
  out.K = h.num().lead();
  out.omega0 = *mf[0].omega;
  Poly n = h.num().monic();
  Rational w2 = *mf[0].omega_sq;
  out.W = n[0] / w2;
  out.F = n[1] * out.W / (out.omega0 * (1 - out.W));
  if (!out.valid() || biquad_template(out) != h) fail(ErrorKind::NotBiquadratic, "parametrization does not reproduce H");
  return out;
}

} // namespace prsyn
