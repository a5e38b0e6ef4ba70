#pragma once

#include <prsyn/synth/seven_element.hpp>

namespace prsyn {

enum class Named { N1, N2, N3, N4, N5, N6, Fig2a, Fig2b };

inline const char *to_string(Named n) {
  static const char *names[] = {"N1", "N2", "N3", "N4", "N5", "N6", "Fig2a", "Fig2b"};
  return names[static_cast<int>(n)];
}

inline Named parse_named(const std::string &s) {
  for (int k = 0; k < 8; ++k)
    if (s == to_string(static_cast<Named>(k))) return static_cast<Named>(k);
  fail(ErrorKind::InvalidArgument, "unknown network name '" + s + "'");
}

// Biquadratic functions realizable with fewer than five storage elements:
// 'a', 'b' need three, 'c' to 'f' four.
inline char biquad_condition(const BiquadParams &p) {
  p.validate();
  const Rational &W = p.W, &F = p.F;
  Rational f2 = F * F, phi = 1 - W;
  bool half = W > Rational(1, 2) && W < 1 && sgn(F) > 0;
  bool lower = W > 1 && W < 2 && sgn(F) < 0;
  if (W == Rational(1, 2) && sgn(F) > 0) return 'a';
  if (W == 2 && sgn(F) < 0) return 'b';
  if (half && f2 * phi * phi == W * W * (2 * W - 1)) return 'c';
  if (lower && f2 * (2 - W) == phi * phi * W) return 'd';
  if (lower && f2 * phi * phi == W * W * W * (2 - W)) return 'e';
  if (half && f2 * (2 * W - 1) == W * W * phi * phi) return 'f';
  return 0;
}

// Symbols of the pair of six- and seven-element networks related by a
// capacitor star-delta transformation.
struct Fig2Params {
  BiquadParams p;
  Rational phi, psi, eta, zeta;
};

inline Fig2Params fig2_params(const BiquadParams &p) {
  if (!p.valid() || sgn(p.F) <= 0 || !(p.W > Rational(1, 2) && p.W < 1))
    fail(ErrorKind::ConditionViolated, "need 1/2 < W < 1 and F > 0");
  Fig2Params f{p, 1 - p.W, 1 + p.W, 2 * p.W - 1, 0};
  f.zeta = p.W * p.W * f.phi * f.phi - p.F * p.F * f.eta;
  if (sgn(f.zeta) <= 0) fail(ErrorKind::ConditionViolated, "need F < W(1-W)/sqrt(2W-1)");
  return f;
}

inline Network build_named(Named name, const BiquadParams &p) {
  using namespace detail;
  if (!p.valid()) fail(ErrorKind::ConditionViolated, "invalid biquad parameters " + to_string(p));
  static const char want[] = {'a', 'b', 'c', 'd', 'e', 'f'};
  int k = static_cast<int>(name);
  if (k < 6 && biquad_condition(p) != want[k])
    fail(ErrorKind::ConditionViolated, std::string(to_string(name)) + " needs condition (" + want[k] + "), got " + to_string(p));
  const Rational &K = p.K, &w = p.omega0, &W = p.W, &F = p.F;
  Rational phi = 1 - W, psi = 1 + W, eta = 2 * W - 1, gam = 2 - W;
  std::vector<Element> es;
  switch (name) {
  case Named::N1:
    es = {res("r1", K / 2, "a", "c"), res("r2", K / 2, "b", "d"), ind("l1", K * F / w, "a", "d"),
          ind("l2", K * F / w, "b", "c"), cap("c1", 1 / (K * F * w), "c", "d")};
    break;
  case Named::N2:
    es = {res("rd1", 2 * K, "a", "c"), res("rd2", 2 * K, "b", "d"), cap("cd1", -1 / (K * F * w), "a", "d"),
          cap("cd2", -1 / (K * F * w), "b", "c"), ind("ld1", -K * F / w, "c", "d")};
    break;
  case Named::N3:
    es = {res("r1", K * W * W / (phi * psi), "a", "c"), res("r2", K, "b", "d"), ind("l1", K * F / w, "b", "c"),
          ind("l2", K * F * phi / (W * w), "a", "d"), cap("c1", 1 / (K * F * w), "c", "d"),
          cap("c2", eta / (K * F * phi * w), "a", "d")};
    break;
  case Named::N4:
    es = {res("rd1", -K * phi * psi, "a", "c"), res("rd2", K, "b", "d"), cap("cd1", -1 / (K * F * w), "a", "d"),
          cap("cd2", phi / (K * F * w), "b", "e"), ind("ld1", -K * F / w, "c", "d"),
          ind("ld2", K * F * gam / (phi * w), "c", "e")};
    break;
  case Named::N5:
    es = {res("ri1", -K * W * W / (phi * psi), "a", "c"), res("ri2", K * W * W, "b", "d"),
          cap("ci1", -1 / (K * F * w), "b", "c"), cap("ci2", 1 / (K * F * phi * w), "a", "d"),
          ind("li1", -K * F / w, "c", "d"), ind("li2", K * F * phi / (gam * w), "a", "d")};
    break;
  case Named::N6:
    es = {res("rdi1", K * phi * psi, "a", "c"), res("rdi2", K * W * W, "b", "d"), ind("ldi1", K * F / w, "a", "d"),
          ind("ldi2", K * F * W / (phi * w), "b", "e"), cap("cdi1", 1 / (K * F * w), "c", "d"),
          cap("cdi2", phi / (K * F * eta * w), "c", "e")};
    break;
  case Named::Fig2a: {
    Rational zeta = fig2_params(p).zeta;
    es = {res("r1", K * phi * psi, "a", "c"), res("r2", K * W * W, "b", "d"), ind("l2", K * F / w, "a", "d"),
          ind("l1", K * F * W / (phi * w), "b", "e"), cap("c1", F / (K * phi * W * W * w), "c", "e"),
          cap("c2", zeta / (K * phi * F * W * W * W * w), "d", "e"),
          cap("c3", F * eta / (K * phi * phi * W * W * w), "c", "d")};
    break;
  }
  case Named::Fig2b: {
    Rational zeta = fig2_params(p).zeta;
    // netlist order and orientations give the states i1 i2 v3 v4 v5
    es = {res("rd1", K * phi * psi, "a", "c"), res("rd2", K * W * W, "b", "d"), ind("ldi1", K * F / w, "d", "a"),
          ind("ldi2", K * F * W / (phi * w), "b", "e"), cap("cdi1", 1 / (K * F * w), "d", "f"),
          cap("cdi3", F * W / (K * zeta * w), "c", "f"), cap("cdi2", phi / (K * eta * F * w), "f", "e")};
    break;
  }
  }
  return make_network("a", "b", std::move(es));
}

struct Classification {
  int storage_min = 5;
  char condition = 0; // 'a' to 'f', or 0 for none
  Network witness;

  std::string condition_name() const { return condition ? std::string(1, condition) : std::string("none"); }
};

inline Classification classify_biquad(const BiquadParams &p) {
  Classification c;
  c.condition = biquad_condition(p);
  switch (c.condition) {
  case 'a': c.storage_min = 3; c.witness = build_named(Named::N1, p); break;
  case 'b': c.storage_min = 3; c.witness = build_named(Named::N2, p); break;
  case 'c': c.storage_min = 4; c.witness = build_named(Named::N3, p); break;
  case 'd': c.storage_min = 4; c.witness = build_named(Named::N4, p); break;
  case 'e': c.storage_min = 4; c.witness = build_named(Named::N5, p); break;
  case 'f': c.storage_min = 4; c.witness = build_named(Named::N6, p); break;
  default:
    c.witness = build_seven_element(theorem2_step(biquad_template(p), p.omega0), SevenElement::rpfg_first);
  }
  return c;
}

} // namespace prsyn
