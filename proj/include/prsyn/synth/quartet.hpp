#pragma once

#include <prsyn/network/transform.hpp>
#include <prsyn/synth/seven_element.hpp>

namespace prsyn {

enum class QuartetFamily { Q7, Q8, Q9, Q10, N11, N12 };
// a network, its frequency inverse, its dual, and the dual of the inverse
enum class QuartetMember { base, i, d, di };

// Element parameters of a quartet member. E is derived for Q8 to Q10 and
// given for N11 and N12, whose variant 'a' has A = 0 (first resistor
// shorted) and variant 'b' has C = 0 (third resistor opened).
struct QuartetParams {
  QuartetFamily family = QuartetFamily::Q7;
  QuartetMember member = QuartetMember::base;
  char variant = 0;
  Rational A, B, C, D, E;
};

inline std::string quartet_name(const QuartetParams &q) {
  static const char *base[] = {"N7", "N8", "N9", "N10", "N11", "N12"};
  static const char *member[] = {"", "i", "d", "di"};
  std::string s = base[static_cast<int>(q.family)];
  if (q.variant) s += q.variant;
  return s + member[static_cast<int>(q.member)];
}

// Parses names like "N8", "N7di", "N11ai".
inline QuartetParams parse_quartet_name(const std::string &name) {
  QuartetParams q;
  std::size_t k = 0;
  if (name.size() < 2 || name[0] != 'N') fail(ErrorKind::InvalidArgument, "unknown quartet member '" + name + "'");
  k = 1;
  int num = 0;
  while (k < name.size() && std::isdigit(static_cast<unsigned char>(name[k]))) num = num * 10 + (name[k++] - '0');
  if (num < 7 || num > 12) fail(ErrorKind::InvalidArgument, "unknown quartet member '" + name + "'");
  q.family = static_cast<QuartetFamily>(num - 7);
  if (k < name.size() && (name[k] == 'a' || name[k] == 'b') && num >= 11) q.variant = name[k++];
  std::string rest = name.substr(k);
  if (rest.empty()) q.member = QuartetMember::base;
  else if (rest == "i") q.member = QuartetMember::i;
  else if (rest == "d") q.member = QuartetMember::d;
  else if (rest == "di") q.member = QuartetMember::di;
  else fail(ErrorKind::InvalidArgument, "unknown quartet member '" + name + "'");
  return q;
}

namespace detail {

inline void require(bool ok, const std::string &what) {
  if (!ok) fail(ErrorKind::ConstraintViolated, what);
}

} // namespace detail

// Validates the family constraints and fills in a derived E.
inline QuartetParams complete_quartet(QuartetParams q) {
  using detail::require;
  switch (q.family) {
  case QuartetFamily::Q7:
    require(sgn(q.A) > 0 && sgn(q.B) > 0 && sgn(q.C) > 0, "Q7 needs A, B, C > 0");
    break;
  case QuartetFamily::Q8:
    require(sgn(q.A) > 0 && sgn(q.B) > 0 && sgn(q.C) > 0 && sgn(q.D) > 0, "Q8 needs A, B, C, D > 0");
    q.E = q.C * q.D / (q.C + q.D);
    break;
  case QuartetFamily::Q9:
    require(sgn(q.A) > 0 && sgn(q.B) > 0 && sgn(q.C) > 0 && sgn(q.D) > 0, "Q9 needs A, B, C, D > 0");
    q.E = (q.A + q.B) / (q.B + q.D);
    break;
  case QuartetFamily::Q10:
    require(sgn(q.A) > 0 && sgn(q.B) > 0 && sgn(q.C) > 0, "Q10 needs A, B, C > 0");
    require(sgn((q.B - q.D) * (q.C - q.D)) > 0 && q.B != q.C, "Q10 needs (B-D)(C-D) > 0 and B != C");
    q.E = (q.B - q.D) / (q.C - q.D);
    break;
  case QuartetFamily::N11:
  case QuartetFamily::N12:
    require(q.variant == 0 || q.variant == 'a' || q.variant == 'b', "variant must be a or b");
    require(sgn(q.B) > 0 && sgn(q.D) > 0 && sgn(q.E) > 0, "N11 and N12 need B, D, E > 0");
    require(q.variant == 'a' ? sgn(q.A) == 0 : sgn(q.A) > 0, q.variant == 'a' ? "variant a has A = 0" : "need A > 0");
    require(q.variant == 'b' ? sgn(q.C) == 0 : sgn(q.C) > 0, q.variant == 'b' ? "variant b has C = 0" : "need C > 0");
    break;
  }
  if (q.family != QuartetFamily::N11 && q.family != QuartetFamily::N12)
    require(q.variant == 0, "only N11 and N12 have a and b variants");
  return q;
}

inline Network build_quartet(const QuartetParams &raw, const Rational &omega0) {
  using namespace detail;
  if (sgn(omega0) <= 0) fail(ErrorKind::ConstraintViolated, "omega0 must be positive");
  QuartetParams q = complete_quartet(raw);
  const Rational &A = q.A, &B = q.B, &C = q.C, &D = q.D, &E = q.E, &w = omega0;
  std::vector<Element> es;
  switch (q.family) {
  case QuartetFamily::Q7:
    es = {res("r1", A, "a", "c"), res("r2", B, "b", "d"), ind("l1", C / w, "a", "d"), ind("l2", C / w, "b", "c"),
          cap("c1", 1 / (C * w), "c", "d")};
    break;
  case QuartetFamily::Q8:
    es = {res("r1", A, "a", "c"), res("r2", B, "b", "d"), ind("l1", D / w, "b", "c"), ind("l2", E / w, "a", "d"),
          cap("c1", 1 / (D * w), "c", "d"), cap("c2", 1 / (C * w), "a", "d")};
    break;
  case QuartetFamily::Q9:
    es = {res("r1", C, "a", "c"), ind("l1", A / (E * w), "a", "d"), ind("l2", D * E / w, "b", "c"),
          cap("c1", 1 / (A * w), "b", "d"), cap("c2", 1 / (B * w), "c", "d")};
    break;
  case QuartetFamily::Q10:
    es = {res("r1", A, "c", "d"), ind("l1", B / w, "a", "c"), ind("l2", C / w, "d", "b"),
          cap("c1", 1 / (C * E * w), "a", "d"), cap("c2", E / (B * w), "c", "b")};
    break;
  case QuartetFamily::N11:
  case QuartetFamily::N12: {
    // the internal vertex e merges into a when the first resistor is shorted
    std::string e = q.variant == 'a' ? "a" : "e";
    if (q.variant != 'a') es.push_back(res("r1", A, "a", "e"));
    if (q.variant != 'b') es.push_back(res("r3", 1 / C, e, "d"));
    if (q.family == QuartetFamily::N11) es.push_back(cap("c2", 1 / (D * w), e, "d"));
    else es.push_back(ind("l3", D / w, e, "d"));
    es.push_back(res("r2", B, "c", "b"));
    es.push_back(cap("c1", 1 / (E * w), "c", "d"));
    es.push_back(ind("l1", E / w, "a", "c"));
    es.push_back(ind("l2", E / w, "d", "b"));
    break;
  }
  }
  Network n = make_network("a", "b", std::move(es));
  switch (q.member) {
  case QuartetMember::base: return n;
  case QuartetMember::i: return frequency_invert(n, omega0);
  case QuartetMember::d: return dual(n);
  case QuartetMember::di: return dual(frequency_invert(n, omega0));
  }
  return n;
}

} // namespace prsyn
