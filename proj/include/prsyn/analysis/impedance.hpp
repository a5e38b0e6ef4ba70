#pragma once

#include <prsyn/network/graph.hpp>
#include <prsyn/polyrat/matrix.hpp>
#include <prsyn/polyrat/ratfunc.hpp>

#include <optional>

namespace prsyn {

inline RationalFunction element_impedance(const Element &e) {
  switch (e.kind) {
  case ElementKind::Resistor: return RationalFunction(e.value);
  case ElementKind::Inductor: return RationalFunction(Poly{Rational(0), e.value});
  case ElementKind::Capacitor: return RationalFunction(Poly{Rational(1)}, Poly{Rational(0), e.value});
  }
  return {};
}

namespace detail {

// s*Y grounded at port_minus; nullopt for an empty network.
inline std::optional<std::pair<Matrix<Poly>, std::size_t>> scaled_nodal(const Network &n) {
  if (n.elements.empty()) return std::nullopt;
  std::map<std::string, std::size_t> idx;
  for (const auto &v : n.vertices())
    if (v != n.port_minus) idx.emplace(v, idx.size());
  std::size_t m = idx.size();
  Matrix<Poly> y(m, m, Poly());
  for (const auto &e : n.elements) {
    Poly adm;
    switch (e.kind) {
    case ElementKind::Resistor: adm = Poly{Rational(0), Rational(1 / e.value)}; break;
    case ElementKind::Inductor: adm = Poly{Rational(1 / e.value)}; break;
    case ElementKind::Capacitor: adm = Poly::monomial(e.value, 2); break;
    }
    auto h = idx.find(e.head), t = idx.find(e.tail);
    if (h != idx.end()) y(h->second, h->second) += adm;
    if (t != idx.end()) y(t->second, t->second) += adm;
    if (h != idx.end() && t != idx.end()) {
      y(h->second, t->second) -= adm;
      y(t->second, h->second) -= adm;
    }
  }
  return std::make_pair(std::move(y), idx.at(n.port_plus));
}

} // namespace detail

// Nodal analysis grounded at port_minus. Entries of s*Y are polynomials
// (R -> s/R, L -> 1/L, C -> C s^2), so the driving-point impedance is
// s * det(minor at port_plus) / det(sY). nullopt when det(sY) vanishes.
inline std::optional<RationalFunction> impedance(const Network &net) {
  auto sy = detail::scaled_nodal(prune_to_source(net));
  if (!sy) return std::nullopt;
  Poly det = bareiss_determinant(sy->first);
  if (det.zero()) return std::nullopt;
  Poly cof = bareiss_determinant(sy->first.minor(sy->second, sy->second));
  return RationalFunction(Poly::x() * cof, det);
}

// Numerator and denominator of the impedance as they come out of the
// nodal determinants, with only a common power of s removed. Factors that
// cancel at special element values are kept.
inline std::optional<std::pair<Poly, Poly>> impedance_unreduced(const Network &net) {
  auto sy = detail::scaled_nodal(prune_to_source(net));
  if (!sy) return std::nullopt;
  Poly den = bareiss_determinant(sy->first);
  if (den.zero()) return std::nullopt;
  Poly num = Poly::x() * bareiss_determinant(sy->first.minor(sy->second, sy->second));
  while (!num.zero() && sgn(num[0]) == 0 && sgn(den[0]) == 0) {
    num = exact_div(num, Poly::x());
    den = exact_div(den, Poly::x());
  }
  return std::make_pair(num, den);
}

inline std::size_t storage_count(const Network &n) {
  return n.count(ElementKind::Inductor) + n.count(ElementKind::Capacitor);
}

// Storage elements in excess of the McMillan degree; never negative.
inline int mcmillan_gap(const Network &n) {
  auto h = impedance(n);
  if (!h) fail(ErrorKind::InvalidArgument, "network has no impedance");
  return static_cast<int>(storage_count(n)) - h->mcmillan_degree();
}

} // namespace prsyn
