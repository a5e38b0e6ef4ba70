#pragma once

#include <prsyn/analysis/impedance.hpp>
#include <prsyn/polyrat/sturm.hpp>

#include <variant>

namespace prsyn {

// dx/dt = A x + B i, v = C x + D i with x the inductor currents (head to
// tail) followed by the capacitor voltages (head minus tail).
struct StateSpace {
  Matrix<Rational> A, B, C;
  Rational D;
  std::vector<std::string> state_labels;
};

struct ExtractionFailure {
  enum class Kind { CapacitorLoop, InductorCutset };
  Kind kind;
  std::vector<std::string> elements;
};

inline const char *to_string(ExtractionFailure::Kind k) {
  return k == ExtractionFailure::Kind::CapacitorLoop ? "CapacitorLoop" : "InductorCutset";
}

namespace detail {

// First cycle made only of capacitors, in netlist order.
inline std::optional<std::vector<std::string>> capacitor_loop(const Network &n) {
  std::map<std::string, std::string> parent;
  std::function<std::string(const std::string &)> root = [&](const std::string &v) -> std::string {
    auto it = parent.find(v);
    if (it == parent.end() || it->second == v) return v;
    return it->second = root(it->second);
  };
  std::vector<const Element *> forest;
  for (const auto &e : n.elements) {
    if (e.kind != ElementKind::Capacitor) continue;
    std::string a = root(e.head), b = root(e.tail);
    if (a != b) {
      parent[a] = b;
      forest.push_back(&e);
      continue;
    }
    // path from head to tail through the forest closes the loop
    std::map<std::string, std::pair<std::string, std::string>> via; // vertex -> (prev, element)
    std::vector<std::string> st{e.head};
    via[e.head] = {"", ""};
    while (!st.empty()) {
      auto v = st.back();
      st.pop_back();
      for (const auto *f : forest) {
        const std::string *w = f->head == v ? &f->tail : (f->tail == v ? &f->head : nullptr);
        if (w && !via.count(*w)) {
          via[*w] = {v, f->id};
          st.push_back(*w);
        }
      }
    }
    std::set<std::string> loop{e.id};
    for (std::string v = e.tail; v != e.head; v = via[v].first) loop.insert(via[v].second);
    std::vector<std::string> out;
    for (const auto &x : n.elements)
      if (loop.count(x.id)) out.push_back(x.id);
    return out;
  }
  return std::nullopt;
}

// Inductors crossing a cut left when only resistors and capacitors are kept.
inline std::optional<std::vector<std::string>> inductor_cutset(const Network &n) {
  auto vs = n.vertices();
  std::set<std::string> side{vs.front()};
  std::vector<std::string> st{vs.front()};
  while (!st.empty()) {
    auto v = st.back();
    st.pop_back();
    for (const auto &e : n.elements) {
      if (e.kind == ElementKind::Inductor) continue;
      const std::string *w = e.head == v ? &e.tail : (e.tail == v ? &e.head : nullptr);
      if (w && side.insert(*w).second) st.push_back(*w);
    }
  }
  if (side.size() == vs.size()) return std::nullopt;
  std::vector<std::string> out;
  for (const auto &e : n.elements)
    if (e.kind == ElementKind::Inductor && side.count(e.head) != side.count(e.tail)) out.push_back(e.id);
  return out;
}

} // namespace detail

// Fails when the capacitors close a loop or the inductors, possibly with the
// current source, form a cutset.
inline std::variant<StateSpace, ExtractionFailure> state_space(const Network &n) {
  if (auto loop = detail::capacitor_loop(n)) return ExtractionFailure{ExtractionFailure::Kind::CapacitorLoop, *loop};
  if (auto cut = detail::inductor_cutset(n)) return ExtractionFailure{ExtractionFailure::Kind::InductorCutset, *cut};

  std::vector<std::size_t> states;
  for (auto kind : {ElementKind::Inductor, ElementKind::Capacitor})
    for (std::size_t k = 0; k < n.elements.size(); ++k)
      if (n.elements[k].kind == kind) states.push_back(k);
  std::map<std::string, std::size_t> pot;
  for (const auto &v : n.vertices())
    if (v != n.port_minus) pot.emplace(v, pot.size());

  // unknowns: potentials then element currents; inputs: states then i
  std::size_t nv = pot.size(), m = n.elements.size(), ns = states.size();
  Matrix<Rational> a(nv + m, nv + m), b(nv + m, ns + 1);
  auto put_v = [&](std::size_t row, const Element &e, const Rational &c) {
    if (e.head != n.port_minus) a(row, pot.at(e.head)) += c;
    if (e.tail != n.port_minus) a(row, pot.at(e.tail)) -= c;
  };
  std::vector<std::size_t> state_of(m, ns);
  for (std::size_t s = 0; s < ns; ++s) state_of[states[s]] = s;
  for (std::size_t k = 0; k < m; ++k) {
    const Element &e = n.elements[k];
    if (e.head != n.port_minus) a(pot.at(e.head), nv + k) += 1;
    if (e.tail != n.port_minus) a(pot.at(e.tail), nv + k) -= 1;
    std::size_t row = nv + k;
    switch (e.kind) {
    case ElementKind::Resistor:
      put_v(row, e, Rational(1));
      a(row, nv + k) = Rational(-e.value);
      break;
    case ElementKind::Inductor:
      a(row, nv + k) = 1;
      b(row, state_of[k]) = 1;
      break;
    case ElementKind::Capacitor:
      put_v(row, e, Rational(1));
      b(row, state_of[k]) = 1;
      break;
    }
  }
  b(pot.at(n.port_plus), ns) = 1;
  auto x = solve(a, b);
  if (!x || rank(a) != nv + m) fail(ErrorKind::InvalidArgument, "state equations are singular");

  auto potential = [&](const std::string &v, std::size_t col) -> Rational {
    return v == n.port_minus ? Rational(0) : (*x)(pot.at(v), col);
  };
  StateSpace ss{Matrix<Rational>(ns, ns), Matrix<Rational>(ns, 1), Matrix<Rational>(1, ns), 0, {}};
  for (std::size_t s = 0; s < ns; ++s) {
    const Element &e = n.elements[states[s]];
    ss.state_labels.push_back(e.id);
    for (std::size_t col = 0; col <= ns; ++col) {
      Rational rate = e.kind == ElementKind::Inductor ? Rational((potential(e.head, col) - potential(e.tail, col)) / e.value)
                                                      : Rational((*x)(nv + states[s], col) / e.value);
      if (col < ns) ss.A(s, col) = rate;
      else ss.B(s, 0) = rate;
    }
  }
  for (std::size_t col = 0; col < ns; ++col) ss.C(0, col) = potential(n.port_plus, col);
  ss.D = potential(n.port_plus, ns);
  return ss;
}

// D + C (sI - A)^{-1} B via det(sI - A + BC) = det(sI - A)(1 + C (sI - A)^{-1} B).
inline RationalFunction transfer_function(const StateSpace &ss) {
  Poly chi = characteristic_polynomial(ss.A);
  Poly chi_bc = characteristic_polynomial(ss.A - ss.B * ss.C);
  return RationalFunction(ss.D) + RationalFunction(chi_bc - chi, chi);
}

} // namespace prsyn
