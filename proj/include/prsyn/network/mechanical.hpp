#pragma once

#include <prsyn/network/netlist.hpp>

namespace prsyn {

// Force-current analogy: damper c = 1/R, spring k = 1/L, inerter b = C.
enum class MechKind { Damper, Spring, Inerter };

struct MechElement {
  std::string id;
  MechKind kind = MechKind::Damper;
  Rational value;
  std::string head, tail;

  friend bool operator==(const MechElement &a, const MechElement &b) {
    return a.id == b.id && a.kind == b.kind && a.value == b.value && a.head == b.head && a.tail == b.tail;
  }
};

struct MechanicalNetwork {
  std::vector<MechElement> elements;
  std::string port_plus, port_minus;

  friend bool operator==(const MechanicalNetwork &a, const MechanicalNetwork &b) {
    return a.port_plus == b.port_plus && a.port_minus == b.port_minus && a.elements == b.elements;
  }
};

inline const char *mech_keyword(MechKind k) {
  switch (k) {
  case MechKind::Damper: return "DAMPER";
  case MechKind::Spring: return "SPRING";
  case MechKind::Inerter: return "INERTER";
  }
  return "?";
}

inline MechanicalNetwork to_mechanical(const Network &n) {
  MechanicalNetwork m{{}, n.port_plus, n.port_minus};
  for (const auto &e : n.elements) {
    MechElement x{e.id, MechKind::Damper, e.value, e.head, e.tail};
    switch (e.kind) {
    case ElementKind::Resistor: x.kind = MechKind::Damper; x.value = 1 / e.value; break;
    case ElementKind::Inductor: x.kind = MechKind::Spring; x.value = 1 / e.value; break;
    case ElementKind::Capacitor: x.kind = MechKind::Inerter; break;
    }
    m.elements.push_back(x);
  }
  return m;
}

inline Network from_mechanical(const MechanicalNetwork &m) {
  Network n;
  n.port_plus = m.port_plus;
  n.port_minus = m.port_minus;
  for (const auto &x : m.elements) {
    if (sgn(x.value) <= 0) fail(ErrorKind::NonpositiveValue, "element '" + x.id + "' has value " + to_string(x.value));
    Element e{x.id, ElementKind::Resistor, x.value, x.head, x.tail};
    switch (x.kind) {
    case MechKind::Damper: e.kind = ElementKind::Resistor; e.value = 1 / x.value; break;
    case MechKind::Spring: e.kind = ElementKind::Inductor; e.value = 1 / x.value; break;
    case MechKind::Inerter: e.kind = ElementKind::Capacitor; break;
    }
    n.elements.push_back(e);
  }
  validate(n);
  return n;
}

inline MechanicalNetwork parse_mechanical(const std::string &text) {
  static const std::map<std::string, MechKind> kinds{
      {"DAMPER", MechKind::Damper}, {"SPRING", MechKind::Spring}, {"INERTER", MechKind::Inerter}};
  MechanicalNetwork m;
  detail::read_statements(text, kinds, m.elements, m.port_plus, m.port_minus);
  from_mechanical(m); // validates values and connectivity
  return m;
}

inline std::string serialize_mechanical(const MechanicalNetwork &m) {
  std::string s;
  for (const auto &e : m.elements)
    s += std::string(mech_keyword(e.kind)) + " " + e.id + " " + e.head + " " + e.tail + " " + to_string(e.value) + "\n";
  return s + "PORT " + m.port_plus + " " + m.port_minus + "\n";
}

} // namespace prsyn
