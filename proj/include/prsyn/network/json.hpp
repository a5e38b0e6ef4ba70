#pragma once

#include <prsyn/network/mechanical.hpp>

#include <json.hpp>

namespace prsyn {

inline nlohmann::json to_json(const Network &n) {
  nlohmann::json els = nlohmann::json::array();
  for (const auto &e : n.elements)
    els.push_back({{"id", e.id}, {"kind", std::string(1, kind_letter(e.kind))}, {"head", e.head}, {"tail", e.tail},
                   {"value", to_string(e.value)}});
  return {{"elements", els}, {"port", {n.port_plus, n.port_minus}}};
}

inline nlohmann::json to_json(const MechanicalNetwork &m) {
  nlohmann::json els = nlohmann::json::array();
  for (const auto &e : m.elements)
    els.push_back({{"id", e.id}, {"kind", mech_keyword(e.kind)}, {"head", e.head}, {"tail", e.tail},
                   {"value", to_string(e.value)}});
  return {{"elements", els}, {"port", {m.port_plus, m.port_minus}}};
}

inline Network network_from_json(const nlohmann::json &j) {
  Network n;
  n.port_plus = j.at("port").at(0).get<std::string>();
  n.port_minus = j.at("port").at(1).get<std::string>();
  for (const auto &x : j.at("elements")) {
    Element e;
    e.id = x.at("id").get<std::string>();
    std::string k = x.at("kind").get<std::string>();
    if (k == "R") e.kind = ElementKind::Resistor;
    else if (k == "L") e.kind = ElementKind::Inductor;
    else if (k == "C") e.kind = ElementKind::Capacitor;
    else fail(ErrorKind::SyntaxError, "unknown element kind '" + k + "'");
    e.head = x.at("head").get<std::string>();
    e.tail = x.at("tail").get<std::string>();
    e.value = parse_rational(x.at("value").get<std::string>());
    n.elements.push_back(e);
  }
  validate(n);
  return n;
}

} // namespace prsyn
