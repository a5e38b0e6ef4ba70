#pragma once

#include <prsyn/analysis/blocked.hpp>
#include <prsyn/analysis/pbh.hpp>

#include <json.hpp>

namespace prsyn {

inline nlohmann::json to_json(const CRational &z) {
  return {{"re", to_string(z.re)}, {"im", to_string(z.im)}, {"omega_sq", to_string(z.w2)}, {"text", to_string(z)}};
}

inline nlohmann::json to_json(const PhasorSolution &s) {
  nlohmann::json els = nlohmann::json::array();
  for (const auto &e : s.elements) els.push_back({{"id", e.id}, {"current", to_json(e.current)}, {"voltage", to_json(e.voltage)}});
  return {{"omega_sq", to_string(s.omega_sq)},
          {"source_current", to_json(s.source_current)},
          {"source_voltage", to_json(s.source_voltage)},
          {"elements", els},
          {"energy_residual", to_string(energy_balance(s))}};
}

inline nlohmann::json to_json(const BlockReport &r) {
  nlohmann::json conds = nlohmann::json::object();
  for (const auto &[k, v] : r.conditions) conds[std::to_string(k)] = v;
  return {{"omega0", to_string(r.omega0)},
          {"blocked", r.blocked},
          {"blocked_oneport", r.blocked_oneport_flags},
          {"unblocked", r.unblocked},
          {"draws_agree", r.draws_agree},
          {"conditions", conds},
          {"ok", r.ok()}};
}

inline nlohmann::json to_json(const Matrix<Rational> &m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline nlohmann::json to_json(const StateSpace &ss) {
  return {{"states", ss.state_labels}, {"A", to_json(ss.A)}, {"B", to_json(ss.B)}, {"C", to_json(ss.C)}, {"D", to_string(ss.D)}};
}

inline nlohmann::json to_json(const ExtractionFailure &f) {
  return {{"failure", to_string(f.kind)}, {"elements", f.elements}};
}

inline nlohmann::json to_json(const Mode &m) {
  nlohmann::json j;
  if (m.exact) j["eigenvalue"] = to_string(*m.exact);
  j["approx"] = {{"re", m.approx.real().str(20)}, {"im", m.approx.imag().str(20)}};
  if (!m.vector.empty()) {
    std::vector<std::string> v;
    for (const auto &x : m.vector) v.push_back(to_string(x));
    j["vector"] = v;
  }
  return j;
}

inline nlohmann::json to_json(const PbhReport &r) {
  nlohmann::json u = nlohmann::json::array(), o = nlohmann::json::array();
  for (const auto &m : r.uncontrollable_modes) u.push_back(to_json(m));
  for (const auto &m : r.unobservable_modes) o.push_back(to_json(m));
  return {{"uncontrollable_modes", u}, {"unobservable_modes", o}, {"stabilizable", r.stabilizable}, {"detectable", r.detectable}};
}

} // namespace prsyn
