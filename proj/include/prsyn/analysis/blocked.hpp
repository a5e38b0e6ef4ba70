#pragma once

#include <prsyn/analysis/phasor.hpp>
#include <prsyn/polyrat/positive_real.hpp>

namespace prsyn {

struct BlockReport {
  Rational omega0;
  std::vector<std::vector<std::string>> blocked; // maximal-blocked subnetworks
  std::vector<std::string> unblocked;
  std::vector<bool> blocked_oneport_flags;
  bool draws_agree = true;
  // structural conditions checked on the trajectory, by number; the last
  // three only apply with at most four storage elements
  std::map<int, bool> conditions;

  bool ok() const {
    for (const auto &[k, v] : conditions)
      if (!v) return false;
    return true;
  }
};

namespace detail {

inline std::set<std::string> zero_set(const PhasorSolution &s) {
  std::set<std::string> z;
  for (const auto &e : s.elements)
    if (e.current.zero() && e.voltage.zero()) z.insert(e.id);
  return z;
}

// Connected components of the element set, joined through shared vertices.
inline std::vector<std::vector<std::string>> element_components(const Network &n, const std::set<std::string> &ids) {
  std::vector<const Element *> es;
  for (const auto &e : n.elements)
    if (ids.count(e.id)) es.push_back(&e);
  std::vector<int> comp(es.size(), -1);
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (comp[i] != -1) continue;
    int c = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<std::size_t> st{i};
    comp[i] = c;
    while (!st.empty()) {
      auto k = st.back();
      st.pop_back();
      out.back().push_back(es[k]->id);
      for (std::size_t j = 0; j < es.size(); ++j) {
        if (comp[j] != -1) continue;
        bool share = es[j]->head == es[k]->head || es[j]->head == es[k]->tail || es[j]->tail == es[k]->head ||
                     es[j]->tail == es[k]->tail;
        if (share) {
          comp[j] = c;
          st.push_back(j);
        }
      }
    }
  }
  // netlist order inside each component
  for (auto &g : out) {
    std::set<std::string> s(g.begin(), g.end());
    g.clear();
    for (const auto &e : n.elements)
      if (s.count(e.id)) g.push_back(e.id);
  }
  return out;
}

inline std::set<std::string> element_vertices(const Network &n, const std::vector<std::string> &ids) {
  std::set<std::string> s(ids.begin(), ids.end()), v;
  for (const auto &e : n.elements)
    if (s.count(e.id)) {
      v.insert(e.head);
      v.insert(e.tail);
    }
  return v;
}

inline std::optional<CRational> eval_at(const RationalFunction &h, const CRational &z) {
  if (h.den().eval(z).zero()) return std::nullopt;
  return h.eval(z);
}

inline std::optional<CRational> reduced_value(const Reduced &r, const CRational &z) {
  if (std::holds_alternative<OpenCircuit>(r)) return std::nullopt;
  if (std::holds_alternative<ShortCircuit>(r)) return CRational(0);
  auto h = impedance(std::get<Network>(r));
  if (!h) return std::nullopt;
  return eval_at(*h, z);
}

} // namespace detail

// Checks the hypotheses on H at w0: not lossless, no pole at jw0, and
// H(jw0) purely imaginary and nonzero. Throws HypothesesNotMet otherwise.
inline CRational check_blocking_hypotheses(const Network &n, const Rational &omega0) {
  auto h = impedance(n);
  if (!h) fail(ErrorKind::HypothesesNotMet, "network has no impedance");
  if (is_lossless(*h)) fail(ErrorKind::HypothesesNotMet, "impedance is lossless");
  CRational z = CRational::jw(omega0 * omega0);
  auto v = detail::eval_at(*h, z);
  if (!v) fail(ErrorKind::HypothesesNotMet, "impedance has a pole at j*omega0");
  if (sgn(v->re) != 0) fail(ErrorKind::HypothesesNotMet, "Re H(j*omega0) is not zero");
  if (v->zero()) fail(ErrorKind::HypothesesNotMet, "H(j*omega0) is zero");
  return *v;
}

// For each blocked one-port, opening or shorting it keeps H(jw0); when there
// are two, the second is then reduced inside each preserving result too.
inline bool blocked_open_short_check(const Network &n, const BlockReport &report) {
  auto h = impedance(n);
  if (!h) return false;
  CRational z = CRational::jw(report.omega0 * report.omega0);
  auto target = detail::eval_at(*h, z);
  if (!target) return false;
  auto same = [&](const Reduced &r) {
    auto v = detail::reduced_value(r, z);
    return v && *v == *target;
  };
  const auto &bl = report.blocked;
  for (std::size_t a = 0; a < bl.size(); ++a) {
    auto pa = make_oneport(n, bl[a]);
    if (!pa) return false;
    bool any = false;
    for (const Reduced &na : {open_oneport(n, *pa), short_oneport(n, *pa)}) {
      if (!same(na)) continue;
      any = true;
      for (std::size_t b = 0; b < bl.size(); ++b) {
        if (b == a) continue;
        const Network &m = std::get<Network>(na);
        std::optional<OnePort> pb;
        bool present = std::all_of(bl[b].begin(), bl[b].end(), [&](const std::string &id) { return m.find(id); });
        if (present) pb = make_oneport(m, bl[b]);
        if (!pb) continue;
        if (!same(open_oneport(m, *pb)) && !same(short_oneport(m, *pb))) return false;
      }
    }
    if (!any) return false;
  }
  return true;
}

// Maximal-blocked subnetworks of a trajectory at w0 with nonzero driving
// point part. Three random trajectories are drawn and their zero sets
// intersected; draws_agree records whether they all coincided.
inline BlockReport blocked_report(const Network &n, const Rational &omega0, std::uint64_t seed = 1) {
  check_blocking_hypotheses(n, omega0);
  Rational w2 = omega0 * omega0;
  auto ps = detail::phasor_system(n, w2, PhasorDrive::current(Rational(1)));
  std::mt19937_64 rng(seed);
  BlockReport r;
  r.omega0 = omega0;
  std::optional<std::set<std::string>> zero;
  bool nonzero_port = true;
  for (int draw = 0; draw < 3; ++draw) {
    // scale the drive too, so the draws differ even without free directions
    CRational scale = detail::random_coefficient(rng, w2);
    auto x = detail::random_point(ps, rng);
    for (auto &xi : x) xi *= scale;
    auto sol = ps.assemble(x);
    nonzero_port = nonzero_port && !sol.source_current.zero() && !sol.source_voltage.zero();
    auto zs = detail::zero_set(sol);
    if (!zero) {
      zero = zs;
    } else {
      if (zs != *zero) r.draws_agree = false;
      std::set<std::string> keep;
      for (const auto &id : *zero)
        if (zs.count(id)) keep.insert(id);
      zero = keep;
    }
  }
  r.blocked = detail::element_components(n, *zero);
  for (const auto &e : n.elements)
    if (!zero->count(e.id)) r.unblocked.push_back(e.id);
  for (const auto &g : r.blocked) r.blocked_oneport_flags.push_back(make_oneport(n, g).has_value());

  // incidence counts of unblocked elements and the source at each vertex
  std::map<std::string, int> unblocked_at;
  for (const auto &id : r.unblocked) {
    const Element *e = n.find(id);
    ++unblocked_at[e->head];
    ++unblocked_at[e->tail];
  }
  auto source_at = [&](const std::string &v) { return v == n.port_plus || v == n.port_minus; };

  r.conditions[1] = nonzero_port;
  r.conditions[2] = std::all_of(n.elements.begin(), n.elements.end(),
                                [&](const Element &e) { return e.kind != ElementKind::Resistor || zero->count(e.id); });
  bool c3 = true, c4 = true, c5 = true;
  for (const auto &g : r.blocked) {
    auto vs = detail::element_vertices(n, g);
    for (const auto &v : vs) {
      if (source_at(v) && unblocked_at[v] == 0) c3 = false;
      if (unblocked_at[v] > 0 && !source_at(v) && unblocked_at[v] < 2) c4 = false;
    }
    if (vs.count(n.port_plus) && vs.count(n.port_minus)) c5 = false;
    for (const auto &id : r.unblocked) {
      const Element *e = n.find(id);
      if (vs.count(e->head) && vs.count(e->tail)) c5 = false;
    }
  }
  r.conditions[3] = c3;
  r.conditions[4] = c4;
  r.conditions[5] = c5;
  if (storage_count(n) <= 4) {
    bool all_storage = std::all_of(r.unblocked.begin(), r.unblocked.end(),
                                   [&](const std::string &id) { return is_storage(n.find(id)->kind); });
    r.conditions[6] = (r.unblocked.size() == 3 || r.unblocked.size() == 4) && all_storage;
    r.conditions[7] = (r.blocked.size() == 1 || r.blocked.size() == 2) &&
                      std::all_of(r.blocked_oneport_flags.begin(), r.blocked_oneport_flags.end(), [](bool b) { return b; });
    r.conditions[8] = r.conditions[7] && blocked_open_short_check(n, r);
  }
  return r;
}

} // namespace prsyn
