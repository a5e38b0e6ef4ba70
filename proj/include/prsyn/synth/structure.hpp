#pragma once

#include <prsyn/analysis/impedance.hpp>
#include <prsyn/polyrat/positive_real.hpp>

#include <array>

namespace prsyn {

// One-ports of the five-arm bridge on terminals a, b (the port) and c, d:
// arm 1 joins a-d, arm 2 c-b, arm 3 c-d, arm 4 a-c and arm 5 d-b.
struct BridgeAssignment {
  std::string a, b, c, d;
  std::array<std::vector<std::string>, 5> arms;
};

struct StructureMatch {
  BridgeAssignment bridge;
  int condition = 0; // 1 to 4
  std::array<CRational, 5> z; // arm impedances at j w0
};

namespace detail {

struct Arm {
  std::vector<const Element *> el;
  std::optional<CRational> z;

  std::size_t count(ElementKind k) const {
    return static_cast<std::size_t>(std::count_if(el.begin(), el.end(), [k](const Element *e) { return e->kind == k; }));
  }
  std::size_t storage() const { return count(ElementKind::Inductor) + count(ElementKind::Capacitor); }
  bool only(ElementKind k) const { return !el.empty() && count(k) == el.size(); }
  bool single(ElementKind k) const { return el.size() == 1 && el[0]->kind == k; }
  // an inductor and a capacitor, in series or in parallel
  bool lc_pair() const { return el.size() == 2 && count(ElementKind::Inductor) == 1 && count(ElementKind::Capacitor) == 1; }
};

// Splits the elements into arms; nullopt unless every group of elements
// joined through non-terminal vertices touches exactly one terminal pair
// among the five bridge positions.
inline std::optional<std::array<std::vector<const Element *>, 5>>
split_arms(const Network &n, const std::string &a, const std::string &b, const std::string &c, const std::string &d) {
  auto terminal = [&](const std::string &v) { return v == a || v == b || v == c || v == d; };
  std::vector<int> group(n.elements.size(), -1);
  int groups = 0;
  for (std::size_t i = 0; i < n.elements.size(); ++i) {
    if (group[i] != -1) continue;
    std::vector<std::size_t> st{i};
    group[i] = groups;
    while (!st.empty()) {
      auto k = st.back();
      st.pop_back();
      const Element &e = n.elements[k];
      for (std::size_t j = 0; j < n.elements.size(); ++j) {
        if (group[j] != -1) continue;
        const Element &f = n.elements[j];
        bool share = false;
        for (const auto *v : {&e.head, &e.tail})
          if (!terminal(*v) && (f.head == *v || f.tail == *v)) share = true;
        if (share) {
          group[j] = groups;
          st.push_back(j);
        }
      }
    }
    ++groups;
  }
  const std::array<std::pair<std::string, std::string>, 5> ends{{{a, d}, {c, b}, {c, d}, {a, c}, {d, b}}};
  std::array<std::vector<const Element *>, 5> arms;
  for (int g = 0; g < groups; ++g) {
    std::set<std::string> touched;
    std::vector<const Element *> members;
    for (std::size_t i = 0; i < n.elements.size(); ++i) {
      if (group[i] != g) continue;
      members.push_back(&n.elements[i]);
      for (const auto *v : {&n.elements[i].head, &n.elements[i].tail})
        if (terminal(*v)) touched.insert(*v);
    }
    int slot = -1;
    for (int k = 0; k < 5; ++k)
      if (touched == std::set<std::string>{ends[static_cast<std::size_t>(k)].first, ends[static_cast<std::size_t>(k)].second})
        slot = k;
    if (slot < 0) return std::nullopt;
    auto &arm = arms[static_cast<std::size_t>(slot)];
    arm.insert(arm.end(), members.begin(), members.end());
  }
  for (const auto &arm : arms)
    if (arm.empty()) return std::nullopt;
  return arms;
}

inline std::optional<CRational> arm_impedance(const std::vector<const Element *> &el, const std::string &x,
                                              const std::string &y, const Rational &w2) {
  Network m;
  for (const auto *e : el) m.elements.push_back(*e);
  m.port_plus = x;
  m.port_minus = y;
  auto h = impedance(m);
  if (!h) return std::nullopt;
  CRational jw = CRational::jw(w2);
  if (h->den().eval(jw).zero()) return std::nullopt;
  return h->eval(jw);
}

inline bool eq(const std::optional<CRational> &x, const std::optional<CRational> &y) { return x && y && *x == *y; }
inline bool eq_neg(const std::optional<CRational> &x, const std::optional<CRational> &y) { return x && y && *x == -*y; }

// Structural conditions in order, arms indexed 0..4 for 1..5.
inline int lemma_condition(const std::array<Arm, 5> &n) {
  using K = ElementKind;
  const auto &z = [&](int k) -> const std::optional<CRational> & { return n[static_cast<std::size_t>(k - 1)].z; };
  auto arm = [&](int k) -> const Arm & { return n[static_cast<std::size_t>(k - 1)]; };
  for (auto [x, y] : {std::pair{K::Capacitor, K::Inductor}, std::pair{K::Inductor, K::Capacitor}}) {
    if (arm(1).only(K::Resistor) && arm(2).single(x) && arm(3).single(x) && arm(4).single(y) && arm(5).single(y) &&
        z(2) && z(3) && z(4) && z(5) && (*z(2) * (*z(3) + *z(4)) + *z(4) * (*z(3) + *z(5))).zero())
      return 1;
  }
  if (arm(1).single(K::Capacitor) && arm(2).single(K::Capacitor) && arm(3).only(K::Resistor) &&
      arm(4).single(K::Inductor) && arm(5).single(K::Inductor) && z(1) && z(2) && z(4) && z(5) &&
      *z(1) * *z(2) == *z(4) * *z(5) && *z(1) != -*z(4) && *z(1) != -*z(5))
    return 2;
  auto axis = [&] { return eq_neg(z(3), z(4)) && eq_neg(z(3), z(5)); };
  for (auto [x, y] : {std::pair{K::Capacitor, K::Inductor}, std::pair{K::Inductor, K::Capacitor}}) {
    if (arm(1).count(K::Resistor) > 0 && arm(1).storage() <= 1 && arm(2).only(K::Resistor) && arm(3).only(x) &&
        arm(4).only(y) && arm(5).only(y) && axis())
      return 3;
  }
  for (auto [x, y] : {std::pair{K::Capacitor, K::Inductor}, std::pair{K::Inductor, K::Capacitor}}) {
    if (arm(1).only(K::Resistor) && arm(2).only(K::Resistor) && arm(3).single(x) && arm(4).lc_pair() &&
        arm(5).single(y) && axis())
      return 4;
  }
  return 0;
}

} // namespace detail

// Decomposes n into the five-arm bridge and reports which of the four
// structural conditions for minimum-function networks with at most four
// storage elements holds at w0. Each labelling of the bridge preserving the
// port is tried: both port orientations and both orders of c and d.
inline StructureMatch match_minimum_structure(const Network &n, const Rational &omega0) {
  if (storage_count(n) > 4) fail(ErrorKind::NoMatch, "more than four storage elements");
  auto h = impedance(n);
  if (!h || !is_minimum_function(*h)) fail(ErrorKind::NoMatch, "impedance is not a minimum function");
  Rational w2 = omega0 * omega0;
  CRational jw = CRational::jw(w2);
  if (h->den().eval(jw).zero() || sgn(h->eval(jw).re) != 0)
    fail(ErrorKind::NoMatch, "omega0 is not a minimum frequency");

  auto vs = n.vertices();
  for (int flip = 0; flip < 2; ++flip) {
    std::string a = flip ? n.port_minus : n.port_plus, b = flip ? n.port_plus : n.port_minus;
    for (const auto &c : vs)
      for (const auto &d : vs) {
        if (c == d || c == a || c == b || d == a || d == b) continue;
        auto arms = detail::split_arms(n, a, b, c, d);
        if (!arms) continue;
        const std::array<std::pair<std::string, std::string>, 5> ends{{{a, d}, {c, b}, {c, d}, {a, c}, {d, b}}};
        std::array<detail::Arm, 5> info;
        for (std::size_t k = 0; k < 5; ++k) {
          info[k].el = (*arms)[k];
          info[k].z = detail::arm_impedance(info[k].el, ends[k].first, ends[k].second, w2);
        }
        int cond = detail::lemma_condition(info);
        if (!cond) continue;
        StructureMatch m;
        m.bridge = {a, b, c, d, {}};
        for (std::size_t k = 0; k < 5; ++k) {
          for (const auto *e : info[k].el) m.bridge.arms[k].push_back(e->id);
          m.z[k] = info[k].z.value_or(CRational());
        }
        m.condition = cond;
        return m;
      }
  }
  fail(ErrorKind::NoMatch, "no bridge labelling satisfies the structural conditions");
}

} // namespace prsyn
