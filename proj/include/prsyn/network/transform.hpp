#pragma once

#include <prsyn/network/graph.hpp>

#include <functional>
#include <optional>

namespace prsyn {

// Series-parallel-bridge decomposition tree. Bridge children are the five
// arms in order N1..N5 with terminals a, b and internal vertices c, d:
//   N4: a-c, N1: a-d, N3: c-d, N2: c-b, N5: d-b.
struct DecompNode {
  enum class Type { Leaf, Series, Parallel, Bridge };
  Type type = Type::Leaf;
  Element element; // Leaf only; head/tail ignored
  std::vector<DecompNode> children;
};

namespace detail {
struct WorkEdge {
  std::string u, v;
  DecompNode node;
};

inline DecompNode combine(DecompNode::Type t, DecompNode x, DecompNode y) {
  DecompNode out;
  out.type = t;
  for (auto *part : {&x, &y}) {
    if (part->type == t) {
      for (auto &c : part->children) out.children.push_back(std::move(c));
    } else {
      out.children.push_back(std::move(*part));
    }
  }
  return out;
}
} // namespace detail

// Reduces parallel pairs, internal degree-2 vertices and embedded bridges
// until a single edge spans the port. nullopt when the network does not
// reduce that way.
inline std::optional<DecompNode> decompose(const Network &n) {
  using detail::WorkEdge;
  std::vector<WorkEdge> es;
  for (const auto &e : n.elements) es.push_back({e.head, e.tail, DecompNode{DecompNode::Type::Leaf, e, {}}});
  auto terminal = [&](const std::string &v) { return v == n.port_plus || v == n.port_minus; };

  for (bool changed = true; changed && es.size() > 1;) {
    changed = false;
    // parallel pairs
    for (std::size_t i = 0; i < es.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < es.size() && !changed; ++j) {
        bool same = (es[i].u == es[j].u && es[i].v == es[j].v) || (es[i].u == es[j].v && es[i].v == es[j].u);
        if (!same) continue;
        es[i].node = detail::combine(DecompNode::Type::Parallel, std::move(es[i].node), std::move(es[j].node));
        es.erase(es.begin() + static_cast<long>(j));
        changed = true;
      }
    if (changed) continue;

    std::map<std::string, std::vector<std::size_t>> inc;
    for (std::size_t i = 0; i < es.size(); ++i) {
      inc[es[i].u].push_back(i);
      inc[es[i].v].push_back(i);
    }
    // series through an internal degree-2 vertex
    for (auto &[w, list] : inc) {
      if (terminal(w) || list.size() != 2 || list[0] == list[1]) continue;
      WorkEdge &e1 = es[list[0]], &e2 = es[list[1]];
      std::string x = e1.u == w ? e1.v : e1.u;
      std::string y = e2.u == w ? e2.v : e2.u;
      WorkEdge merged{x, y, detail::combine(DecompNode::Type::Series, std::move(e1.node), std::move(e2.node))};
      std::size_t hi = std::max(list[0], list[1]), lo = std::min(list[0], list[1]);
      es.erase(es.begin() + static_cast<long>(hi));
      es.erase(es.begin() + static_cast<long>(lo));
      es.push_back(std::move(merged));
      changed = true;
      break;
    }
    if (changed) continue;

    // bridge: internal c, d of degree 3 joined by an arm and sharing the
    // two other neighbours x, y
    for (auto &[c, lc] : inc) {
      if (terminal(c) || lc.size() != 3 || changed) continue;
      for (std::size_t k : lc) {
        std::string d = es[k].u == c ? es[k].v : es[k].u;
        if (d == c || terminal(d) || inc[d].size() != 3) continue;
        auto others = [&](const std::string &p, std::size_t skip) {
          std::vector<std::pair<std::string, std::size_t>> o;
          for (std::size_t i : inc[p])
            if (i != skip) o.push_back({es[i].u == p ? es[i].v : es[i].u, i});
          return o;
        };
        auto oc = others(c, k), od = others(d, k);
        if (oc.size() != 2 || od.size() != 2) continue;
        std::string x = oc[0].first, y = oc[1].first;
        if (x == y || x == c || x == d || y == c || y == d) continue;
        std::size_t dx, dy;
        if (od[0].first == x && od[1].first == y) {
          dx = od[0].second;
          dy = od[1].second;
        } else if (od[0].first == y && od[1].first == x) {
          dx = od[1].second;
          dy = od[0].second;
        } else {
          continue;
        }
        DecompNode br;
        br.type = DecompNode::Type::Bridge;
        br.children = {es[dx].node, es[oc[1].second].node, es[k].node, es[oc[0].second].node, es[dy].node};
        std::vector<std::size_t> gone{dx, dy, k, oc[0].second, oc[1].second};
        std::sort(gone.rbegin(), gone.rend());
        for (auto g : gone) es.erase(es.begin() + static_cast<long>(g));
        es.push_back({x, y, std::move(br)});
        changed = true;
        break;
      }
    }
  }
  if (es.size() != 1) return std::nullopt;
  bool spans = (es[0].u == n.port_plus && es[0].v == n.port_minus) || (es[0].u == n.port_minus && es[0].v == n.port_plus);
  if (!spans) return std::nullopt;
  return es[0].node;
}

// Lays a tree out between terminals x and y; fresh internal vertices come
// from `fresh`.
inline void realize(const DecompNode &t, const std::string &x, const std::string &y,
                    const std::function<std::string()> &fresh, std::vector<Element> &out) {
  switch (t.type) {
  case DecompNode::Type::Leaf: {
    Element e = t.element;
    e.head = x;
    e.tail = y;
    out.push_back(e);
    return;
  }
  case DecompNode::Type::Parallel:
    for (const auto &c : t.children) realize(c, x, y, fresh, out);
    return;
  case DecompNode::Type::Series: {
    std::string prev = x;
    for (std::size_t i = 0; i < t.children.size(); ++i) {
      std::string next = i + 1 == t.children.size() ? y : fresh();
      realize(t.children[i], prev, next, fresh, out);
      prev = next;
    }
    return;
  }
  case DecompNode::Type::Bridge: {
    std::string c = fresh(), d = fresh();
    realize(t.children[3], x, c, fresh, out); // N4
    realize(t.children[0], x, d, fresh, out); // N1
    realize(t.children[2], c, d, fresh, out); // N3
    realize(t.children[1], c, y, fresh, out); // N2
    realize(t.children[4], d, y, fresh, out); // N5
    return;
  }
  }
}

inline Network realize(const DecompNode &t, const std::string &a, const std::string &b) {
  Network n;
  n.port_plus = a;
  n.port_minus = b;
  int k = 0;
  auto fresh = [&] {
    std::string v;
    do v = "n" + std::to_string(++k);
    while (v == a || v == b);
    return v;
  };
  realize(t, a, b, fresh, n.elements);
  return n;
}

inline Element dual_element(Element e) {
  switch (e.kind) {
  case ElementKind::Resistor: e.value = 1 / e.value; break;
  case ElementKind::Inductor: e.kind = ElementKind::Capacitor; break;
  case ElementKind::Capacitor: e.kind = ElementKind::Inductor; break;
  }
  return e;
}

inline DecompNode dual_tree(const DecompNode &t) {
  DecompNode d;
  switch (t.type) {
  case DecompNode::Type::Leaf:
    d.element = dual_element(t.element);
    return d;
  case DecompNode::Type::Series:
  case DecompNode::Type::Parallel:
    d.type = t.type == DecompNode::Type::Series ? DecompNode::Type::Parallel : DecompNode::Type::Series;
    for (const auto &c : t.children) d.children.push_back(dual_tree(c));
    return d;
  case DecompNode::Type::Bridge:
    // the planar dual of the bridge is again a bridge; arms 1 and 2 trade places
    d.type = DecompNode::Type::Bridge;
    d.children = {dual_tree(t.children[1]), dual_tree(t.children[0]), dual_tree(t.children[2]),
                  dual_tree(t.children[3]), dual_tree(t.children[4])};
    return d;
  }
  return d;
}

// Network whose impedance is the reciprocal. Supported for anything built
// from series, parallel and bridge connections.
inline Network dual(const Network &n) {
  auto t = decompose(n);
  if (!t) fail(ErrorKind::NotPlanarDualizable, "network is not a series/parallel/bridge composition");
  return realize(dual_tree(*t), n.port_plus, n.port_minus);
}

// Impedance H(w0^2/s): L -> C = 1/(L w0^2), C -> L = 1/(C w0^2).
inline Network frequency_invert(const Network &n, const Rational &omega0) {
  if (sgn(omega0) <= 0) fail(ErrorKind::NonpositiveValue, "omega0 must be positive");
  Rational w2 = omega0 * omega0;
  Network out = n;
  for (auto &e : out.elements) {
    if (e.kind == ElementKind::Inductor) {
      e.kind = ElementKind::Capacitor;
      e.value = 1 / (e.value * w2);
    } else if (e.kind == ElementKind::Capacitor) {
      e.kind = ElementKind::Inductor;
      e.value = 1 / (e.value * w2);
    }
  }
  return out;
}

// Capacitors touching the port's second terminal (the mechanical ground).
inline std::vector<std::pair<std::string, bool>> report_grounded_capacitors(const Network &n) {
  std::vector<std::pair<std::string, bool>> out;
  for (const auto &e : n.elements)
    if (e.kind == ElementKind::Capacitor) out.push_back({e.id, e.head == n.port_minus || e.tail == n.port_minus});
  return out;
}

} // namespace prsyn
