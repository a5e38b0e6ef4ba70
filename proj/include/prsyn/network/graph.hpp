#pragma once

#include <prsyn/network/netlist.hpp>

#include <functional>
#include <optional>
#include <variant>

namespace prsyn {

// Rows follow vertices() (lexicographic); column 0 is the source, column k
// is element k-1. +1 where the edge leaves the vertex, -1 where it enters.
inline std::vector<std::vector<int>> incidence_matrix(const Network &n) {
  auto g = detail::index_graph(n);
  std::vector<std::vector<int>> m(g.names.size(), std::vector<int>(g.edges.size(), 0));
  for (std::size_t j = 0; j < g.edges.size(); ++j) {
    auto [u, v] = g.edges[j];
    if (u == v) continue;
    m[static_cast<std::size_t>(u)][j] += 1;
    m[static_cast<std::size_t>(v)][j] -= 1;
  }
  return m;
}

// Articulation points of the graph including the source edge.
inline std::set<std::string> cut_vertices(const Network &n) {
  auto g = detail::index_graph(n);
  auto comp = detail::edge_bicomponents(g.names.size(), g.edges);
  std::vector<std::set<int>> per_vertex(g.names.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    per_vertex[static_cast<std::size_t>(g.edges[i].first)].insert(comp[i]);
    per_vertex[static_cast<std::size_t>(g.edges[i].second)].insert(comp[i]);
  }
  std::set<std::string> out;
  for (std::size_t v = 0; v < g.names.size(); ++v)
    if (per_vertex[v].size() > 1) out.insert(g.names[v]);
  return out;
}

inline bool is_connected(const Network &n) {
  auto g = detail::index_graph(n);
  std::vector<std::vector<int>> adj(g.names.size());
  for (auto [u, v] : g.edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  std::vector<bool> seen(g.names.size(), false);
  std::vector<int> st{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!st.empty()) {
    int v = st.back();
    st.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++count;
        st.push_back(w);
      }
  }
  return count == g.names.size();
}

inline bool is_biconnected(const Network &n) {
  if (!is_connected(n)) return false;
  for (const auto &e : n.elements)
    if (e.head == e.tail) return false;
  return cut_vertices(n).empty();
}

namespace detail {
// Is `to` reachable from `from` using only elements accepted by `use`?
inline bool reachable(const Network &n, const std::string &from, const std::string &to,
                      const std::function<bool(const Element &)> &use) {
  std::set<std::string> seen{from};
  std::vector<std::string> st{from};
  while (!st.empty()) {
    std::string v = st.back();
    st.pop_back();
    if (v == to) return true;
    for (const auto &e : n.elements) {
      if (!use(e)) continue;
      const std::string *w = e.head == v ? &e.tail : (e.tail == v ? &e.head : nullptr);
      if (w && seen.insert(*w).second) st.push_back(*w);
    }
  }
  return false;
}
} // namespace detail

inline bool has_cutset(const Network &n, ElementKind k) {
  return !detail::reachable(n, n.port_plus, n.port_minus, [k](const Element &e) { return e.kind != k; });
}
inline bool has_path(const Network &n, ElementKind k) {
  return detail::reachable(n, n.port_plus, n.port_minus, [k](const Element &e) { return e.kind == k; });
}
inline bool has_C_cutset(const Network &n) { return has_cutset(n, ElementKind::Capacitor); }
inline bool has_L_cutset(const Network &n) { return has_cutset(n, ElementKind::Inductor); }
inline bool has_C_path(const Network &n) { return has_path(n, ElementKind::Capacitor); }
inline bool has_L_path(const Network &n) { return has_path(n, ElementKind::Inductor); }

// A connected set of elements meeting the rest of the network (source
// included) at exactly two vertices.
struct OnePort {
  std::vector<std::string> elements;
  std::string a, b;
};

namespace detail {
inline std::set<std::string> touch_vertices(const Network &n, const std::set<std::string> &ids) {
  std::set<std::string> inside, outside{n.port_plus, n.port_minus};
  for (const auto &e : n.elements) {
    auto &dst = ids.count(e.id) ? inside : outside;
    dst.insert(e.head);
    dst.insert(e.tail);
  }
  std::set<std::string> both;
  for (const auto &v : inside)
    if (outside.count(v)) both.insert(v);
  return both;
}
} // namespace detail

// Builds the one-port spanned by `ids`, nullopt when the set is not one.
// The terminal order follows `a_hint` when it is one of the two terminals.
inline std::optional<OnePort> make_oneport(const Network &n, const std::vector<std::string> &ids,
                                           const std::string &a_hint = "") {
  if (ids.empty()) return std::nullopt;
  std::set<std::string> set(ids.begin(), ids.end());
  Network sub;
  for (const auto &e : n.elements)
    if (set.count(e.id)) sub.elements.push_back(e);
  if (sub.elements.size() != set.size()) return std::nullopt;
  auto t = detail::touch_vertices(n, set);
  if (t.size() != 2) return std::nullopt;
  // connected element subgraph
  sub.port_plus = *t.begin();
  sub.port_minus = *t.rbegin();
  for (const auto &v : sub.vertices())
    if (!detail::reachable(sub, sub.port_plus, v, [](const Element &) { return true; })) return std::nullopt;
  OnePort p{ids, *t.begin(), *t.rbegin()};
  if (a_hint == p.b) std::swap(p.a, p.b);
  return p;
}

// The one-port as a network in its own right, driven across (a, b).
inline Network oneport_network(const Network &n, const OnePort &p) {
  Network out;
  out.port_plus = p.a;
  out.port_minus = p.b;
  std::set<std::string> set(p.elements.begin(), p.elements.end());
  for (const auto &e : n.elements)
    if (set.count(e.id)) out.elements.push_back(e);
  return out;
}

using Reduced = std::variant<Network, OpenCircuit, ShortCircuit>;

// Removes the one-port's elements, then prunes to the source's component.
inline Reduced open_oneport(const Network &n, const OnePort &p) {
  std::set<std::string> set(p.elements.begin(), p.elements.end());
  Network m;
  m.port_plus = n.port_plus;
  m.port_minus = n.port_minus;
  for (const auto &e : n.elements)
    if (!set.count(e.id)) m.elements.push_back(e);
  m = prune_to_source(m);
  if (m.elements.empty()) return OpenCircuit{};
  return m;
}

// Identifies the one-port's terminals, then prunes to the source's component.
inline Reduced short_oneport(const Network &n, const OnePort &p) {
  // keep a port name when one of the terminals is a port vertex
  std::string keep = p.a, drop = p.b;
  if (drop == n.port_plus || drop == n.port_minus) std::swap(keep, drop);
  auto ren = [&](const std::string &v) { return v == drop ? keep : v; };
  Network m;
  m.port_plus = ren(n.port_plus);
  m.port_minus = ren(n.port_minus);
  if (m.port_plus == m.port_minus) return ShortCircuit{};
  for (auto e : n.elements) {
    e.head = ren(e.head);
    e.tail = ren(e.tail);
    m.elements.push_back(e);
  }
  m = prune_to_source(m);
  if (m.elements.empty()) return OpenCircuit{};
  return m;
}

enum class ConnectionKind { Series, Parallel, Atomic };

struct Connection {
  ConnectionKind kind = ConnectionKind::Atomic;
  std::optional<OnePort> first, second;
};

// Top-level series/parallel split: parallel when the elements fall into two
// or more groups joined only at the port terminals; series when an internal
// vertex separates the terminals.
inline Connection series_parallel_decomposition(const Network &n) {
  Connection c;
  if (n.elements.size() < 2) return c;
  const std::string &a = n.port_plus, &b = n.port_minus;

  // parallel: group elements connected through non-terminal vertices
  std::vector<int> group(n.elements.size(), -1);
  int ng = 0;
  for (std::size_t i = 0; i < n.elements.size(); ++i) {
    if (group[i] != -1) continue;
    std::vector<std::size_t> st{i};
    group[i] = ng;
    while (!st.empty()) {
      auto k = st.back();
      st.pop_back();
      for (const auto *v : {&n.elements[k].head, &n.elements[k].tail}) {
        if (*v == a || *v == b) continue;
        for (std::size_t j = 0; j < n.elements.size(); ++j)
          if (group[j] == -1 && (n.elements[j].head == *v || n.elements[j].tail == *v)) {
            group[j] = ng;
            st.push_back(j);
          }
      }
    }
    ++ng;
  }
  if (ng > 1) {
    std::vector<std::string> g1, g2;
    for (std::size_t i = 0; i < n.elements.size(); ++i) (group[i] == 0 ? g1 : g2).push_back(n.elements[i].id);
    c.kind = ConnectionKind::Parallel;
    c.first = make_oneport(n, g1, a);
    c.second = make_oneport(n, g2, a);
    return c;
  }

  // series: an internal vertex whose removal separates a from b
  for (const auto &v : n.vertices()) {
    if (v == a || v == b) continue;
    auto avoid = [&v](const Element &e) { return e.head != v && e.tail != v; };
    if (detail::reachable(n, a, b, avoid)) continue;
    std::set<std::string> side{a};
    std::vector<std::string> st{a};
    while (!st.empty()) {
      std::string x = st.back();
      st.pop_back();
      for (const auto &e : n.elements) {
        if (!avoid(e)) continue;
        const std::string *w = e.head == x ? &e.tail : (e.tail == x ? &e.head : nullptr);
        if (w && side.insert(*w).second) st.push_back(*w);
      }
    }
    std::vector<std::string> g1, g2;
    for (const auto &e : n.elements) {
      bool left = side.count(e.head) || side.count(e.tail);
      (left ? g1 : g2).push_back(e.id);
    }
    c.kind = ConnectionKind::Series;
    c.first = make_oneport(n, g1, a);
    c.second = make_oneport(n, g2, v);
    return c;
  }
  return c;
}

} // namespace prsyn
