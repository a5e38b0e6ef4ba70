#pragma once

#include <prsyn/polyrat/rational.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace prsyn {

enum class ElementKind { Resistor, Inductor, Capacitor };

inline char kind_letter(ElementKind k) {
  switch (k) {
  case ElementKind::Resistor: return 'R';
  case ElementKind::Inductor: return 'L';
  case ElementKind::Capacitor: return 'C';
  }
  return '?';
}

inline bool is_storage(ElementKind k) { return k != ElementKind::Resistor; }

// A two-terminal element oriented head -> tail. The value is R in ohms, L in
// henries or C in farads.
struct Element {
  std::string id;
  ElementKind kind = ElementKind::Resistor;
  Rational value;
  std::string head, tail;

  friend bool operator==(const Element &a, const Element &b) {
    return a.id == b.id && a.kind == b.kind && a.value == b.value && a.head == b.head && a.tail == b.tail;
  }
};

// Elements plus a driving-point port (port_plus, port_minus). The source
// edge is oriented port_plus -> port_minus.
struct Network {
  std::vector<Element> elements;
  std::string port_plus, port_minus;

  std::vector<std::string> vertices() const {
    std::set<std::string> v{port_plus, port_minus};
    for (const auto &e : elements) {
      v.insert(e.head);
      v.insert(e.tail);
    }
    return {v.begin(), v.end()};
  }

  const Element *find(const std::string &id) const {
    for (const auto &e : elements)
      if (e.id == id) return &e;
    return nullptr;
  }

  std::size_t count(ElementKind k) const {
    return static_cast<std::size_t>(std::count_if(elements.begin(), elements.end(), [k](const Element &e) { return e.kind == k; }));
  }

  friend bool operator==(const Network &a, const Network &b) {
    return a.port_plus == b.port_plus && a.port_minus == b.port_minus && a.elements == b.elements;
  }
};

// Driving-point terminals disconnected with nothing left between them.
struct OpenCircuit {};
// Driving-point terminals merged into one vertex; impedance identically zero.
struct ShortCircuit {};

namespace detail {

// Biconnected components by edge (Hopcroft-Tarjan). Edge 0 is the source.
// Returns a component label per edge; self-loops get their own component.
inline std::vector<int> edge_bicomponents(std::size_t nv, const std::vector<std::pair<int, int>> &edges) {
  std::vector<std::vector<std::pair<int, int>>> adj(nv); // (neighbour, edge)
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u == v) continue;
    adj[static_cast<std::size_t>(u)].push_back({v, static_cast<int>(i)});
    adj[static_cast<std::size_t>(v)].push_back({u, static_cast<int>(i)});
  }
  std::vector<int> comp(edges.size(), -1), disc(nv, -1), low(nv, 0);
  std::vector<int> stack;
  int timer = 0, ncomp = 0;
  // iterative DFS to stay safe on long chains
  struct Frame { int v, parent_edge; std::size_t next; };
  for (std::size_t root = 0; root < nv; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> st{{static_cast<int>(root), -1, 0}};
    disc[root] = low[root] = timer++;
    while (!st.empty()) {
      Frame &f = st.back();
      auto v = static_cast<std::size_t>(f.v);
      if (f.next < adj[v].size()) {
        auto [w, e] = adj[v][f.next++];
        if (e == f.parent_edge) continue;
        auto wi = static_cast<std::size_t>(w);
        if (disc[wi] == -1) {
          stack.push_back(e);
          disc[wi] = low[wi] = timer++;
          st.push_back({w, e, 0});
        } else if (disc[wi] < disc[v]) {
          stack.push_back(e);
          low[v] = std::min(low[v], disc[wi]);
        }
      } else {
        int pe = f.parent_edge;
        st.pop_back();
        if (st.empty()) break;
        auto u = static_cast<std::size_t>(st.back().v);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          while (!stack.empty()) {
            int e = stack.back();
            stack.pop_back();
            comp[static_cast<std::size_t>(e)] = ncomp;
            if (e == pe) break;
          }
          ++ncomp;
        }
      }
    }
  }
  for (auto &c : comp)
    if (c == -1) c = ncomp++;
  return comp;
}

struct IndexedGraph {
  std::vector<std::string> names;
  std::map<std::string, int> index;
  std::vector<std::pair<int, int>> edges; // edge 0 is the source
};

inline IndexedGraph index_graph(const Network &n) {
  IndexedGraph g;
  g.names = n.vertices();
  for (std::size_t i = 0; i < g.names.size(); ++i) g.index[g.names[i]] = static_cast<int>(i);
  g.edges.push_back({g.index[n.port_plus], g.index[n.port_minus]});
  for (const auto &e : n.elements) g.edges.push_back({g.index[e.head], g.index[e.tail]});
  return g;
}

// Indices of the elements sharing a biconnected component with the source.
inline std::vector<std::size_t> source_component(const Network &n) {
  auto g = index_graph(n);
  auto comp = edge_bicomponents(g.names.size(), g.edges);
  std::vector<std::size_t> keep;
  for (std::size_t i = 1; i < g.edges.size(); ++i)
    if (comp[i] == comp[0]) keep.push_back(i - 1);
  return keep;
}

} // namespace detail

// Drops every element outside the source's biconnected component.
inline Network prune_to_source(const Network &n) {
  Network out;
  out.port_plus = n.port_plus;
  out.port_minus = n.port_minus;
  if (n.port_plus == n.port_minus) return out;
  for (auto i : detail::source_component(n)) out.elements.push_back(n.elements[i]);
  return out;
}

// Checks every structural invariant; throws with a diagnostic naming the
// first offending element.
inline void validate(const Network &n) {
  if (n.port_plus.empty() || n.port_minus.empty()) fail(ErrorKind::MissingPort, "network has no PORT");
  if (n.port_plus == n.port_minus) fail(ErrorKind::SyntaxError, "PORT terminals must differ");
  if (n.elements.empty()) fail(ErrorKind::SyntaxError, "network has no elements");
  std::set<std::string> ids;
  for (const auto &e : n.elements) {
    if (!ids.insert(e.id).second) fail(ErrorKind::SyntaxError, "duplicate element id '" + e.id + "'");
    if (sgn(e.value) <= 0) fail(ErrorKind::NonpositiveValue, "element '" + e.id + "' has value " + to_string(e.value));
  }
  auto keep = detail::source_component(n);
  std::vector<bool> in(n.elements.size(), false);
  for (auto i : keep) in[i] = true;
  for (std::size_t i = 0; i < n.elements.size(); ++i)
    if (!in[i])
      fail(ErrorKind::NotBiconnected,
           "element '" + n.elements[i].id + "' is not in the biconnected component containing the source");
}

inline Network make_network(std::string port_plus, std::string port_minus, std::vector<Element> elements) {
  Network n{std::move(elements), std::move(port_plus), std::move(port_minus)};
  validate(n);
  return n;
}

namespace detail {
inline std::vector<std::string> split_ws(const std::string &line) {
  std::istringstream is(line);
  std::vector<std::string> t;
  for (std::string w; is >> w;) t.push_back(w);
  return t;
}

inline std::string upper(std::string s) {
  for (auto &c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

// Shared reader for the electrical and mechanical grammars; `kinds` maps
// keywords to element kinds.
template <class Elem, class KindMap>
void read_statements(const std::string &text, const KindMap &kinds, std::vector<Elem> &elems, std::string &pp,
                     std::string &pm) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  bool have_port = false;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    std::string kw = upper(tok[0]);
    auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };
    if (kw == "PORT") {
      if (tok.size() != 3) fail(ErrorKind::SyntaxError, "PORT needs two nodes" + where());
      if (have_port) fail(ErrorKind::SyntaxError, "PORT given twice" + where());
      have_port = true;
      pp = tok[1];
      pm = tok[2];
      continue;
    }
    auto k = kinds.find(kw);
    if (k == kinds.end()) fail(ErrorKind::SyntaxError, "unknown statement '" + tok[0] + "'" + where());
    if (tok.size() != 5) fail(ErrorKind::SyntaxError, "expected '<kind> <id> <node+> <node-> <value>'" + where());
    Elem e;
    e.id = tok[1];
    e.kind = k->second;
    e.head = tok[2];
    e.tail = tok[3];
    try {
      e.value = parse_rational(tok[4]);
    } catch (const Error &err) {
      fail(err.kind(), std::string(err.what()) + where());
    }
    elems.push_back(std::move(e));
  }
  if (!have_port) fail(ErrorKind::MissingPort, "no PORT statement");
}
} // namespace detail

// Grammar: "R|L|C <id> <node+> <node-> <value>" and one "PORT <node+> <node->";
// '#' starts a comment.
inline Network parse_netlist(const std::string &text) {
  static const std::map<std::string, ElementKind> kinds{
      {"R", ElementKind::Resistor}, {"L", ElementKind::Inductor}, {"C", ElementKind::Capacitor}};
  Network n;
  detail::read_statements(text, kinds, n.elements, n.port_plus, n.port_minus);
  validate(n);
  return n;
}

inline std::string serialize_netlist(const Network &n) {
  std::string s;
  for (const auto &e : n.elements)
    s += std::string(1, kind_letter(e.kind)) + " " + e.id + " " + e.head + " " + e.tail + " " + to_string(e.value) + "\n";
  s += "PORT " + n.port_plus + " " + n.port_minus + "\n";
  return s;
}

inline std::ostream &operator<<(std::ostream &os, const Network &n) { return os << serialize_netlist(n); }

} // namespace prsyn
