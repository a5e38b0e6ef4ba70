#include <prsyn/analysis.hpp>
#include <prsyn/network.hpp>
#include <prsyn/polyrat.hpp>

#include <gtest/gtest.h>

#include <complex>
#include <fstream>
#include <random>

using namespace prsyn;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }
RationalFunction rf(const char *t) { return parse_ratfunc(t); }

std::string slurp(const std::string &name) {
  std::ifstream f(std::string(PRSYN_FIXTURES) + "/" + name);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Random series-parallel network laid out directly, with its impedance
// computed by recursive reduction alongside.
struct SpBuilder {
  std::mt19937_64 &rng;
  Network net;
  int vertex = 0, id = 0;

  std::string fresh() { return "v" + std::to_string(++vertex); }

  RationalFunction grow(const std::string &x, const std::string &y, int depth) {
    std::uniform_int_distribution<int> pick(0, 9), val(1, 9);
    int p = pick(rng);
    if (depth == 0 || p < 3) {
      auto kind = static_cast<ElementKind>(pick(rng) % 3);
      Rational v = q(val(rng), val(rng));
      net.elements.push_back({"e" + std::to_string(++id), kind, v, x, y});
      switch (kind) {
      case ElementKind::Resistor: return RationalFunction(v);
      case ElementKind::Inductor: return RationalFunction(Poly{Rational(0), v});
      case ElementKind::Capacitor: return RationalFunction(Poly{Rational(1)}, Poly{Rational(0), v});
      }
    }
    if (p < 6) {
      std::string m = fresh();
      return grow(x, m, depth - 1) + grow(m, y, depth - 1);
    }
    auto z1 = grow(x, y, depth - 1), z2 = grow(x, y, depth - 1);
    return (z1 * z2) / (z1 + z2);
  }
};

std::pair<Network, RationalFunction> random_sp(std::mt19937_64 &rng, int depth = 3) {
  SpBuilder b{rng, {}, 0, 0};
  b.net.port_plus = "a";
  b.net.port_minus = "b";
  auto z = b.grow("a", "b", depth);
  return {b.net, z};
}

// Plain complex nodal analysis in double precision at one frequency point.
std::complex<double> numeric_impedance(const Network &n, std::complex<double> s) {
  std::map<std::string, int> idx;
  for (const auto &v : n.vertices())
    if (v != n.port_minus) idx.emplace(v, static_cast<int>(idx.size()));
  int m = static_cast<int>(idx.size());
  std::vector<std::vector<std::complex<double>>> y(static_cast<std::size_t>(m), std::vector<std::complex<double>>(static_cast<std::size_t>(m + 1)));
  for (const auto &e : n.elements) {
    double v = e.value.get_d();
    std::complex<double> a = e.kind == ElementKind::Resistor ? 1.0 / v : (e.kind == ElementKind::Inductor ? 1.0 / (v * s) : v * s);
    int h = e.head == n.port_minus ? -1 : idx[e.head], t = e.tail == n.port_minus ? -1 : idx[e.tail];
    auto H = static_cast<std::size_t>(h), T = static_cast<std::size_t>(t);
    if (h >= 0) y[H][H] += a;
    if (t >= 0) y[T][T] += a;
    if (h >= 0 && t >= 0) {
      y[H][T] -= a;
      y[T][H] -= a;
    }
  }
  auto p = static_cast<std::size_t>(idx[n.port_plus]);
  y[p][static_cast<std::size_t>(m)] = 1.0;
  auto M = static_cast<std::size_t>(m);
  for (std::size_t k = 0; k < M; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < M; ++i)
      if (std::abs(y[i][k]) > std::abs(y[piv][k])) piv = i;
    std::swap(y[k], y[piv]);
    for (std::size_t i = 0; i < M; ++i) {
      if (i == k) continue;
      auto f = y[i][k] / y[k][k];
      for (std::size_t j = k; j <= M; ++j) y[i][j] -= f * y[k][j];
    }
  }
  return y[p][M] / y[p][p];
}

std::complex<double> eval_double(const RationalFunction &h, std::complex<double> s) {
  auto ev = [&](const Poly &p) {
    std::complex<double> r = 0;
    for (int i = p.degree(); i >= 0; --i) r = r * s + p[i].get_d();
    return r;
  };
  return ev(h.num()) / ev(h.den());
}

Network random_bridge(std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> k(0, 2), d(1, 9);
  std::vector<std::pair<std::string, std::string>> ends{{"a", "d"}, {"c", "b"}, {"c", "d"}, {"a", "c"}, {"d", "b"}};
  Network n;
  n.port_plus = "a";
  n.port_minus = "b";
  for (std::size_t i = 0; i < 5; ++i)
    n.elements.push_back({"z" + std::to_string(i + 1), static_cast<ElementKind>(k(rng)), q(d(rng), d(rng)), ends[i].first, ends[i].second});
  return n;
}

} // namespace

TEST(Impedance, Examples) {
  EXPECT_EQ(*impedance(parse_netlist("R r a b 5\nPORT a b")), RationalFunction(q(5)));
  EXPECT_EQ(*impedance(parse_netlist("L l a m 1\nC c m b 1\nPORT a b")), rf("(s^2+1)/s"));
  auto n1 = parse_netlist(slurp("n1.net"));
  EXPECT_EQ(*impedance(n1), rf("(s^2+s+1/2)/(s^2+1/2 s+2)"));
  EXPECT_EQ(*impedance(n1), biquad_template({1, 1, q(1, 2), 1}));
}

TEST(Impedance, SeriesParallelOracle) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 200; ++t) {
    auto [n, z] = random_sp(rng);
    auto h = impedance(n);
    ASSERT_TRUE(h.has_value());
    EXPECT_EQ(*h, z) << serialize_netlist(n);
    EXPECT_TRUE(is_positive_real(*h)) << *h;
    EXPECT_GE(mcmillan_gap(n), 0);
  }
}

TEST(Impedance, NumericNodalOracleOnBridges) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    auto n = random_bridge(rng);
    auto h = *impedance(n);
    EXPECT_TRUE(is_positive_real(h));
    std::complex<double> s(0.3 + 0.1 * t, 0.7);
    auto a = numeric_impedance(n, s), b = eval_double(h, s);
    EXPECT_LT(std::abs(a - b), 1e-9 * (1 + std::abs(a)));
  }
}

TEST(Impedance, FrequencyInversionProperty) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 50; ++t) {
    auto [n, z] = random_sp(rng);
    Rational w0 = q(static_cast<long>(rng() % 5 + 1), static_cast<long>(rng() % 3 + 1));
    EXPECT_EQ(*impedance(frequency_invert(n, w0)), z.invert_frequency(w0 * w0));
  }
}

TEST(Impedance, StorageAndGap) {
  auto n1 = parse_netlist(slurp("n1.net"));
  EXPECT_EQ(storage_count(n1), 3u);
  EXPECT_EQ(mcmillan_gap(n1), 1);
  auto rl = parse_netlist("R r a m 1\nL l m b 1\nPORT a b");
  EXPECT_EQ(storage_count(rl), 1u);
  EXPECT_EQ(mcmillan_gap(rl), 0);
}

TEST(Phasor, Examples) {
  auto r = phasor_solve(parse_netlist("R r a b 7\nPORT a b"), q(3));
  EXPECT_EQ(r.source_current, CRational(1));
  EXPECT_EQ(r.source_voltage, CRational(7));
  EXPECT_EQ(energy_balance(r), 0);

  auto n1 = parse_netlist(slurp("n1.net"));
  auto s = phasor_solve(n1, 1);
  EXPECT_EQ(s.source_voltage, CRational::jw(1));
  EXPECT_EQ(energy_balance(s), 0);
  for (const auto &id : {"r1", "r2"}) {
    EXPECT_TRUE(s.at(id).current.zero());
    EXPECT_TRUE(s.at(id).voltage.zero());
  }

  auto lc = parse_netlist("L l a b 1\nC c a b 1\nPORT a b");
  auto p = phasor_solve(lc, 1, PhasorDrive::voltage(Rational(1)));
  EXPECT_TRUE(p.source_current.zero());
  // default drive at a pole is the voltage
  EXPECT_EQ(phasor_solve(lc, 1).source_voltage, CRational(1));
}

TEST(Phasor, InconsistentDrive) {
  auto series = parse_netlist("L l a m 1\nC c m b 1\nPORT a b");
  try {
    phasor_solve(series, 1, PhasorDrive::voltage(Rational(1)));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::InconsistentDrive);
  }
  auto lc = parse_netlist("L l a b 1\nC c a b 1\nPORT a b");
  EXPECT_THROW(phasor_solve(lc, 1, PhasorDrive::current(Rational(1))), Error);
}

TEST(Phasor, RandomNetworksSatisfyLaws) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    auto [n, z] = random_sp(rng);
    Rational w = q(static_cast<long>(rng() % 7 + 1), static_cast<long>(rng() % 4 + 1));
    CRational jw = CRational::jw(w * w);
    auto s = phasor_solve(n, w, std::nullopt, t);
    EXPECT_EQ(energy_balance(s), 0);
    if (!z.den().eval(jw).zero()) EXPECT_EQ(s.source_voltage, z.eval(jw) * s.source_current);
    // KCL at every vertex, source included
    std::map<std::string, CRational> net;
    net[n.port_plus] -= s.source_current;
    net[n.port_minus] += s.source_current;
    for (const auto &e : n.elements) {
      const auto &p = s.at(e.id);
      net[e.head] += p.current;
      net[e.tail] -= p.current;
      switch (e.kind) {
      case ElementKind::Resistor: EXPECT_EQ(p.voltage, e.value * p.current); break;
      case ElementKind::Inductor: EXPECT_EQ(p.voltage, jw * e.value * p.current); break;
      case ElementKind::Capacitor: EXPECT_EQ(p.current, jw * e.value * p.voltage); break;
      }
    }
    for (const auto &[v, x] : net) EXPECT_TRUE(x.zero()) << v;
  }
}

TEST(Blocked, N1) {
  auto n1 = parse_netlist(slurp("n1.net"));
  auto r = blocked_report(n1, 1);
  // the two resistors share no vertex, so each is its own blocked one-port
  ASSERT_EQ(r.blocked.size(), 2u);
  EXPECT_EQ(r.blocked[0], std::vector<std::string>{"r1"});
  EXPECT_EQ(r.blocked[1], std::vector<std::string>{"r2"});
  EXPECT_EQ(r.blocked_oneport_flags, (std::vector<bool>{true, true}));
  EXPECT_EQ(r.unblocked, (std::vector<std::string>{"l1", "l2", "c1"}));
  EXPECT_TRUE(r.draws_agree);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.conditions.size(), 8u);
  EXPECT_TRUE(blocked_open_short_check(n1, r));
}

TEST(Blocked, Hypotheses) {
  auto kind = [](const Network &n, Rational w) {
    try {
      blocked_report(n, w);
    } catch (const Error &e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  EXPECT_EQ(kind(parse_netlist("R r a b 1\nPORT a b"), 1), ErrorKind::HypothesesNotMet);
  EXPECT_EQ(kind(parse_netlist("L l a b 1\nC c a b 1\nPORT a b"), 1), ErrorKind::HypothesesNotMet);
  EXPECT_EQ(kind(parse_netlist(slurp("n1.net")), 2), ErrorKind::HypothesesNotMet);
}

TEST(Blocked, ShortCircuitBranchIsFalse) {
  // the whole network as one blocked set: opening leaves nothing, shorting gives 0
  auto n1 = parse_netlist(slurp("n1.net"));
  BlockReport fake = blocked_report(n1, 1);
  fake.blocked = {{"r1", "r2", "l1", "l2", "c1"}};
  EXPECT_FALSE(blocked_open_short_check(n1, fake));
}

TEST(StateSpace, ParallelRL) {
  auto n = parse_netlist("R r a b 2\nL l a b 3\nPORT a b");
  auto ss = std::get<StateSpace>(state_space(n));
  EXPECT_EQ(ss.A(0, 0), q(-2, 3));
  EXPECT_EQ(ss.B(0, 0) * ss.C(0, 0), q(-4, 3));
  EXPECT_EQ(ss.D, 2);
  EXPECT_EQ(transfer_function(ss), *impedance(n));
  auto pbh = pbh_diagnostics(ss);
  EXPECT_TRUE(pbh.uncontrollable_modes.empty());
  EXPECT_TRUE(pbh.unobservable_modes.empty());
  EXPECT_TRUE(pbh.stabilizable);
}

TEST(StateSpace, Failures) {
  auto series = parse_netlist("R r a m 1\nL l m b 1\nPORT a b");
  auto f = std::get<ExtractionFailure>(state_space(series));
  EXPECT_EQ(f.kind, ExtractionFailure::Kind::InductorCutset);
  EXPECT_EQ(f.elements, std::vector<std::string>{"l"});
  auto loop = parse_netlist("R r a b 1\nC x a c 1\nC y c b 1\nC z a b 1\nPORT a b");
  auto g = std::get<ExtractionFailure>(state_space(loop));
  EXPECT_EQ(g.kind, ExtractionFailure::Kind::CapacitorLoop);
  EXPECT_EQ(g.elements, (std::vector<std::string>{"x", "y", "z"}));
}

// Success exactly when no capacitor loop and no inductor cutset; checked
// against brute-force subgraph tests, and the transfer function against the
// impedance.
TEST(StateSpace, RandomNetworks) {
  std::mt19937_64 rng(17);
  int ok = 0;
  for (int t = 0; t < 200; ++t) {
    Network n = t % 2 ? random_sp(rng).first : random_bridge(rng);
    // brute force: a capacitor loop exists iff capacitor count exceeds the
    // forest size; an inductor cutset iff R and C alone do not connect
    auto components = [&](auto keep) {
      std::map<std::string, std::string> p;
      for (const auto &v : n.vertices()) p[v] = v;
      std::function<std::string(std::string)> f = [&](std::string v) { return p[v] == v ? v : p[v] = f(p[v]); };
      int merges = 0;
      for (const auto &e : n.elements)
        if (keep(e) && f(e.head) != f(e.tail)) {
          p[f(e.head)] = f(e.tail);
          ++merges;
        }
      return merges;
    };
    int cap_forest = components([](const Element &e) { return e.kind == ElementKind::Capacitor; });
    bool cap_loop = cap_forest < static_cast<int>(n.count(ElementKind::Capacitor));
    int rc = components([](const Element &e) { return e.kind != ElementKind::Inductor; });
    bool l_cut = rc + 1 < static_cast<int>(n.vertices().size());
    auto res = state_space(n);
    EXPECT_EQ(std::holds_alternative<StateSpace>(res), !cap_loop && !l_cut);
    if (auto *ss = std::get_if<StateSpace>(&res)) {
      ++ok;
      EXPECT_EQ(ss->state_labels.size(), storage_count(n));
      EXPECT_EQ(transfer_function(*ss), *impedance(n)) << serialize_netlist(n);
    }
  }
  EXPECT_GT(ok, 20);
}

TEST(Pbh, UncontrollableAndUnobservable) {
  // two equal inductors in parallel: their circulating current is constant,
  // neither driven nor seen at the port
  auto n = parse_netlist("R r1 a b 1\nL l1 a m 1\nR r2 m b 1\nL l2 a m 1\nPORT a b");
  auto ss = std::get<StateSpace>(state_space(n));
  auto p = pbh_diagnostics(ss);
  ASSERT_EQ(p.uncontrollable_modes.size(), 1u);
  ASSERT_EQ(p.unobservable_modes.size(), 1u);
  EXPECT_EQ(*p.uncontrollable_modes[0].exact, 0);
  EXPECT_FALSE(p.stabilizable);
  const auto &x = p.unobservable_modes[0].vector;
  EXPECT_EQ(x[0], -x[1]);
}

TEST(Json, Reports) {
  auto n1 = parse_netlist(slurp("n1.net"));
  auto j = to_json(phasor_solve(n1, 1));
  EXPECT_EQ(j["energy_residual"], "0");
  EXPECT_EQ(to_json(blocked_report(n1, 1))["ok"], true);
  auto ss = std::get<StateSpace>(state_space(parse_netlist("R r a b 2\nL l a b 3\nPORT a b")));
  EXPECT_EQ(to_json(ss)["A"][0][0], "-2/3");
}
