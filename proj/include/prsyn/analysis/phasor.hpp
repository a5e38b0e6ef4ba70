#pragma once

#include <prsyn/analysis/impedance.hpp>

#include <optional>
#include <random>

namespace prsyn {

// Source phasor fixed by the caller: either the current or the voltage.
struct PhasorDrive {
  enum class Kind { Current, Voltage };
  Kind kind = Kind::Current;
  CRational value = Rational(1);

  static PhasorDrive current(CRational v) { return {Kind::Current, std::move(v)}; }
  static PhasorDrive voltage(CRational v) { return {Kind::Voltage, std::move(v)}; }
};

struct ElementPhasor {
  std::string id;
  CRational current, voltage; // voltage is head minus tail
};

// Sinusoidal trajectory at frequency w, exact over Q(jw) with w^2 rational.
struct PhasorSolution {
  Rational omega_sq;
  CRational source_current, source_voltage;
  std::vector<ElementPhasor> elements;

  const ElementPhasor &at(const std::string &id) const {
    for (const auto &e : elements)
      if (e.id == id) return e;
    fail(ErrorKind::InvalidArgument, "no element '" + id + "' in the solution");
  }
};

namespace detail {

// Affine solution set of the phasor equations: particular + span(free).
// Unknowns: potentials (ground = port_minus), element currents, source
// current.
struct PhasorSystem {
  Network net;
  Rational w2;
  std::map<std::string, std::size_t> pot;
  std::vector<CRational> particular;
  std::vector<std::vector<CRational>> free;

  PhasorSolution assemble(const std::vector<CRational> &x) const {
    PhasorSolution s;
    s.omega_sq = w2;
    std::size_t nv = pot.size(), m = net.elements.size();
    auto phi = [&](const std::string &v) { return v == net.port_minus ? CRational(0) : x[pot.at(v)]; };
    s.source_current = x[nv + m];
    s.source_voltage = phi(net.port_plus);
    for (std::size_t k = 0; k < m; ++k) {
      const Element &e = net.elements[k];
      s.elements.push_back({e.id, x[nv + k], phi(e.head) - phi(e.tail)});
    }
    return s;
  }
};

inline PhasorSystem phasor_system(const Network &net, const Rational &w2, const PhasorDrive &drive) {
  if (sgn(w2) < 0) fail(ErrorKind::InvalidArgument, "omega^2 must be nonnegative");
  PhasorSystem ps;
  ps.net = net;
  ps.w2 = w2;
  for (const auto &v : net.vertices())
    if (v != net.port_minus) ps.pot.emplace(v, ps.pot.size());
  std::size_t nv = ps.pot.size(), m = net.elements.size(), nu = nv + m + 1;
  Matrix<CRational> a(nv + m + 1, nu, CRational(0));
  Matrix<CRational> b(nv + m + 1, 1, CRational(0));
  CRational jw = CRational::jw(w2);
  auto put_v = [&](std::size_t row, const Element &e, const CRational &c) {
    if (e.head != net.port_minus) a(row, ps.pot.at(e.head)) += c;
    if (e.tail != net.port_minus) a(row, ps.pot.at(e.tail)) -= c;
  };
  for (std::size_t k = 0; k < m; ++k) {
    const Element &e = net.elements[k];
    // KCL: current leaves head, enters tail
    if (e.head != net.port_minus) a(ps.pot.at(e.head), nv + k) += Rational(1);
    if (e.tail != net.port_minus) a(ps.pot.at(e.tail), nv + k) -= Rational(1);
    std::size_t row = nv + k;
    switch (e.kind) {
    case ElementKind::Resistor:
      put_v(row, e, Rational(1));
      a(row, nv + k) = Rational(-e.value);
      break;
    case ElementKind::Inductor:
      put_v(row, e, Rational(1));
      a(row, nv + k) = -(jw * e.value);
      break;
    case ElementKind::Capacitor:
      put_v(row, e, -(jw * e.value));
      a(row, nv + k) = Rational(1);
      break;
    }
  }
  a(ps.pot.at(net.port_plus), nv + m) -= Rational(1); // source injects at port_plus
  std::size_t last = nv + m;
  if (drive.kind == PhasorDrive::Kind::Current) a(last, nv + m) = Rational(1);
  else a(last, ps.pot.at(net.port_plus)) = Rational(1);
  b(last, 0) = drive.value;

  auto x = solve(a, b);
  if (!x) fail(ErrorKind::InconsistentDrive, "no sinusoidal trajectory with the requested drive");
  ps.particular = x->column(0);
  ps.free = nullspace(a);
  return ps;
}

// Nonzero element of Q(jw) with small random coordinates.
inline CRational random_coefficient(std::mt19937_64 &rng, const Rational &w2) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  for (;;) {
    CRational c(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), w2);
    if (!c.zero()) return c;
  }
}

inline std::vector<CRational> random_point(const PhasorSystem &ps, std::mt19937_64 &rng) {
  auto x = ps.particular;
  for (const auto &dir : ps.free) {
    CRational c = random_coefficient(rng, ps.w2);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += c * dir[i];
  }
  return x;
}

inline PhasorDrive default_drive(const Network &n, const Rational &w2) {
  auto h = impedance(n);
  if (!h) return PhasorDrive::current(Rational(1));
  CRational d = h->den().eval(CRational::jw(w2));
  return d.zero() ? PhasorDrive::voltage(Rational(1)) : PhasorDrive::current(Rational(1));
}

} // namespace detail

// Trajectory at frequency w where w^2 = omega_sq. Without a drive the source
// current is 1, or the source voltage is 1 when the impedance has a pole at
// jw. With a seed, a random combination of the undriven internal
// trajectories is added; otherwise those are set to zero.
inline PhasorSolution phasor_solve_sq(const Network &n, const Rational &omega_sq,
                                      std::optional<PhasorDrive> drive = std::nullopt,
                                      std::optional<std::uint64_t> seed = std::nullopt) {
  PhasorDrive d = drive ? *drive : detail::default_drive(n, omega_sq);
  auto ps = detail::phasor_system(n, omega_sq, d);
  if (!seed) return ps.assemble(ps.particular);
  std::mt19937_64 rng(*seed);
  return ps.assemble(detail::random_point(ps, rng));
}

inline PhasorSolution phasor_solve(const Network &n, const Rational &omega,
                                   std::optional<PhasorDrive> drive = std::nullopt,
                                   std::optional<std::uint64_t> seed = std::nullopt) {
  if (sgn(omega) < 0) fail(ErrorKind::InvalidArgument, "omega must be nonnegative");
  return phasor_solve_sq(n, omega * omega, std::move(drive), seed);
}

// (v* i + i* v) - sum_k (v_k* i_k + i_k* v_k); exactly zero for any
// trajectory since Re(conj(a) b) is rational in Q(jw).
inline Rational energy_balance(const PhasorSolution &s) {
  auto re_conj = [&](const CRational &a, const CRational &b) -> Rational { return a.re * b.re + s.omega_sq * a.im * b.im; };
  Rational r = 2 * re_conj(s.source_voltage, s.source_current);
  for (const auto &e : s.elements) r -= 2 * re_conj(e.voltage, e.current);
  return r;
}

} // namespace prsyn
