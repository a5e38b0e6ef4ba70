// Two realizations of one minimum function: with a capacitor loop there is
// no state-space model in inductor currents and capacitor voltages; with a
// capacitor cutset there is one, but it is neither controllable nor
// observable.

#include <prsyn/analysis.hpp>
#include <prsyn/synth.hpp>

#include <iostream>

using namespace prsyn;

namespace {

void print(const char *name, const Matrix<Rational> &m) {
  std::cout << name << " =\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::cout << " ";
    for (std::size_t j = 0; j < m.cols(); ++j) std::cout << " " << m(i, j);
    std::cout << "\n";
  }
}

} // namespace

int main() {
  BiquadParams p{1, 1, make_rational(3, 4), make_rational(1, 8)};
  auto a = build_named(Named::Fig2a, p), b = build_named(Named::Fig2b, p);
  std::cout << "H(s) = " << biquad_template(p) << "\n\n";

  auto fa = std::get<ExtractionFailure>(state_space(a));
  std::cout << "loop network: " << to_string(fa.kind);
  for (const auto &id : fa.elements) std::cout << " " << id;
  std::cout << "\n\n";

  auto ss = std::get<StateSpace>(state_space(b));
  std::cout << "cutset network, states";
  for (const auto &s : ss.state_labels) std::cout << " " << s;
  std::cout << "\n";
  print("A", ss.A);
  print("B", ss.B);
  print("C", ss.C);
  std::cout << "D = " << ss.D << "\ntransfer function = " << transfer_function(ss) << "\n\n";

  auto r = pbh_diagnostics(ss);
  for (const auto &m : r.uncontrollable_modes)
    if (m.exact) std::cout << "uncontrollable at " << *m.exact << "\n";
  for (const auto &m : r.unobservable_modes)
    if (m.exact) std::cout << "unobservable at " << *m.exact << "\n";
  std::cout << "stabilizable " << (r.stabilizable ? "yes" : "no") << "\n";
}
