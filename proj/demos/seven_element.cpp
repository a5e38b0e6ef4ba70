// One Bott-Duffin style step on a biquadratic minimum function, then the
// four seven-element networks it yields.

#include <prsyn/analysis.hpp>
#include <prsyn/synth.hpp>

#include <iostream>

using namespace prsyn;

int main(int argc, char **argv) {
  auto h = parse_ratfunc(argc > 1 ? argv[1] : "(s^2+1/2 s+2/3)/(s^2+1/3 s+3/2)");
  auto st = theorem2_step(h);
  std::cout << "H(s) = " << h << "\n"
            << "branch " << to_string(st.variant) << ", omega0 = " << st.omega0 << ", X = " << st.X << "\n"
            << (st.variant == Branch::X_positive ? "mu = " : "nu = ") << st.mu_or_nu
            << (st.variant == Branch::X_positive ? ", alpha = " : ", beta = ") << st.alpha_or_beta
            << ", reduced = " << st.reduced << "\n"
            << "identity holds: " << (verify_theorem2_identity(h, st) ? "yes" : "no") << "\n";

  for (auto w : {SevenElement::rpfg_first, SevenElement::rpfg_second, SevenElement::alt_first, SevenElement::alt_second}) {
    auto n = build_seven_element(st, w);
    std::cout << "\n# " << to_string(w) << "\n" << serialize_netlist(n);
    std::cout << "# gap " << mcmillan_gap(n) << ", exact: " << (*impedance(n) == h ? "yes" : "no") << "\n";
  }
}
