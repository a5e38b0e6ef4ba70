// Classify biquadratic minimum functions by the number of storage elements
// a realization needs, and print the witness network.
//
//   demo_biquad_classify ["(s^2+s+1/2)/(s^2+1/2 s+2)" ...]

#include <prsyn/analysis.hpp>
#include <prsyn/synth.hpp>

#include <iostream>

int main(int argc, char **argv) {
  std::vector<std::string> fs(argv + 1, argv + argc);
  if (fs.empty())
    fs = {"(s^2+s+1/2)/(s^2+1/2 s+2)", "(s^2+1/2 s+5/8)/(s^2+9/20 s+8/5)", "(s^2+1/2 s+2/3)/(s^2+1/3 s+3/2)"};
  for (const auto &f : fs) {
    try {
      auto h = prsyn::parse_ratfunc(f);
      auto p = prsyn::biquad_params(h);
      auto c = prsyn::classify_biquad(p);
      std::cout << h << "\n  " << p << "\n  min_storage=" << c.storage_min << " condition=" << c.condition_name()
                << "\n";
      std::cout << prsyn::serialize_netlist(c.witness);
      // the witness is checked independently of how it was built
      std::cout << "  impedance matches: " << (*prsyn::impedance(c.witness) == h ? "yes" : "no") << "\n\n";
    } catch (const prsyn::Error &e) {
      std::cerr << f << ": " << e.what() << "\n";
      return 3;
    }
  }
}
