// prsyn: command-line front end for the synthesis library.
//
// Exit codes: 0 success or true verdict, 1 false verdict (check, verify),
// 2 usage error, 3 domain error reported by the library.

#include <prsyn/analysis.hpp>
#include <prsyn/network.hpp>
#include <prsyn/polyrat.hpp>
#include <prsyn/synth.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace prsyn;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0, exit_false = 1, exit_usage = 2, exit_domain = 3;

struct Globals {
  bool json = false;
  std::optional<std::uint64_t> seed;
  Rational tolerance = Rational(1, 1000000000);
};

Rational tolerance_from_env() {
  const char *p = std::getenv("PRSYN_PRECISION");
  if (!p || !*p) return Rational(1, 1000000000);
  Rational t = parse_rational(p);
  if (sgn(t) <= 0) fail(ErrorKind::InvalidArgument, "PRSYN_PRECISION must be positive");
  return t;
}

// significant digits matching a tolerance
int digits_for(const Rational &tol) {
  double d = -std::log10(tol.get_d());
  return std::max(3, static_cast<int>(std::ceil(d)) + 1);
}

std::string read_text(const std::string &path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) fail(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Netlist text, or the JSON form when the file starts with '{'.
Network load_network(const std::string &path) {
  std::string text = read_text(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception &e) {
      fail(ErrorKind::SyntaxError, std::string("bad JSON netlist: ") + e.what());
    }
    Network n = network_from_json(j);
    validate(n);
    return n;
  }
  return parse_netlist(text);
}

std::string approx(const Real &x, const Globals &g) { return x.str(digits_for(g.tolerance)); }

class Runner {
public:
  explicit Runner(Globals g) : g_(std::move(g)) {}

  int run(std::vector<std::string> args);

private:
  Globals g_;
  json report_;
  std::ostringstream text_;

  void line(const std::string &s) { text_ << s << "\n"; }
  int emit(int code);

  int check(const std::string &f);
  int params(const std::string &f);
  int classify(const std::string &f, bool witness);
  int synth(const std::string &f, const std::string &which, const std::string &named, const std::string &omega);
  int impedance_of(const std::string &path);
  int phasor(const std::string &path, const std::string &omega, const std::string &drive, const std::string &value);
  int blocked(const std::string &path, const std::string &omega);
  int ss(const std::string &path, bool pbh);
  int dual_of(const std::string &path);
  int invert(const std::string &path, const std::string &omega);
  int mech(const std::string &path, bool to_electrical);
  int verify(const std::string &path, const std::string &f);
};

int Runner::emit(int code) {
  if (g_.json) std::cout << report_.dump(2) << "\n";
  else std::cout << text_.str();
  std::cout.flush();
  return code;
}

int Runner::check(const std::string &f) {
  auto h = parse_ratfunc(f);
  bool pr = is_positive_real(h);
  bool lossless = pr && is_lossless(h);
  bool minimum = pr && is_minimum_function(h);
  report_["positive_real"] = pr;
  report_["lossless"] = lossless;
  report_["minimum"] = minimum;
  report_["mcmillan_degree"] = h.mcmillan_degree();
  std::string s = std::string("positive_real=") + (pr ? "true" : "false") + " minimum=" + (minimum ? "true" : "false") +
                  " lossless=" + (lossless ? "true" : "false");
  json freqs = json::array();
  if (pr && !lossless) {
    for (const auto &m : minimum_frequencies(h, g_.tolerance)) {
      json jm;
      if (m.omega) {
        jm["omega"] = to_string(*m.omega);
        s += " omega0=" + to_string(*m.omega);
      } else {
        if (m.omega_sq) jm["omega_sq"] = to_string(*m.omega_sq);
        jm["approx"] = approx(m.value, g_);
        s += " omega0~" + approx(m.value, g_);
      }
      freqs.push_back(jm);
    }
  }
  report_["minimum_frequencies"] = freqs;
  line(s);
  return emit(pr ? exit_ok : exit_false);
}

int Runner::params(const std::string &f) {
  auto p = biquad_params(parse_ratfunc(f));
  report_["params"] = {{"K", to_string(p.K)}, {"omega0", to_string(p.omega0)}, {"W", to_string(p.W)}, {"F", to_string(p.F)}};
  line(to_string(p));
  return emit(exit_ok);
}

int Runner::classify(const std::string &f, bool witness) {
  auto p = biquad_params(parse_ratfunc(f));
  auto c = classify_biquad(p);
  report_["min_storage"] = c.storage_min;
  report_["condition"] = c.condition_name();
  report_["witness"] = to_json(c.witness);
  line("min_storage=" + std::to_string(c.storage_min) + " condition=" + c.condition_name());
  if (witness) text_ << serialize_netlist(c.witness);
  return emit(exit_ok);
}

int Runner::synth(const std::string &f, const std::string &which, const std::string &named, const std::string &omega) {
  auto h = parse_ratfunc(f);
  Network n;
  if (!named.empty()) {
    auto name = parse_named(named);
    n = build_named(name, biquad_params(h));
    report_["construction"] = to_string(name);
  } else if (!which.empty()) {
    std::optional<Rational> w0;
    if (!omega.empty()) w0 = parse_rational(omega);
    auto st = theorem2_step(h, w0);
    auto v = parse_seven_element(which);
    n = build_seven_element(st, v);
    report_["construction"] = to_string(v);
    report_["step"] = {{"branch", to_string(st.variant)},
                       {"omega0", to_string(st.omega0)},
                       {"X", to_string(st.X)},
                       {st.variant == Branch::X_positive ? "mu" : "nu", to_string(st.mu_or_nu)},
                       {st.variant == Branch::X_positive ? "alpha" : "beta", to_string(st.alpha_or_beta)},
                       {"h", to_string(st.h)},
                       {"reduced", to_string(st.reduced)},
                       {"root_choice_flagged", st.root_choice_flagged}};
    if (st.root_choice_flagged) std::cerr << "note: several positive roots; the smallest was used\n";
  } else {
    auto c = classify_biquad(biquad_params(h));
    n = c.witness;
    report_["construction"] = "classify";
    report_["min_storage"] = c.storage_min;
    report_["condition"] = c.condition_name();
  }
  report_["network"] = to_json(n);
  text_ << serialize_netlist(n);
  return emit(exit_ok);
}

int Runner::impedance_of(const std::string &path) {
  auto n = load_network(path);
  auto h = impedance(n);
  if (!h) fail(ErrorKind::ZeroDenominator, "the port is open: impedance is infinite");
  report_["impedance"] = to_string(*h);
  report_["storage"] = storage_count(n);
  report_["mcmillan_gap"] = mcmillan_gap(n);
  line(to_string(*h));
  return emit(exit_ok);
}

int Runner::phasor(const std::string &path, const std::string &omega, const std::string &drive, const std::string &value) {
  auto n = load_network(path);
  Rational w = parse_rational(omega);
  std::optional<PhasorDrive> d;
  if (!drive.empty()) {
    Rational v = value.empty() ? Rational(1) : parse_rational(value);
    if (drive == "current") d = PhasorDrive::current(v);
    else if (drive == "voltage") d = PhasorDrive::voltage(v);
    else fail(ErrorKind::InvalidArgument, "drive must be current or voltage");
  }
  auto s = phasor_solve(n, w, d, g_.seed);
  report_ = to_json(s);
  line("source current=" + to_string(s.source_current) + " voltage=" + to_string(s.source_voltage));
  for (const auto &e : s.elements) line(e.id + " current=" + to_string(e.current) + " voltage=" + to_string(e.voltage));
  line("energy_residual=" + to_string(energy_balance(s)));
  return emit(exit_ok);
}

int Runner::blocked(const std::string &path, const std::string &omega) {
  auto n = load_network(path);
  auto r = blocked_report(n, parse_rational(omega), g_.seed.value_or(1));
  report_ = to_json(r);
  report_["open_short_check"] = blocked_open_short_check(n, r);
  for (std::size_t i = 0; i < r.blocked.size(); ++i) {
    std::string s = "blocked";
    for (const auto &id : r.blocked[i]) s += " " + id;
    line(s + (r.blocked_oneport_flags[i] ? " (one-port)" : " (not a one-port)"));
  }
  std::string u = "unblocked";
  for (const auto &id : r.unblocked) u += " " + id;
  line(u);
  std::string c = "conditions";
  for (const auto &[k, v] : r.conditions) c += " " + std::to_string(k) + "=" + (v ? "true" : "false");
  line(c);
  line(std::string("open_short_check=") + (blocked_open_short_check(n, r) ? "true" : "false"));
  return emit(exit_ok);
}

int Runner::ss(const std::string &path, bool pbh) {
  auto n = load_network(path);
  auto r = state_space(n);
  if (auto *f = std::get_if<ExtractionFailure>(&r)) {
    report_ = to_json(*f);
    std::string s = std::string(to_string(f->kind)) + ":";
    for (const auto &id : f->elements) s += " " + id;
    line(s);
    emit(exit_domain);
    std::cerr << "prsyn: no state-space model with inductor currents and capacitor voltages as states\n";
    return exit_domain;
  }
  const auto &m = std::get<StateSpace>(r);
  report_ = to_json(m);
  auto mat = [&](const char *name, const Matrix<Rational> &a) {
    line(std::string(name) + " =");
    for (std::size_t i = 0; i < a.rows(); ++i) {
      std::string row = " ";
      for (std::size_t j = 0; j < a.cols(); ++j) row += " " + to_string(a(i, j));
      line(row);
    }
  };
  std::string st = "states";
  for (const auto &id : m.state_labels) st += " " + id;
  line(st);
  mat("A", m.A);
  mat("B", m.B);
  mat("C", m.C);
  line("D = " + to_string(m.D));
  if (pbh) {
    auto p = pbh_diagnostics(m);
    report_["pbh"] = to_json(p);
    auto modes = [&](const char *what, const std::vector<Mode> &ms) {
      for (const auto &x : ms) {
        std::string s = std::string(what) + " ";
        s += x.exact ? to_string(*x.exact) : approx(x.approx.real(), g_) + (x.approx.imag() < 0 ? " - " : " + ") +
                                                   approx(abs(x.approx.imag()), g_) + "j";
        if (!x.vector.empty()) {
          s += " vector";
          for (const auto &v : x.vector) s += " " + to_string(v);
        }
        line(s);
      }
    };
    modes("uncontrollable", p.uncontrollable_modes);
    modes("unobservable", p.unobservable_modes);
    line(std::string("stabilizable=") + (p.stabilizable ? "true" : "false") + " detectable=" + (p.detectable ? "true" : "false"));
  }
  return emit(exit_ok);
}

int Runner::dual_of(const std::string &path) {
  auto d = dual(load_network(path));
  report_["network"] = to_json(d);
  text_ << serialize_netlist(d);
  return emit(exit_ok);
}

int Runner::invert(const std::string &path, const std::string &omega) {
  auto d = frequency_invert(load_network(path), parse_rational(omega));
  report_["network"] = to_json(d);
  text_ << serialize_netlist(d);
  return emit(exit_ok);
}

int Runner::mech(const std::string &path, bool to_electrical) {
  if (to_electrical) {
    auto n = from_mechanical(parse_mechanical(read_text(path)));
    report_["network"] = to_json(n);
    text_ << serialize_netlist(n);
  } else {
    auto m = to_mechanical(load_network(path));
    report_["mechanical"] = to_json(m);
    text_ << serialize_mechanical(m);
  }
  return emit(exit_ok);
}

int Runner::verify(const std::string &path, const std::string &f) {
  auto n = load_network(path);
  auto want = parse_ratfunc(f);
  auto h = impedance(n);
  bool ok = h && *h == want;
  report_["match"] = ok;
  report_["impedance"] = h ? to_string(*h) : "infinite";
  report_["expected"] = to_string(want);
  line(ok ? "match" : "mismatch: impedance is " + (h ? to_string(*h) : std::string("infinite")));
  return emit(ok ? exit_ok : exit_false);
}

int Runner::run(std::vector<std::string> args) {
  CLI::App app{"Exact synthesis and analysis of passive RLC one-ports", "prsyn"};
  app.require_subcommand(1, 1);
  app.add_flag("--json", g_.json, "Emit a JSON report with exact fraction strings");
  std::optional<std::uint64_t> seed;
  app.add_option("--seed", seed, "Seed for random trajectories");

  std::string f, path, which, named, omega, drive, value;
  bool witness = false, pbh = false, to_electrical = false;
  std::string command;
  auto sub = [&](const char *name, const char *desc) {
    auto *s = app.add_subcommand(name, desc);
    s->callback([&command, name] { command = name; });
    return s;
  };
  auto ratfunc_arg = [&](CLI::App *s) { s->add_option("function", f, "Rational function, e.g. \"(s^2+s+1)/(s^2+2s+3)\"")->required(); };
  auto net_arg = [&](CLI::App *s) { s->add_option("netlist", path, "Netlist file (text or JSON), or - for stdin")->required(); };

  ratfunc_arg(sub("check", "Positive-real and minimum-function tests"));
  ratfunc_arg(sub("params", "Biquadratic parameters (K, omega0, W, F)"));
  auto *cl = sub("classify", "Minimum storage-element count of a biquadratic minimum function");
  ratfunc_arg(cl);
  cl->add_flag("--witness", witness, "Also print the witness network");
  auto *sy = sub("synth", "Synthesize a network realizing the function");
  ratfunc_arg(sy);
  sy->add_option("--which", which, "Seven-element variant: rpfg_first, rpfg_second, alt_first, alt_second");
  sy->add_option("--named", named, "Named construction: N1..N6, Fig2a, Fig2b");
  sy->add_option("--omega0", omega, "Minimum frequency for the seven-element step");
  net_arg(sub("impedance", "Driving-point impedance of a netlist"));
  auto *ph = sub("phasor", "Exact sinusoidal steady state at frequency omega");
  net_arg(ph);
  ph->add_option("--omega", omega, "Frequency")->required();
  ph->add_option("--drive", drive, "Fix the source current or voltage")->check(CLI::IsMember({"current", "voltage"}));
  ph->add_option("--value", value, "Source phasor value (real)");
  auto *bl = sub("blocked", "Blocked subnetworks at omega");
  net_arg(bl);
  bl->add_option("--omega", omega, "Frequency")->required();
  auto *s = sub("ss", "State-space model with inductor currents and capacitor voltages as states");
  net_arg(s);
  s->add_flag("--pbh", pbh, "Also report uncontrollable and unobservable modes");
  net_arg(sub("dual", "Dual network (impedance becomes its reciprocal)"));
  auto *inv = sub("invert", "Frequency inversion s -> omega0^2/s");
  net_arg(inv);
  inv->add_option("--omega0", omega, "Inversion frequency")->required();
  auto *me = sub("mech", "Convert to the mechanical analogue (force-current)");
  net_arg(me);
  me->add_flag("--to-electrical", to_electrical, "Read a mechanical netlist and print the electrical one");
  auto *ve = sub("verify", "Exit 0 when the netlist realizes the function exactly");
  net_arg(ve);
  ve->add_option("function", f, "Expected impedance")->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp &e) {
    std::cout << app.help();
    return exit_ok;
  } catch (const CLI::ParseError &e) {
    std::cerr << "prsyn: " << e.what() << "\n";
    return exit_usage;
  }
  if (seed) g_.seed = seed;
  report_ = json::object();

  try {
    int code = exit_usage;
    if (command == "check") code = check(f);
    else if (command == "params") code = params(f);
    else if (command == "classify") code = classify(f, witness);
    else if (command == "synth") code = synth(f, which, named, omega);
    else if (command == "impedance") code = impedance_of(path);
    else if (command == "phasor") code = phasor(path, omega, drive, value);
    else if (command == "blocked") code = blocked(path, omega);
    else if (command == "ss") code = ss(path, pbh);
    else if (command == "dual") code = dual_of(path);
    else if (command == "invert") code = invert(path, omega);
    else if (command == "mech") code = mech(path, to_electrical);
    else if (command == "verify") code = verify(path, f);
    return code;
  } catch (const Error &e) {
    if (g_.json) std::cout << json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump(2) << "\n";
    std::cerr << "prsyn: " << e.what() << "\n";
    return e.kind() == ErrorKind::SyntaxError || e.kind() == ErrorKind::InvalidArgument ? exit_usage : exit_domain;
  }
}

// Splits a batch line into words; double or single quotes group words.
std::vector<std::string> split_command(const std::string &s) {
  std::vector<std::string> out;
  std::string cur;
  bool any = false;
  char quote = 0;
  for (char c : s) {
    if (quote) {
      if (c == quote) quote = 0;
      else cur += c;
    } else if (c == '"' || c == '\'') {
      quote = c;
      any = true;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      if (any || !cur.empty()) out.push_back(cur);
      cur.clear();
      any = false;
    } else {
      cur += c;
    }
  }
  if (quote) fail(ErrorKind::SyntaxError, "unterminated quote");
  if (any || !cur.empty()) out.push_back(cur);
  return out;
}

} // namespace

int main(int argc, char **argv) {
  Globals g;
  try {
    g.tolerance = tolerance_from_env();
  } catch (const Error &e) {
    std::cerr << "prsyn: PRSYN_PRECISION: " << e.what() << "\n";
    return exit_usage;
  }
  std::vector<std::string> args(argv + 1, argv + argc);

  // --batch: one command per stdin line, after each an "# exit N" line
  if (auto it = std::find(args.begin(), args.end(), "--batch"); it != args.end()) {
    args.erase(it);
    int worst = exit_ok;
    std::string cmd;
    while (std::getline(std::cin, cmd)) {
      auto first = cmd.find_first_not_of(" \t\r");
      if (first == std::string::npos || cmd[first] == '#') continue;
      int code;
      try {
        auto words = split_command(cmd);
        words.insert(words.begin(), args.begin(), args.end());
        code = Runner(g).run(words);
      } catch (const Error &e) {
        std::cerr << "prsyn: " << e.what() << "\n";
        code = exit_usage;
      }
      std::cout << "# exit " << code << std::endl;
      worst = std::max(worst, code);
    }
    return worst;
  }
  return Runner(g).run(args);
}
