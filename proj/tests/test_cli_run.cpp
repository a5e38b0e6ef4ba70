// Runs the prsyn binary and checks its stdout and exit codes.

#include <gtest/gtest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result prsyn(const std::string &args, const std::string &env = "") {
  std::string cmd = env + " " PRSYN_CLI " " + args + " 2>/dev/null";
  Result r;
  FILE *p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string tmp_file(const std::string &name, const std::string &text) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

const std::string witness = "'(s^2+1/2 s+2/3)/(s^2+1/3 s+3/2)'";
const std::string n1 = "'(s^2+s+1/2)/(s^2+1/2 s+2)'";
const std::string fig2 = "'(s^2+1/24 s+3/4)/(s^2+2s+4/3)'";

} // namespace

TEST(Cli, Params) {
  auto r = prsyn("params " + witness);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "K=1 omega0=1 W=2/3 F=1\n");
}

TEST(Cli, Classify) {
  auto r = prsyn("classify " + n1);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "min_storage=3 condition=a\n");
  EXPECT_EQ(prsyn("classify " + witness).out, "min_storage=5 condition=none\n");
}

TEST(Cli, Verify) {
  std::string net = std::string(PRSYN_FIXTURES) + "/n1.net";
  EXPECT_EQ(prsyn("verify " + net + " " + n1).code, 0);
  EXPECT_EQ(prsyn("verify " + net + " '(s^2+s+1)/(s^2+1/2 s+2)'").code, 1);
}

TEST(Cli, SynthRoundTrip) {
  for (const char *which : {"rpfg_first", "rpfg_second", "alt_first", "alt_second"}) {
    auto r = prsyn("synth " + witness + " --which " + which);
    ASSERT_EQ(r.code, 0) << which;
    auto path = tmp_file(std::string("seven_") + which + ".net", r.out);
    EXPECT_EQ(prsyn("verify " + path + " " + witness).code, 0) << which;
  }
  auto c = prsyn("synth '(s^2+1/2 s+5/8)/(s^2+9/20 s+8/5)'");
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(prsyn("verify " + tmp_file("n3.net", c.out) + " '(s^2+1/2 s+5/8)/(s^2+9/20 s+8/5)'").code, 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(prsyn("").code, 2);
  EXPECT_EQ(prsyn("params").code, 2);
  EXPECT_EQ(prsyn("params '(s+'").code, 2);
  EXPECT_EQ(prsyn("params 's+1'").code, 3);
  EXPECT_EQ(prsyn("check 's-1'").code, 1);
  EXPECT_EQ(prsyn("check " + witness).code, 0);
  EXPECT_EQ(prsyn("synth " + n1 + " --named N3").code, 3);
  EXPECT_EQ(prsyn("params " + witness, "PRSYN_PRECISION=abc").code, 2);
}

TEST(Cli, JsonIsExact) {
  auto r = prsyn("--json synth " + fig2 + " --named Fig2b");
  ASSERT_EQ(r.code, 0);
  auto net = tmp_file("fig2b.json", nlohmann::json::parse(r.out).at("network").dump());
  auto ss = prsyn("--json ss " + net + " --pbh");
  ASSERT_EQ(ss.code, 0);
  auto j = nlohmann::json::parse(ss.out);
  EXPECT_EQ(j["states"], nlohmann::json({"ldi1", "ldi2", "cdi1", "cdi3", "cdi2"}));
  EXPECT_EQ(j["A"][0][0], "-7/2");
  EXPECT_EQ(j["A"][1][2], "8/3");
  EXPECT_EQ(j["D"], "1");
  EXPECT_EQ(j["pbh"]["stabilizable"], false);

  auto a = prsyn("synth " + fig2 + " --named Fig2a");
  auto f = prsyn("--json ss " + tmp_file("fig2a.net", a.out));
  EXPECT_EQ(f.code, 3);
  EXPECT_EQ(nlohmann::json::parse(f.out)["failure"], "CapacitorLoop");
}

TEST(Cli, AnalysisCommands) {
  std::string net = std::string(PRSYN_FIXTURES) + "/n1.net";
  EXPECT_EQ(prsyn("impedance " + net).out, "(s^2 + s + 1/2)/(s^2 + 1/2 s + 2)\n");
  auto ph = prsyn("--json phasor " + net + " --omega 1");
  EXPECT_EQ(nlohmann::json::parse(ph.out)["energy_residual"], "0");
  auto bl = prsyn("--json --seed 7 blocked " + net + " --omega 1");
  auto jb = nlohmann::json::parse(bl.out);
  EXPECT_EQ(jb["ok"], true);
  EXPECT_EQ(jb["unblocked"], nlohmann::json({"l1", "l2", "c1"}));
  EXPECT_EQ(prsyn("impedance " + tmp_file("dual.net", prsyn("dual " + net).out)).out,
            "(s^2 + 1/2 s + 2)/(s^2 + s + 1/2)\n");
  EXPECT_EQ(prsyn("impedance " + tmp_file("inv.net", prsyn("invert " + net + " --omega0 1").out)).out,
            "(1/4 s^2 + 1/2 s + 1/2)/(s^2 + 1/4 s + 1/2)\n");
  auto m = prsyn("mech " + net);
  EXPECT_NE(m.out.find("INERTER c1 c d 1"), std::string::npos);
  auto back = prsyn("mech --to-electrical " + tmp_file("n1.mech", m.out));
  EXPECT_EQ(prsyn("verify " + tmp_file("back.net", back.out) + " " + n1).code, 0);
}

TEST(Cli, DeterministicSeed) {
  std::string net = std::string(PRSYN_FIXTURES) + "/n1.net";
  auto a = prsyn("--seed 5 phasor " + net + " --omega 1");
  auto b = prsyn("--seed 5 phasor " + net + " --omega 1");
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, 0);
}

TEST(Cli, Batch) {
  auto in = tmp_file("batch.txt", "params " + witness + "\n\n# comment\nclassify " + n1 + "\nparams 's'\n");
  auto r = prsyn("--batch < " + in);
  EXPECT_EQ(r.out, "K=1 omega0=1 W=2/3 F=1\n# exit 0\nmin_storage=3 condition=a\n# exit 0\n# exit 3\n");
  EXPECT_EQ(r.code, 3);
}
