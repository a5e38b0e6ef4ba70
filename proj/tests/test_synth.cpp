#include <prsyn/analysis.hpp>
#include <prsyn/synth.hpp>

#include "samplers.hpp"

#include <gtest/gtest.h>

using namespace prsyn;
using prsyn::testing::sample_branch;
using prsyn::testing::sample_region;
using prsyn::testing::small_rational;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }
RationalFunction rf(const char *t) { return parse_ratfunc(t); }

const std::vector<SevenElement> all_seven = {SevenElement::rpfg_first, SevenElement::rpfg_second,
                                             SevenElement::alt_first, SevenElement::alt_second};

ErrorKind kind_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

bool proportional(const std::vector<Rational> &x, const std::vector<Rational> &y) {
  if (x.size() != y.size()) return false;
  std::optional<Rational> r;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(y[i]) == 0) {
      if (sgn(x[i]) != 0) return false;
      continue;
    }
    Rational k = x[i] / y[i];
    if (r && *r != k) return false;
    r = k;
  }
  return r && sgn(*r) != 0;
}

// Reference state-space model of the seven-element capacitor-cutset
// network, except that row 2 of A is taken with the opposite signs in
// columns 3 and 5 when `corrected` is set.
StateSpace fig2_matrices(const BiquadParams &p, bool corrected) {
  auto f = fig2_params(p);
  const Rational &K = p.K, &w = p.omega0, &W = p.W, &F = p.F;
  const Rational &phi = f.phi, &psi = f.psi, &eta = f.eta, &zeta = f.zeta;
  Rational s = corrected ? Rational(1) : Rational(-1);
  Rational a[5][5] = {{-w * phi * psi / F, 0, w / (F * K), -w / (F * K), 0},
                      {0, -w * W * phi / F, s * w * phi / (F * W * K), 0, s * w * phi / (F * W * K)},
                      {-w * F * K, -w * F * K, 0, 0, 0},
                      {w * K * zeta / (F * W), 0, 0, 0, 0},
                      {0, -w * K * F * eta / phi, 0, 0, 0}};
  Rational b[5] = {-w * phi * psi / F, -w * W * phi / F, -w * F * K, w * K * zeta / (F * W), 0};
  Rational c[5] = {K * phi * psi, K * W * W, -1, 1, 0};
  StateSpace ss{Matrix<Rational>(5, 5), Matrix<Rational>(5, 1), Matrix<Rational>(1, 5), K, {}};
  for (std::size_t i = 0; i < 5; ++i) {
    ss.B(i, 0) = b[i];
    ss.C(0, i) = c[i];
    for (std::size_t j = 0; j < 5; ++j) ss.A(i, j) = a[i][j];
  }
  return ss;
}

} // namespace

TEST(Step, BiquadExamples) {
  auto st = theorem2_step(biquad_template({1, 1, q(2, 3), 1}));
  EXPECT_EQ(st.variant, Branch::X_positive);
  EXPECT_EQ(st.mu_or_nu, q(2, 3));
  EXPECT_EQ(st.h, q(2, 3));
  EXPECT_EQ(st.alpha_or_beta, q(13, 24));
  EXPECT_EQ(st.reduced, RationalFunction(q(2, 3)));
  EXPECT_EQ(st.X, 1);

  auto sn = theorem2_step(biquad_template({1, 1, q(3, 2), -1}));
  EXPECT_EQ(sn.variant, Branch::X_negative);
  EXPECT_EQ(sn.mu_or_nu, q(2, 3));
  EXPECT_EQ(sn.h, q(3, 2));
  EXPECT_EQ(sn.alpha_or_beta, q(13, 24));
  EXPECT_EQ(sn.reduced, RationalFunction(q(2, 3)));
}

TEST(Step, Errors) {
  EXPECT_EQ(kind_of([] { theorem2_step(rf("(s^2+1)/s")); }), ErrorKind::NotMinimum);
  EXPECT_EQ(kind_of([] { theorem2_step(rf("(s+1)/(s+2)")); }), ErrorKind::NotMinimum);
  auto h = biquad_template({1, 1, q(2, 3), 1});
  EXPECT_EQ(kind_of([&] { theorem2_step(h, q(1), -1); }), ErrorKind::WrongBranch);
  EXPECT_EQ(kind_of([&] { theorem2_step(h, q(2)); }), ErrorKind::NotMinimum);
}

TEST(Step, ClosedFormsAndInvariants) {
  std::mt19937_64 rng(11);
  for (int sign : {1, -1}) {
    for (int k = 0; k < 30; ++k) {
      auto p = sample_branch(sign, rng);
      auto h = biquad_template(p);
      auto st = theorem2_step(h, p.omega0);
      const Rational &W = p.W, &F = p.F, &w = p.omega0, &K = p.K;
      Rational w2 = w * w;
      EXPECT_EQ(st.h, K * W);
      EXPECT_EQ(st.X, K * F / w);
      const Rational &m = st.mu_or_nu, &a = st.alpha_or_beta;
      if (sign > 0) {
        EXPECT_EQ(m, W * w / F);
        EXPECT_EQ(a, (F * F + W * W) * (1 - W) * w / (2 * W * W * F));
        EXPECT_EQ(st.reduced, RationalFunction(W));
        EXPECT_EQ(h.eval(m), m * st.X);
        EXPECT_EQ(st.derived[0], w2 + 2 * a * m);
        EXPECT_EQ(st.derived[1], m + 2 * a);
        EXPECT_EQ(st.derived[2], st.derived[0] + m * m);
      } else {
        EXPECT_EQ(m, -F * w / W);
        EXPECT_EQ(a, (F * F + W * W) * (1 - W) * w / (2 * W * F));
        EXPECT_EQ(st.reduced, RationalFunction(1 / W));
        EXPECT_EQ(h.eval(m) * m, -w2 * st.X);
        EXPECT_EQ(st.derived[0], w2 + 2 * a * m);
        EXPECT_EQ(st.derived[1], m + 2 * a);
        EXPECT_EQ(st.derived[2], st.derived[0] + m * m);
      }
      EXPECT_TRUE(is_positive_real(st.reduced));
      EXPECT_TRUE(verify_theorem2_identity(h, st));
    }
  }
}

TEST(Step, IdentityIsExact) {
  auto h = biquad_template({1, 1, q(2, 3), 1});
  auto st = theorem2_step(h);
  EXPECT_TRUE(verify_theorem2_identity(h, st));
  auto bad = st;
  bad.alpha_or_beta += q(1, 1000);
  EXPECT_FALSE(verify_theorem2_identity(h, bad));
  auto hn = biquad_template({1, 1, q(3, 2), -1});
  EXPECT_TRUE(verify_theorem2_identity(hn, theorem2_step(hn)));
}

TEST(Step, HigherDegree) {
  // composite around a first-order reduced function has degree four
  Rational mu = 1, a = 1, w2 = 1, h0 = 1;
  RationalFunction hr = rf("(s+1)/(s+2)");
  auto c = [](const Rational &x) { return RationalFunction(x); };
  auto s = RationalFunction::s();
  RationalFunction num = s * s * s + hr * c(2 * a + mu) * s * s + c(w2) * s + hr * c(mu * w2);
  RationalFunction den = hr * s * s * s + c(mu) * s * s + hr * c(2 * a * mu + w2) * s + c(mu * w2);
  RationalFunction h = c(h0) * num / den;
  ASSERT_EQ(h.mcmillan_degree(), 4);
  auto st = theorem2_step(h, q(1));
  EXPECT_EQ(st.mu_or_nu, 1);
  EXPECT_EQ(st.alpha_or_beta, 1);
  EXPECT_EQ(st.reduced, hr);
  EXPECT_TRUE(verify_theorem2_identity(h, st));
  EXPECT_EQ(kind_of([&] { build_seven_element(st, SevenElement::rpfg_first); }), ErrorKind::NonConstantReduced);
}

TEST(SevenElement, MinStorageFiveWitness) {
  auto h = rf("(s^2+1/2 s+2/3)/(s^2+1/3 s+3/2)");
  auto st = theorem2_step(h);
  std::set<std::string> shapes;
  for (auto which : all_seven) {
    auto n = build_seven_element(st, which);
    EXPECT_EQ(*impedance(n), h) << to_string(which);
    EXPECT_EQ(storage_count(n), 5u);
    EXPECT_EQ(n.count(ElementKind::Resistor), 2u);
    EXPECT_EQ(mcmillan_gap(n), 3);
    shapes.insert(serialize_netlist(n));
  }
  EXPECT_EQ(shapes.size(), 4u);
  auto c = classify_biquad(biquad_params(h));
  EXPECT_EQ(c.storage_min, 5);
  EXPECT_EQ(c.condition, 0);
}

TEST(SevenElement, BothBranches) {
  std::mt19937_64 rng(5);
  for (int sign : {1, -1})
    for (int k = 0; k < 15; ++k) {
      auto p = sample_branch(sign, rng);
      auto h = biquad_template(p);
      auto st = theorem2_step(h, p.omega0);
      for (auto which : all_seven) {
        auto n = build_seven_element(st, which);
        EXPECT_EQ(*impedance(n), h) << p << " " << to_string(which);
        EXPECT_EQ(storage_count(n), 5u);
        EXPECT_EQ(n.count(ElementKind::Resistor), 2u);
      }
    }
}

TEST(Classify, Examples) {
  auto a = classify_biquad({1, 1, q(1, 2), 1});
  EXPECT_EQ(a.storage_min, 3);
  EXPECT_EQ(a.condition, 'a');
  EXPECT_EQ(a.witness, build_named(Named::N1, {1, 1, q(1, 2), 1}));
  EXPECT_EQ(classify_biquad({1, 1, q(2, 3), 1}).condition_name(), "none");
  auto c = classify_biquad({1, 1, q(5, 8), q(5, 6)});
  EXPECT_EQ(c.storage_min, 4);
  EXPECT_EQ(c.condition, 'c');
  auto f = classify_biquad({1, 1, q(5, 8), q(15, 32)});
  EXPECT_EQ(f.storage_min, 4);
  EXPECT_EQ(f.condition, 'f');
  EXPECT_EQ(classify_biquad({1, 1, 2, -1}).condition, 'b');
}

TEST(Classify, BoundaryIsExact) {
  for (auto eps : {q(1, 1000000), q(-1, 1000000), q(1, 3)}) {
    auto c = classify_biquad({1, 1, q(5, 8), q(5, 6) + eps});
    EXPECT_EQ(c.storage_min, 5);
    EXPECT_EQ(c.condition, 0);
  }
  EXPECT_EQ(classify_biquad({1, 1, q(1, 2) + q(1, 1000000), 1}).storage_min, 5);
}

TEST(Classify, RoundTripAllRegions) {
  std::mt19937_64 rng(3);
  for (char region : std::string("abcdef_")) {
    for (int k = 0; k < 20; ++k) {
      auto p = sample_region(region, rng);
      auto c = classify_biquad(p);
      char want = region == '_' ? 0 : region;
      ASSERT_EQ(c.condition, want) << p;
      EXPECT_EQ(*impedance(c.witness), biquad_template(p)) << p;
      std::size_t storage = storage_count(c.witness);
      EXPECT_EQ(storage, static_cast<std::size_t>(c.storage_min));
      EXPECT_EQ(c.witness.count(ElementKind::Resistor), 2u);
      int gap = mcmillan_gap(c.witness);
      if (c.storage_min < 5) EXPECT_TRUE(gap == 1 || gap == 2) << p;
      else EXPECT_EQ(gap, 3);
    }
  }
}

TEST(Named, N1Values) {
  auto n = build_named(Named::N1, {1, 1, q(1, 2), 1});
  EXPECT_EQ(n.find("r1")->value, q(1, 2));
  EXPECT_EQ(n.find("r2")->value, q(1, 2));
  EXPECT_EQ(n.find("l1")->value, 1);
  EXPECT_EQ(n.find("l2")->value, 1);
  EXPECT_EQ(n.find("c1")->value, 1);
  EXPECT_EQ(*impedance(n), rf("(s^2+s+1/2)/(s^2+1/2 s+2)"));
}

TEST(Named, ConditionViolated) {
  EXPECT_EQ(kind_of([] { build_named(Named::N3, {1, 1, q(2, 3), 1}); }), ErrorKind::ConditionViolated);
  EXPECT_EQ(kind_of([] { build_named(Named::N1, {1, 1, q(1, 2), -1}); }), ErrorKind::ConditionViolated);
  // F too large for the capacitor-cutset pair
  EXPECT_EQ(kind_of([] { build_named(Named::Fig2a, {1, 1, q(3, 4), 1}); }), ErrorKind::ConditionViolated);
  EXPECT_EQ(kind_of([] { build_named(Named::Fig2b, {1, 1, q(1, 4), q(1, 8)}); }), ErrorKind::ConditionViolated);
  EXPECT_EQ(kind_of([] { parse_named("N9"); }), ErrorKind::InvalidArgument);
}

TEST(Named, N6AtConditionF) {
  BiquadParams p{1, 1, q(5, 8), q(15, 32)};
  EXPECT_EQ(*impedance(build_named(Named::N6, p)), biquad_template(p));
}

TEST(Fig2, StateSpaceMatchesCorrectedReference) {
  for (BiquadParams p : {BiquadParams{1, 1, q(3, 4), q(1, 8)}, BiquadParams{2, 3, q(2, 3), q(1, 5)}}) {
    auto ss = std::get<StateSpace>(state_space(build_named(Named::Fig2b, p)));
    auto want = fig2_matrices(p, true);
    EXPECT_EQ(ss.state_labels, (std::vector<std::string>{"ldi1", "ldi2", "cdi1", "cdi3", "cdi2"}));
    EXPECT_EQ(ss.A, want.A);
    EXPECT_EQ(ss.B, want.B);
    EXPECT_EQ(ss.C, want.C);
    EXPECT_EQ(ss.D, want.D);
    EXPECT_EQ(transfer_function(ss), biquad_template(p));
  }
}

TEST(Fig2, ReferenceSignsDoNotRealizeH) {
  // with the reference signs A is not a model of any orientation of the network
  BiquadParams p{1, 1, q(3, 4), q(1, 8)};
  EXPECT_NE(transfer_function(fig2_matrices(p, false)), biquad_template(p));
}

TEST(Fig2, PbhModes) {
  BiquadParams p{1, 1, q(3, 4), q(1, 8)};
  auto f = fig2_params(p);
  const Rational &K = p.K, &W = p.W, &F = p.F;
  auto ss = std::get<StateSpace>(state_space(build_named(Named::Fig2b, p)));
  auto r = pbh_diagnostics(ss);
  std::vector<Rational> xt{-f.phi * W * W, f.phi * f.phi * W, -K * F * F * f.eta, K * f.zeta, K * F * F * f.eta};
  std::vector<Rational> xh{0, 0, f.eta * f.zeta, F * F * W * f.eta, -f.phi * f.zeta};
  Rational lam = -W * f.phi / F;
  bool unobs = false, unctrl = false;
  for (const auto &m : r.unobservable_modes)
    if (m.exact && *m.exact == lam && proportional(m.vector, xt)) unobs = true;
  for (const auto &m : r.uncontrollable_modes)
    if (m.exact && sgn(*m.exact) == 0 && proportional(m.vector, xh)) unctrl = true;
  EXPECT_TRUE(unobs);
  EXPECT_TRUE(unctrl);
  EXPECT_FALSE(r.stabilizable);
}

TEST(Fig2, CapacitorLoopAndSameImpedance) {
  BiquadParams p{1, 1, q(3, 4), q(1, 8)};
  auto a = build_named(Named::Fig2a, p), b = build_named(Named::Fig2b, p);
  auto fa = std::get<ExtractionFailure>(state_space(a));
  EXPECT_EQ(fa.kind, ExtractionFailure::Kind::CapacitorLoop);
  EXPECT_EQ(fa.elements, (std::vector<std::string>{"c1", "c2", "c3"}));
  EXPECT_EQ(*impedance(a), *impedance(b));
  EXPECT_EQ(*impedance(a), biquad_template(p));
}

TEST(Quartet, Q7IsN1) {
  QuartetParams qp;
  qp.A = q(1, 2);
  qp.B = q(1, 2);
  qp.C = 1;
  EXPECT_EQ(build_quartet(qp, 1), build_named(Named::N1, {1, 1, q(1, 2), 1}));
}

TEST(Quartet, Q8AtConditionC) {
  Rational W = q(5, 8), F = q(5, 6);
  Rational g1 = (1 - W * W) / (W * W), c2 = (2 * W - 1) / (1 - W);
  QuartetParams qp;
  qp.family = QuartetFamily::Q8;
  qp.A = 1 / g1;
  qp.B = 1;
  qp.D = F;
  qp.C = F / c2;
  EXPECT_EQ(*impedance(build_quartet(qp, 1)), biquad_template({1, 1, W, F}));
}

TEST(Quartet, N11AtConditionA) {
  Rational F = q(3, 5);
  for (Rational g3 : {q(1), q(3), q(7, 2)}) {
    QuartetParams qp;
    qp.family = QuartetFamily::N11;
    Rational r1 = (g3 - 1) / g3, g2 = g3 * (4 - g3) / ((g3 - 2) * (g3 - 2)), c1 = 2 * F * F * g3 * g3 / ((2 - g3) * (2 - g3));
    qp.variant = sgn(r1) == 0 ? 'a' : 0;
    qp.A = r1;
    qp.B = 1 / g3;
    qp.C = g2;
    qp.D = F / c1;
    qp.E = F;
    auto bp = biquad_params(*impedance(build_quartet(qp, 1)));
    EXPECT_EQ(bp.W, q(1, 2)) << g3;
    EXPECT_EQ(bp.F, F);
  }
}

TEST(Quartet, Constraints) {
  QuartetParams qp;
  qp.family = QuartetFamily::Q10;
  qp.A = 1;
  qp.B = 2;
  qp.C = 2;
  qp.D = 1;
  EXPECT_EQ(kind_of([&] { build_quartet(qp, 1); }), ErrorKind::ConstraintViolated);
  qp.family = QuartetFamily::Q8;
  qp.A = 0;
  EXPECT_EQ(kind_of([&] { build_quartet(qp, 1); }), ErrorKind::ConstraintViolated);
  QuartetParams n;
  n.family = QuartetFamily::N11;
  n.variant = 'b';
  n.A = n.B = n.C = n.D = n.E = 1;
  EXPECT_EQ(kind_of([&] { build_quartet(n, 1); }), ErrorKind::ConstraintViolated);
  n.C = 0;
  EXPECT_EQ(build_quartet(n, 1).find("r3"), nullptr);
  qp.family = QuartetFamily::Q7;
  qp.A = 1;
  qp.variant = 'a';
  EXPECT_EQ(kind_of([&] { build_quartet(qp, 1); }), ErrorKind::ConstraintViolated);
}

TEST(Quartet, Names) {
  for (std::string s : {"N7", "N8i", "N9d", "N10di", "N11", "N11ai", "N12b", "N12bdi"})
    EXPECT_EQ(quartet_name(parse_quartet_name(s)), s);
  EXPECT_EQ(kind_of([] { parse_quartet_name("N13"); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { parse_quartet_name("N7a"); }), ErrorKind::InvalidArgument);
}

TEST(Quartet, ClosureUnderDualAndInversion) {
  std::mt19937_64 rng(17);
  for (int fam = 0; fam < 6; ++fam) {
    for (int k = 0; k < 8; ++k) {
      QuartetParams qp;
      qp.family = static_cast<QuartetFamily>(fam);
      qp.A = small_rational(rng);
      qp.B = small_rational(rng);
      qp.C = small_rational(rng);
      qp.D = small_rational(rng);
      qp.E = small_rational(rng);
      if (qp.family == QuartetFamily::Q10 && (sgn((qp.B - qp.D) * (qp.C - qp.D)) <= 0 || qp.B == qp.C)) continue;
      if (qp.family >= QuartetFamily::N11) qp.variant = "\0ab"[k % 3];
      if (qp.variant == 'a') qp.A = 0;
      if (qp.variant == 'b') qp.C = 0;
      Rational w0 = small_rational(rng);
      for (int mem = 0; mem < 4; ++mem) {
        qp.member = static_cast<QuartetMember>(mem);
        auto n = build_quartet(qp, w0);
        auto h = *impedance(n);
        EXPECT_EQ(*impedance(dual(n)), h.reciprocal()) << quartet_name(qp);
        EXPECT_EQ(*impedance(frequency_invert(n, w0)), h.invert_frequency(w0 * w0)) << quartet_name(qp);
      }
    }
  }
}

TEST(Quartet, MembersAreMinimumFunctions) {
  // Q7 to Q10 have H(j w0) purely imaginary for every admissible choice
  std::mt19937_64 rng(23);
  for (int fam = 0; fam < 4; ++fam)
    for (int k = 0; k < 10; ++k) {
      QuartetParams qp;
      qp.family = static_cast<QuartetFamily>(fam);
      qp.A = small_rational(rng);
      qp.B = small_rational(rng);
      qp.C = small_rational(rng);
      qp.D = small_rational(rng);
      if (qp.family == QuartetFamily::Q10 && (sgn((qp.B - qp.D) * (qp.C - qp.D)) <= 0 || qp.B == qp.C)) continue;
      Rational w0 = small_rational(rng);
      for (int mem = 0; mem < 4; ++mem) {
        qp.member = static_cast<QuartetMember>(mem);
        auto h = *impedance(build_quartet(qp, w0));
        EXPECT_EQ(sgn(h.eval(CRational::jw(w0 * w0)).re), 0) << quartet_name(qp);
      }
    }
}

TEST(Structure, Examples) {
  auto m = match_minimum_structure(build_named(Named::N1, {1, 1, q(1, 2), 1}), 1);
  EXPECT_EQ(m.condition, 3);
  EXPECT_EQ(m.bridge.arms[2], std::vector<std::string>{"c1"});
  EXPECT_EQ(m.bridge.arms[3], std::vector<std::string>{"l1"});
  EXPECT_EQ(m.bridge.arms[4], std::vector<std::string>{"l2"});

  QuartetParams qp;
  qp.family = QuartetFamily::Q8;
  qp.A = 1;
  qp.B = 2;
  qp.C = 3;
  qp.D = 1;
  auto m8 = match_minimum_structure(build_quartet(qp, 1), 1);
  EXPECT_EQ(m8.condition, 4);
  EXPECT_EQ(m8.bridge.arms[3], (std::vector<std::string>{"l2", "c2"}));

  qp.family = QuartetFamily::Q9;
  EXPECT_EQ(match_minimum_structure(build_quartet(qp, 1), 1).condition, 1);
  qp.family = QuartetFamily::Q10;
  qp.D = q(1, 2);
  EXPECT_EQ(match_minimum_structure(build_quartet(qp, 1), 1).condition, 2);

  auto rl = parse_netlist("R r1 a m 1\nL l1 m b 1\nPORT a b\n");
  EXPECT_EQ(kind_of([&] { match_minimum_structure(rl, 1); }), ErrorKind::NoMatch);
  auto seven = build_seven_element(theorem2_step(rf("(s^2+1/2 s+2/3)/(s^2+1/3 s+3/2)")), SevenElement::rpfg_first);
  EXPECT_EQ(kind_of([&] { match_minimum_structure(seven, 1); }), ErrorKind::NoMatch);
}

TEST(Structure, FourStorageWitnesses) {
  std::mt19937_64 rng(29);
  for (char region : std::string("abcdef"))
    for (int k = 0; k < 5; ++k) {
      auto p = sample_region(region, rng);
      auto m = match_minimum_structure(classify_biquad(p).witness, p.omega0);
      EXPECT_GE(m.condition, 1) << region;
    }
}

TEST(Resultant, Q7Examples) {
  ResultantFixture fx{ResultantFamily::Q7, {{"K", 1}, {"omega0", 1}, {"F", 1}, {"g1", 1}, {"g2", 2}}};
  auto r = resultant_report(fx);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.lhs, 81);
  fx.values["g2"] = 1;
  r = resultant_report(fx);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.lhs, 0);
}

TEST(Resultant, Q8SolutionPoint) {
  Rational W = q(5, 8);
  ResultantFixture fx{ResultantFamily::Q8,
                      {{"K", 1},
                       {"omega0", 1},
                       {"g1", (1 - W * W) / (W * W)},
                       {"g2", 1},
                       {"c2", (2 * W - 1) / (1 - W)},
                       {"F", q(5, 6)}}};
  auto v = family_resultants(fx);
  EXPECT_EQ(v.R0, 0);
  EXPECT_EQ(v.R1, 0);
  EXPECT_EQ(impedance(resultant_network(fx))->mcmillan_degree(), 2);
  EXPECT_TRUE(resultant_fixture_check(fx));
}

TEST(Resultant, RandomPoints) {
  std::mt19937_64 rng(31);
  for (auto fam : {ResultantFamily::Q7, ResultantFamily::Q8, ResultantFamily::N11, ResultantFamily::N12})
    for (int k = 0; k < 5; ++k) {
      ResultantFixture fx{fam, {}};
      for (const char *name : {"K", "omega0", "F", "g1", "g2", "g3", "c2", "r1"}) fx.values[name] = small_rational(rng);
      while (fx.values["r1"] * fx.values["g3"] == 1) fx.values["r1"] = small_rational(rng);
      auto r = resultant_report(fx);
      EXPECT_TRUE(r.ok) << to_string(fam) << " " << r.note;
      if (fam == ResultantFamily::N11) {
        ASSERT_TRUE(r.uncorrected.has_value());
        EXPECT_NE(*r.uncorrected, r.lhs);
      }
    }
}

TEST(Resultant, N12HasNoBiquadraticMember) {
  // f1 = 0 fixes x1; the impedance then still has degree above two
  std::mt19937_64 rng(37);
  int feasible = 0;
  while (feasible < 50) {
    Rational r1 = small_rational(rng), g3 = small_rational(rng), F = small_rational(rng);
    Rational u = 1 - r1 * g3;
    if (sgn(u) <= 0) continue;
    Rational g2 = g3 / u + small_rational(rng);
    Rational x1 = (g2 * u - g3) / (g3 * u);
    ASSERT_GT(sgn(x1), 0);
    ResultantFixture fx{ResultantFamily::N12,
                        {{"K", 1}, {"omega0", small_rational(rng)}, {"F", F}, {"r1", r1}, {"g2", g2}, {"g3", g3}, {"x1", x1}}};
    auto v = family_resultants(fx);
    EXPECT_EQ(v.R0, 0);
    EXPECT_NE(v.R1, 0);
    EXPECT_GT(impedance(resultant_network(fx))->mcmillan_degree(), 2);
    ++feasible;
  }
}

TEST(Blocking, SynthesizedNetworks) {
  std::mt19937_64 rng(41);
  for (char region : std::string("abcdef_"))
    for (int k = 0; k < 3; ++k) {
      auto p = sample_region(region, rng);
      auto n = classify_biquad(p).witness;
      auto sol = phasor_solve(n, p.omega0);
      EXPECT_EQ(energy_balance(sol), 0);
      auto rep = blocked_report(n, p.omega0);
      EXPECT_TRUE(rep.conditions.at(2)) << region;
      EXPECT_TRUE(blocked_open_short_check(n, rep)) << region;
      for (bool f : rep.blocked_oneport_flags) EXPECT_TRUE(f);
      for (const auto &id : rep.unblocked) EXPECT_TRUE(is_storage(n.find(id)->kind));
    }
}

TEST(Resultant, DegenerateSubstitution) {
  ResultantFixture fx{ResultantFamily::N11, {{"K", 1}, {"omega0", 1}, {"F", 2}, {"r1", 1}, {"g2", 3}, {"g3", 1}}};
  EXPECT_EQ(kind_of([&] { resultant_report(fx); }), ErrorKind::InvalidArgument);
}
