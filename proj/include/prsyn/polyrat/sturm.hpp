#pragma once

#include <prsyn/polyrat/polynomial.hpp>

#include <optional>
#include <vector>

namespace prsyn {

// Sturm chain of a polynomial over Q (p, p', -rem, ...).
class SturmChain {
public:
  explicit SturmChain(const Poly &p) {
    if (p.zero()) return;
    chain_.push_back(p);
    chain_.push_back(p.derivative());
    while (!chain_.back().zero()) {
      Poly r = chain_[chain_.size() - 2] % chain_.back();
      chain_.push_back(-r);
    }
    chain_.pop_back();
  }

  int variations_at(const Rational &x) const {
    int v = 0, prev = 0;
    for (const auto &q : chain_) {
      int s = sgn(q(x));
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  }

  int variations_at_infinity(bool positive) const {
    int v = 0, prev = 0;
    for (const auto &q : chain_) {
      int s = sgn(q.lead());
      if (!positive && q.degree() % 2 != 0) s = -s;
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  }

  // Number of distinct real roots in (lo, hi].
  int count(const Rational &lo, const Rational &hi) const { return variations_at(lo) - variations_at(hi); }
  int count_total() const { return variations_at_infinity(false) - variations_at_infinity(true); }
  int count_above(const Rational &lo) const { return variations_at(lo) - variations_at_infinity(true); }
  int count_below_or_at(const Rational &hi) const { return variations_at_infinity(false) - variations_at(hi); }

private:
  std::vector<Poly> chain_;
};

// Cauchy bound: every real root lies in [-B, B].
inline Rational root_bound(const Poly &p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p[i] / p.lead());
    if (r > m) m = r;
  }
  return m + 1;
}

// An isolating interval (lo, hi] for exactly one real root; `exact` is set
// when that root is rational.
struct RealRoot {
  Rational lo, hi;
  std::optional<Rational> exact;

  Real approx() const { return exact ? to_real(*exact) : (to_real(lo) + to_real(hi)) / 2; }
};

namespace detail {
// Any rational root of p has a denominator dividing the leading coefficient
// of the integer-scaled p. So once the interval is shorter than 1/lead only
// one candidate of that form can lie inside.
inline mpz_class integer_lead(const Poly &p) {
  mpz_class l = 1;
  for (const auto &c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  Rational lead = p.lead() * Rational(l);
  mpz_class a = abs(lead.get_num());
  return a;
}

inline Rational ceil_rational(const Rational &x) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return Rational(q);
}
} // namespace detail

// Shrinks the interval until it is narrower than `width`; checks rational
// candidates exactly along the way.
inline void refine_root(const Poly &p, const SturmChain &sc, RealRoot &r, const Rational &width) {
  if (r.exact) return;
  mpz_class lead = detail::integer_lead(p);
  Rational grid = Rational(1) / Rational(lead);
  while (r.hi - r.lo >= width || r.hi - r.lo >= grid) {
    Rational mid = (r.lo + r.hi) / 2;
    if (sgn(p(mid)) == 0) {
      r.exact = mid;
      r.lo = r.hi = mid;
      return;
    }
    if (sc.count(r.lo, mid) == 1) r.hi = mid;
    else r.lo = mid;
    if (r.hi - r.lo < grid) {
      // at most one k/lead inside (lo, hi]
      Rational k = detail::ceil_rational(r.lo * Rational(lead));
      Rational cand = k / Rational(lead);
      if (cand == r.lo) cand = (k + 1) / Rational(lead);
      if (cand > r.lo && cand <= r.hi && sgn(p(cand)) == 0) {
        r.exact = cand;
        r.lo = r.hi = cand;
        return;
      }
      if (r.hi - r.lo < width) return;
    }
  }
  if (sgn(p(r.hi)) == 0) {
    r.exact = r.hi;
    r.lo = r.hi;
  }
}

// All distinct real roots of p in ascending order, each refined to `width`
// and certified rational where it is.
inline std::vector<RealRoot> real_roots(const Poly &p, const Rational &width = Rational(1, 1000000)) {
  std::vector<RealRoot> out;
  if (p.degree() <= 0) return out;
  Poly sf = squarefree_part(p);
  SturmChain sc(sf);
  Rational b = root_bound(sf);
  struct Range { Rational lo, hi; };
  std::vector<Range> todo{{-b, b}};
  while (!todo.empty()) {
    Range r = todo.back();
    todo.pop_back();
    int n = sc.count(r.lo, r.hi);
    if (n == 0) continue;
    if (n == 1) {
      out.push_back({r.lo, r.hi, std::nullopt});
      continue;
    }
    Rational mid = (r.lo + r.hi) / 2;
    todo.push_back({r.lo, mid});
    todo.push_back({mid, r.hi});
  }
  for (auto &r : out) refine_root(sf, sc, r, width);
  std::sort(out.begin(), out.end(), [](const RealRoot &a, const RealRoot &b) { return a.hi <= b.lo; });
  return out;
}

// Sign of q at the unique root of squarefree p inside r (q must not vanish there).
inline int sign_at_root(const Poly &p, const Poly &q, RealRoot r) {
  if (r.exact) return sgn(q(*r.exact));
  SturmChain sp(p), sq(q);
  while (sq.count(r.lo, r.hi) != 0) {
    Rational mid = (r.lo + r.hi) / 2;
    if (sp.count(r.lo, mid) == 1) r.hi = mid;
    else r.lo = mid;
  }
  return sgn(q(r.hi));
}

// Routh array test for all roots in the open left half-plane.
inline bool strictly_hurwitz(const Poly &p) {
  if (p.zero()) return false;
  int n = p.degree();
  if (n == 0) return true;
  int s0 = sgn(p.lead());
  for (int i = 0; i <= n; ++i)
    if (sgn(p[i]) != s0) return false;
  std::vector<Rational> r1, r2;
  for (int i = n; i >= 0; i -= 2) r1.push_back(p[i]);
  for (int i = n - 1; i >= 0; i -= 2) r2.push_back(p[i]);
  for (int row = 0; row < n; ++row) {
    if (r2.empty() || sgn(r2[0]) != s0) return false;
    std::vector<Rational> r3;
    for (std::size_t k = 0; k + 1 < r1.size(); ++k) {
      Rational b = k + 1 < r2.size() ? r2[k + 1] : Rational(0);
      r3.push_back((r2[0] * r1[k + 1] - r1[0] * b) / r2[0]);
    }
    r1 = std::move(r2);
    r2 = std::move(r3);
    while (!r2.empty() && sgn(r2.back()) == 0 && r2.size() > 1) r2.pop_back();
    if (row + 1 < n && (r2.empty() || sgn(r2[0]) == 0)) return false;
  }
  return true;
}

} // namespace prsyn
