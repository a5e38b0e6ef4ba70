#pragma once

#include <prsyn/error.hpp>

#include <gmpxx.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <cctype>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace prsyn {

using Rational = mpq_class;
using Real = boost::multiprecision::cpp_bin_float_50;
using ComplexValue = boost::multiprecision::cpp_complex_50;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) fail(ErrorKind::ZeroDenominator, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational &x) { return sgn(x) == 0; }

inline std::string to_string(const Rational &x) {
  Rational y = x;
  y.canonicalize();
  return y.get_str();
}

inline Real to_real(const Rational &x) {
  return Real(x.get_num().get_str()) / Real(x.get_den().get_str());
}

// Accepts "12", "-3/4", "0.125", "2.5e-3".
inline Rational parse_rational(std::string_view text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) fail(ErrorKind::SyntaxError, "empty number");

  auto digits_only = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };

  bool neg = false;
  std::string_view s = t;
  if (s.front() == '+' || s.front() == '-') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto p = s.substr(0, slash), q = s.substr(slash + 1);
    if (!digits_only(p) || !digits_only(q))
      fail(ErrorKind::SyntaxError, "bad fraction '" + t + "'");
    mpz_class den{std::string(q)};
    if (den == 0) fail(ErrorKind::ZeroDenominator, "fraction '" + t + "'");
    out = Rational(mpz_class{std::string(p)}, den);
  } else {
    std::string_view mant = s;
    long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      mant = s.substr(0, e);
      auto ex = s.substr(e + 1);
      bool eneg = false;
      if (!ex.empty() && (ex.front() == '+' || ex.front() == '-')) {
        eneg = ex.front() == '-';
        ex.remove_prefix(1);
      }
      if (!digits_only(ex) || ex.size() > 6) fail(ErrorKind::SyntaxError, "bad exponent in '" + t + "'");
      exp10 = std::stol(std::string(ex));
      if (eneg) exp10 = -exp10;
    }
    std::string intpart(mant), frac;
    if (auto dot = mant.find('.'); dot != std::string_view::npos) {
      intpart = std::string(mant.substr(0, dot));
      frac = std::string(mant.substr(dot + 1));
    }
    if (intpart.empty() && frac.empty()) fail(ErrorKind::SyntaxError, "bad number '" + t + "'");
    if ((!intpart.empty() && !digits_only(intpart)) || (!frac.empty() && !digits_only(frac)))
      fail(ErrorKind::SyntaxError, "bad number '" + t + "'");
    mpz_class n(intpart.empty() ? std::string("0") : intpart);
    mpz_class scale = 1;
    for (char ch : frac) {
      n = n * 10 + (ch - '0');
      scale *= 10;
    }
    out = Rational(n, scale);
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    if (exp10 > 0) out *= Rational(p10);
    if (exp10 < 0) out /= Rational(p10);
  }
  out.canonicalize();
  return neg ? Rational(-out) : out;
}

// Exact square root when x is the square of a rational.
inline std::optional<Rational> rational_sqrt(const Rational &x) {
  if (sgn(x) < 0) return std::nullopt;
  if (sgn(x) == 0) return Rational(0);
  mpz_class n = x.get_num(), d = x.get_den(), rn, rd;
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

// Element of Q(jw): re + im * (jw) with w^2 rational. When w2 == 0 the
// imaginary coordinate is meaningless and is kept at zero.
struct CRational {
  Rational re, im, w2;

  CRational() = default;
  CRational(const Rational &r) : re(r) {} // NOLINT implicit from the base field
  CRational(const Rational &r, const Rational &i, const Rational &omega_sq) : re(r), im(i), w2(omega_sq) {
    if (sgn(w2) < 0) fail(ErrorKind::InvalidArgument, "negative omega^2");
    if (sgn(w2) == 0) im = 0;
  }

  // The generator j*w itself.
  static CRational jw(const Rational &omega_sq) { return CRational(0, 1, omega_sq); }

  bool zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool real() const { return sgn(im) == 0; }

  CRational conj() const { return CRational(re, -im, w2); }
  // |z|^2 = re^2 + w2 im^2
  Rational norm() const { return re * re + w2 * im * im; }

  ComplexValue to_complex() const {
    Real w = boost::multiprecision::sqrt(to_real(w2));
    return ComplexValue(to_real(re), to_real(im) * w);
  }
};

namespace detail {
inline Rational join_w2(const CRational &a, const CRational &b) {
  if (sgn(a.im) != 0 && sgn(b.im) != 0 && a.w2 != b.w2)
    fail(ErrorKind::InvalidArgument, "mixing elements of different fields Q(jw)");
  return sgn(a.im) != 0 ? a.w2 : (sgn(b.im) != 0 ? b.w2 : (sgn(a.w2) != 0 ? a.w2 : b.w2));
}
} // namespace detail

inline CRational operator+(const CRational &a, const CRational &b) {
  return CRational(a.re + b.re, a.im + b.im, detail::join_w2(a, b));
}
inline CRational operator-(const CRational &a, const CRational &b) {
  return CRational(a.re - b.re, a.im - b.im, detail::join_w2(a, b));
}
inline CRational operator-(const CRational &a) { return CRational(-a.re, -a.im, a.w2); }
inline CRational operator*(const CRational &a, const CRational &b) {
  Rational w2 = detail::join_w2(a, b);
  return CRational(a.re * b.re - w2 * a.im * b.im, a.re * b.im + a.im * b.re, w2);
}
inline CRational inverse(const CRational &a) {
  Rational n = a.norm();
  if (sgn(n) == 0) fail(ErrorKind::ZeroDenominator, "inverse of zero in Q(jw)");
  return CRational(a.re / n, -a.im / n, a.w2);
}
inline CRational operator/(const CRational &a, const CRational &b) { return a * inverse(b); }
inline CRational &operator+=(CRational &a, const CRational &b) { return a = a + b; }
inline CRational &operator-=(CRational &a, const CRational &b) { return a = a - b; }
inline CRational &operator*=(CRational &a, const CRational &b) { return a = a * b; }
inline CRational &operator/=(CRational &a, const CRational &b) { return a = a / b; }
inline bool operator==(const CRational &a, const CRational &b) { return a.re == b.re && a.im == b.im; }
inline bool operator!=(const CRational &a, const CRational &b) { return !(a == b); }
inline bool is_zero(const CRational &x) { return x.zero(); }

// Formats as "re + im*jw" with exact fractions; "jw" is shown as "j" when w = 1.
inline std::string to_string(const CRational &z) {
  if (z.real()) return to_string(z.re);
  std::string unit = z.w2 == 1 ? "j" : "j*sqrt(" + to_string(z.w2) + ")";
  std::string s;
  if (sgn(z.re) != 0) s = to_string(z.re) + (sgn(z.im) < 0 ? " - " : " + ");
  else if (sgn(z.im) < 0) s = "-";
  Rational a = abs(z.im);
  if (a != 1) s += to_string(a) + "*";
  return s + unit;
}

inline std::ostream &operator<<(std::ostream &os, const CRational &z) { return os << to_string(z); }

} // namespace prsyn
