#pragma once

#include <prsyn/polyrat/polynomial.hpp>

#include <cctype>
#include <ostream>
#include <string>
#include <string_view>

namespace prsyn {

// Pointwise evaluation of a rational-coefficient polynomial at a complex point.
inline ComplexValue eval_complex(const Poly &p, const ComplexValue &z) {
  ComplexValue acc(0);
  for (int i = p.degree(); i >= 0; --i) acc = acc * z + ComplexValue(to_real(p[i]));
  return acc;
}

// num/den kept coprime with den monic. The zero function is 0/1.
class RationalFunction {
public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(const Rational &c) : num_(c), den_(Rational(1)) {} // NOLINT constants embed implicitly
  RationalFunction(const Poly &p) : num_(p), den_(Rational(1)) {}     // NOLINT polynomials embed implicitly
  RationalFunction(const Poly &num, const Poly &den) : num_(num), den_(den) { normalize(); }

  static RationalFunction s() { return RationalFunction(Poly::x()); }

  const Poly &num() const { return num_; }
  const Poly &den() const { return den_; }
  bool zero() const { return num_.zero(); }
  bool constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  int mcmillan_degree() const { return std::max(std::max(num_.degree(), 0), den_.degree()); }

  Rational eval(const Rational &x) const {
    Rational d = den_(x);
    if (sgn(d) == 0) fail(ErrorKind::PoleAtPoint, "pole at s = " + to_string(x));
    return num_(x) / d;
  }
  CRational eval(const CRational &z) const {
    CRational d = den_.eval(z);
    if (d.zero()) fail(ErrorKind::PoleAtPoint, "pole at s = " + to_string(z));
    return num_.eval(z) / d;
  }
  // Floating evaluation; a denominator below `tol` counts as a pole.
  ComplexValue eval(const ComplexValue &z, double tol = 1e-12) const {
    ComplexValue d = eval_complex(den_, z);
    if (abs(d) < Real(tol)) fail(ErrorKind::PoleAtPoint, "pole near evaluation point");
    return eval_complex(num_, z) / d;
  }

  // Value at infinity when finite.
  std::optional<Rational> at_infinity() const {
    if (num_.degree() > den_.degree()) return std::nullopt;
    if (num_.degree() < den_.degree()) return Rational(0);
    return num_.lead() / den_.lead();
  }

  RationalFunction reciprocal() const {
    if (zero()) fail(ErrorKind::ZeroDenominator, "reciprocal of the zero function");
    return RationalFunction(den_, num_);
  }

  // f(c^2/s) for constant c^2 = w2.
  RationalFunction invert_frequency(const Rational &w2) const {
    int n = std::max(std::max(num_.degree(), 0), den_.degree());
    return RationalFunction(num_.reverse_scaled(n, w2), den_.reverse_scaled(n, w2));
  }

  // f(-s)
  RationalFunction reflect() const { return RationalFunction(num_.reflect(), den_.reflect()); }

  friend RationalFunction operator+(const RationalFunction &a, const RationalFunction &b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction &a) { return RationalFunction(-a.num_, a.den_, true); }
  friend RationalFunction operator-(const RationalFunction &a, const RationalFunction &b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction &a, const RationalFunction &b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction &a, const RationalFunction &b) {
    if (b.zero()) fail(ErrorKind::ZeroDenominator, "division by the zero function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction &operator+=(const RationalFunction &o) { return *this = *this + o; }
  RationalFunction &operator-=(const RationalFunction &o) { return *this = *this - o; }
  RationalFunction &operator*=(const RationalFunction &o) { return *this = *this * o; }
  RationalFunction &operator/=(const RationalFunction &o) { return *this = *this / o; }
  friend bool operator==(const RationalFunction &a, const RationalFunction &b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RationalFunction &a, const RationalFunction &b) { return !(a == b); }

  RationalFunction pow(int n) const {
    if (n < 0) return reciprocal().pow(-n);
    return RationalFunction(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
  }

private:
  // already canonical
  RationalFunction(Poly num, Poly den, bool) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (den_.zero()) fail(ErrorKind::ZeroDenominator, "rational function with zero denominator");
    if (num_.zero()) {
      den_ = Poly(Rational(1));
      return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    Rational l = den_.lead();
    if (l != 1) {
      num_ = num_ * Poly(Rational(1 / l));
      den_ = den_.monic();
    }
  }

  Poly num_, den_;
};

using RatFunc = RationalFunction;

inline RationalFunction reduce(const Poly &num, const Poly &den) { return RationalFunction(num, den); }

inline std::string to_string(const RationalFunction &f, const std::string &var = "s") {
  if (f.den() == Poly(Rational(1))) return "(" + to_string(f.num(), var) + ")";
  return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

inline std::ostream &operator<<(std::ostream &os, const RationalFunction &f) { return os << to_string(f); }

namespace detail {
// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := power (('*'|'/'|<juxtaposition>) power)*
// power  := atom ['^' integer]
// atom   := number | 's' | '(' expr ')'
class RatFuncParser {
public:
  explicit RatFuncParser(std::string_view t) : t_(t) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip();
    if (i_ != t_.size()) error("unexpected '" + std::string(1, t_[i_]) + "'");
    return r;
  }

private:
  [[noreturn]] void error(const std::string &m) const {
    fail(ErrorKind::SyntaxError, m + " at offset " + std::to_string(i_) + " in '" + std::string(t_) + "'");
  }
  void skip() {
    while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
  }
  char peek() {
    skip();
    return i_ < t_.size() ? t_[i_] : '\0';
  }

  RationalFunction expr() {
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = t_[i_++] == '-';
    RationalFunction acc = term();
    if (neg) acc = -acc;
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++i_;
      RationalFunction rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  bool starts_atom(char c) const { return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 's' || c == '('; }

  RationalFunction term() {
    RationalFunction acc = power();
    for (;;) {
      char c = peek();
      if (c == '*' || c == '/') {
        ++i_;
        RationalFunction rhs = power();
        if (c == '/' && rhs.zero()) fail(ErrorKind::ZeroDenominator, "division by zero in '" + std::string(t_) + "'");
        acc = c == '*' ? acc * rhs : acc / rhs;
      } else if (starts_atom(c)) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (peek() == '^') {
      ++i_;
      skip();
      bool neg = false;
      if (i_ < t_.size() && t_[i_] == '-') {
        neg = true;
        ++i_;
      }
      std::size_t st = i_;
      while (i_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[i_]))) ++i_;
      if (st == i_ || i_ - st > 4) error("bad exponent");
      int e = std::stoi(std::string(t_.substr(st, i_ - st)));
      base = base.pow(neg ? -e : e);
    }
    return base;
  }

  RationalFunction atom() {
    char c = peek();
    if (c == 's') {
      ++i_;
      return RationalFunction::s();
    }
    if (c == '(') {
      ++i_;
      RationalFunction r = expr();
      if (peek() != ')') error("expected ')'");
      ++i_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t st = i_;
      while (i_ < t_.size() && (std::isdigit(static_cast<unsigned char>(t_[i_])) || t_[i_] == '.')) ++i_;
      // exponent only when followed by a digit or sign+digit, so "2s" is not misread
      if (i_ < t_.size() && (t_[i_] == 'e' || t_[i_] == 'E')) {
        std::size_t j = i_ + 1;
        if (j < t_.size() && (t_[j] == '+' || t_[j] == '-')) ++j;
        if (j < t_.size() && std::isdigit(static_cast<unsigned char>(t_[j]))) {
          i_ = j;
          while (i_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[i_]))) ++i_;
        }
      }
      return RationalFunction(parse_rational(t_.substr(st, i_ - st)));
    }
    if (c == '\0') error("unexpected end of input");
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view t_;
  std::size_t i_ = 0;
};
} // namespace detail

// Parses literals such as "(s^2 + 1/2 s + 2/3)/(s^2 + 1/3 s + 3/2)". A '/'
// between two numbers binds like any other division, so "1/2 s" is s/2.
inline RationalFunction parse_ratfunc(std::string_view text) { return detail::RatFuncParser(text).parse(); }

} // namespace prsyn
