#pragma once

#include <prsyn/polyrat/rational.hpp>

#include <algorithm>
#include <climits>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace prsyn {

// Dense univariate polynomial, coefficients in ascending degree. The zero
// polynomial stores no coefficients and has degree `neg_infinity`.
template <class T> class Polynomial {
public:
  using value_type = T;
  static constexpr int neg_infinity = INT_MIN;

  Polynomial() = default;
  Polynomial(std::initializer_list<T> c) : c_(c) { trim(); }
  explicit Polynomial(std::vector<T> c) : c_(std::move(c)) { trim(); }
  Polynomial(const T &constant) : c_{constant} { trim(); } // NOLINT constants embed implicitly

  static Polynomial monomial(const T &coeff, int degree) {
    std::vector<T> c(static_cast<std::size_t>(degree) + 1, T(0));
    c.back() = coeff;
    return Polynomial(std::move(c));
  }
  static Polynomial x() { return monomial(T(1), 1); }

  const std::vector<T> &coeffs() const { return c_; }
  bool zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? neg_infinity : static_cast<int>(c_.size()) - 1; }
  T lead() const { return c_.empty() ? T(0) : c_.back(); }
  T operator[](int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : T(0);
  }
  bool constant() const { return c_.size() <= 1; }

  template <class U> U eval(const U &z) const {
    U acc = U(T(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + U(*it);
    return acc;
  }
  T operator()(const T &z) const { return eval<T>(z); }

  Polynomial derivative() const {
    std::vector<T> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * T(static_cast<long>(i)));
    return Polynomial(std::move(d));
  }

  // p(-s)
  Polynomial reflect() const {
    std::vector<T> d = c_;
    for (std::size_t i = 1; i < d.size(); i += 2) d[i] = -d[i];
    return Polynomial(std::move(d));
  }

  // p(c s)
  Polynomial scale_arg(const T &c) const {
    std::vector<T> d = c_;
    T pw(1);
    for (auto &x : d) {
      x = x * pw;
      pw = pw * c;
    }
    return Polynomial(std::move(d));
  }

  // s^n p(c/s), n >= degree
  Polynomial reverse_scaled(int n, const T &c) const {
    std::vector<T> d(static_cast<std::size_t>(n) + 1, T(0));
    T pw(1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      d[static_cast<std::size_t>(n) - i] = c_[i] * pw;
      pw = pw * c;
    }
    return Polynomial(std::move(d));
  }

  // Even and odd parts as polynomials in u = s^2: p(s) = e(s^2) + s o(s^2).
  std::pair<Polynomial, Polynomial> even_odd() const {
    std::vector<T> e, o;
    for (std::size_t i = 0; i < c_.size(); ++i) (i % 2 == 0 ? e : o).push_back(c_[i]);
    return {Polynomial(std::move(e)), Polynomial(std::move(o))};
  }

  // q(s^2) from q(u).
  Polynomial in_square() const {
    std::vector<T> d(c_.empty() ? 0 : 2 * c_.size() - 1, T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) d[2 * i] = c_[i];
    return Polynomial(std::move(d));
  }

  Polynomial monic() const {
    if (c_.empty()) return *this;
    T l = lead();
    std::vector<T> d = c_;
    for (auto &x : d) x = x / l;
    return Polynomial(std::move(d));
  }

  Polynomial &operator+=(const Polynomial &o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Polynomial &operator-=(const Polynomial &o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  Polynomial &operator*=(const Polynomial &o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  friend Polynomial operator-(const Polynomial &a) {
    std::vector<T> d = a.c_;
    for (auto &x : d) x = -x;
    return Polynomial(std::move(d));
  }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    if (a.zero() || b.zero()) return Polynomial();
    std::vector<T> d(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] = d[i + j] + a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(d));
  }
  friend bool operator==(const Polynomial &a, const Polynomial &b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial &a, const Polynomial &b) { return !(a == b); }

  Polynomial pow(unsigned n) const {
    Polynomial r(T(1)), b = *this;
    while (n) {
      if (n & 1u) r = r * b;
      b = b * b;
      n >>= 1u;
    }
    return r;
  }

  // p(q(s))
  Polynomial compose(const Polynomial &q) const {
    Polynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Polynomial(*it);
    return acc;
  }

private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

template <class T> bool is_zero(const Polynomial<T> &p) { return p.zero(); }

using Poly = Polynomial<Rational>;

// Euclidean division over a field: a = q b + r, deg r < deg b.
template <class T> std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T> &a, const Polynomial<T> &b) {
  if (b.zero()) fail(ErrorKind::ZeroDenominator, "polynomial division by zero");
  std::vector<T> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {Polynomial<T>(), a};
  std::vector<T> q(static_cast<std::size_t>(a.degree() - db) + 1, T(0));
  T lb = b.lead();
  for (int i = a.degree(); i >= db; --i) {
    T f = r[static_cast<std::size_t>(i)] / lb;
    q[static_cast<std::size_t>(i - db)] = f;
    if (is_zero(f)) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] = r[static_cast<std::size_t>(i - db + j)] - f * b[j];
  }
  return {Polynomial<T>(std::move(q)), Polynomial<T>(std::move(r))};
}

template <class T> Polynomial<T> operator/(const Polynomial<T> &a, const Polynomial<T> &b) { return divmod(a, b).first; }
template <class T> Polynomial<T> operator%(const Polynomial<T> &a, const Polynomial<T> &b) { return divmod(a, b).second; }

// Division known to be exact; throws otherwise so silent truncation cannot happen.
template <class T> Polynomial<T> exact_div(const Polynomial<T> &a, const Polynomial<T> &b) {
  auto [q, r] = divmod(a, b);
  if (!r.zero()) fail(ErrorKind::InvalidArgument, "inexact polynomial division");
  return q;
}

// Monic gcd; gcd(0, 0) = 0.
template <class T> Polynomial<T> gcd(Polynomial<T> a, Polynomial<T> b) {
  while (!b.zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Yun's algorithm: p = c * prod f_i^i with f_i squarefree, pairwise coprime.
// Returns (i, f_i) for nonconstant f_i.
template <class T> std::vector<std::pair<int, Polynomial<T>>> squarefree_decomposition(const Polynomial<T> &p) {
  std::vector<std::pair<int, Polynomial<T>>> out;
  if (p.degree() <= 0) return out;
  Polynomial<T> a = p.monic();
  Polynomial<T> d = a.derivative();
  Polynomial<T> g = gcd(a, d);
  Polynomial<T> b = exact_div(a, g);
  Polynomial<T> c = exact_div(d, g);
  Polynomial<T> e = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Polynomial<T> f = gcd(b, e);
    if (f.degree() > 0) out.emplace_back(i, f);
    b = exact_div(b, f);
    c = exact_div(e, f);
    e = c - b.derivative();
    ++i;
  }
  return out;
}

template <class T> Polynomial<T> squarefree_part(const Polynomial<T> &p) {
  if (p.degree() <= 0) return Polynomial<T>(T(1));
  return exact_div(p.monic(), gcd(p, p.derivative()));
}

// Exact square root of a polynomial that is a perfect square over Q.
inline std::optional<Poly> poly_sqrt(const Poly &p) {
  if (p.zero()) return Poly();
  if (p.degree() % 2 != 0) return std::nullopt;
  auto lr = rational_sqrt(p.lead());
  if (!lr) return std::nullopt;
  int n = p.degree() / 2;
  // Leading-coefficient-first recurrence on r with r^2 = p.
  std::vector<Rational> r(static_cast<std::size_t>(n) + 1, Rational(0));
  r[static_cast<std::size_t>(n)] = *lr;
  for (int k = n - 1; k >= 0; --k) {
    Rational acc = p[n + k];
    for (int i = k + 1; i <= n; ++i) {
      int j = n + k - i;
      if (j > k && j <= n) acc -= r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(j)];
    }
    r[static_cast<std::size_t>(k)] = acc / (2 * r[static_cast<std::size_t>(n)]);
  }
  Poly root(r);
  if (root * root != p) return std::nullopt;
  return root;
}

// Lagrange interpolation through (x_i, y_i), distinct x_i.
inline Poly interpolate(const std::vector<Rational> &xs, const std::vector<Rational> &ys) {
  Poly out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly basis(Rational(1));
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * Poly{Rational(-xs[j]), Rational(1)};
      denom *= xs[i] - xs[j];
    }
    out += basis * Poly(Rational(ys[i] / denom));
  }
  return out;
}

// "3/2 s^2 - s + 1/4" style, highest degree first, variable name selectable.
inline std::string to_string(const Poly &p, const std::string &var = "s") {
  if (p.zero()) return "0";
  std::string s;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p[i];
    if (sgn(c) == 0) continue;
    bool neg = sgn(c) < 0;
    Rational a = abs(c);
    if (s.empty()) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    bool unit = a == 1 && i > 0;
    if (!unit) s += to_string(a);
    if (i > 0) {
      if (!unit) s += " ";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

} // namespace prsyn
