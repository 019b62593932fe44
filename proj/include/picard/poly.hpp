#ifndef PICARD_POLY_HPP
#define PICARD_POLY_HPP

#include "picard/rational.hpp"
#include <cassert>
#include <utility>
#include <vector>

namespace picard {

// Dense univariate polynomial over a field-like scalar K. K must provide
// K(), K(1), is_zero(), ==, +, -, *, and (where division is used) a free
// function inverse(K) reachable by ADL. deg(0) == -1.

template <class K> struct Poly {
  std::vector<K> c; // c[i] is the coefficient of x^i

  Poly() = default;
  explicit Poly(const K &a) {
    if (!a.is_zero()) c.push_back(a);
  }
  explicit Poly(std::vector<K> cc) : c(std::move(cc)) { normalize(); }

  static Poly x() { return monomial(K(1), 1); }
  static Poly monomial(const K &a, int e) {
    Poly p;
    if (a.is_zero()) return p;
    p.c.assign(e + 1, K());
    p.c[e] = a;
    return p;
  }

  void normalize() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  K coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c.size())) return K();
    return c[i];
  }
  const K &lc() const {
    assert(!c.empty());
    return c.back();
  }
  bool is_monic() const { return !c.empty() && c.back() == K(1); }

  friend bool operator==(const Poly &a, const Poly &b) { return a.c == b.c; }
  friend bool operator!=(const Poly &a, const Poly &b) { return !(a.c == b.c); }

  friend Poly operator+(const Poly &a, const Poly &b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), K());
    for (size_t i = 0; i < r.c.size(); i++) r.c[i] = a.coeff(i) + b.coeff(i);
    r.normalize();
    return r;
  }
  friend Poly operator-(const Poly &a, const Poly &b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), K());
    for (size_t i = 0; i < r.c.size(); i++) r.c[i] = a.coeff(i) - b.coeff(i);
    r.normalize();
    return r;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto &a : r.c) a = -a;
    return r;
  }
  friend Poly operator*(const Poly &a, const Poly &b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, K());
    for (size_t i = 0; i < a.c.size(); i++) {
      if (a.c[i].is_zero()) continue;
      for (size_t j = 0; j < b.c.size(); j++) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.normalize();
    return r;
  }
  friend Poly operator*(const K &s, const Poly &p) {
    Poly r;
    if (s.is_zero()) return r;
    r.c = p.c;
    for (auto &a : r.c) a = s * a;
    r.normalize();
    return r;
  }
  Poly &operator+=(const Poly &o) { return *this = *this + o; }
  Poly &operator-=(const Poly &o) { return *this = *this - o; }
  Poly &operator*=(const Poly &o) { return *this = *this * o; }

  Poly shifted(int e) const { // multiply by x^e
    if (is_zero()) return Poly();
    Poly r;
    r.c.assign(c.size() + e, K());
    for (size_t i = 0; i < c.size(); i++) r.c[i + e] = c[i];
    return r;
  }

  K eval(const K &x0) const {
    K r = K();
    for (int i = degree(); i >= 0; i--) r = r * x0 + c[i];
    return r;
  }

  Poly derivative() const {
    Poly r;
    if (degree() < 1) return r;
    r.c.resize(c.size() - 1);
    for (size_t i = 1; i < c.size(); i++) r.c[i - 1] = mul_by_int(c[i], static_cast<long>(i));
    r.normalize();
    return r;
  }

  // coefficients reversed: x^deg * p(1/x)
  Poly reversed() const {
    Poly r = *this;
    std::reverse(r.c.begin(), r.c.end());
    r.normalize();
    return r;
  }

private:
  // small-integer multiple without requiring K(long)
  static K mul_by_int(const K &a, long n) {
    long m = n < 0 ? -n : n;
    K acc = K();
    K base = a;
    while (m > 0) {
      if (m & 1) acc = acc + base;
      base = base + base;
      m >>= 1;
    }
    return n < 0 ? -acc : acc;
  }
};

template <class K> Poly<K> make_monic(const Poly<K> &p) {
  if (p.is_zero() || p.is_monic()) return p;
  return inverse(p.lc()) * p;
}

template <class K> std::pair<Poly<K>, Poly<K>> divrem(const Poly<K> &a, const Poly<K> &b) {
  assert(!b.is_zero());
  Poly<K> q, r = a;
  if (a.degree() < b.degree()) return {q, r};
  q.c.assign(a.degree() - b.degree() + 1, K());
  K binv = inverse(b.lc());
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int d = r.degree() - b.degree();
    K f = r.lc() * binv;
    q.c[d] = f;
    for (int i = 0; i <= b.degree(); i++) r.c[i + d] = r.c[i + d] - f * b.c[i];
    r.normalize();
  }
  q.normalize();
  return {q, r};
}

template <class K> Poly<K> operator/(const Poly<K> &a, const Poly<K> &b) { return divrem(a, b).first; }
template <class K> Poly<K> operator%(const Poly<K> &a, const Poly<K> &b) { return divrem(a, b).second; }

template <class K> bool divides_poly(const Poly<K> &b, const Poly<K> &a) {
  if (b.is_zero()) return a.is_zero();
  return divrem(a, b).second.is_zero();
}

// monic gcd
template <class K> Poly<K> gcd(const Poly<K> &a, const Poly<K> &b) {
  Poly<K> f = a, g = b;
  while (!g.is_zero()) {
    Poly<K> r = f % g;
    f = g;
    g = r;
  }
  return make_monic(f);
}

// g = gcd(a,b) monic, with u*a + v*b = g
template <class K>
Poly<K> extended_gcd(const Poly<K> &a, const Poly<K> &b, Poly<K> &u, Poly<K> &v) {
  Poly<K> r0 = a, r1 = b;
  Poly<K> s0(K(1)), s1, t0, t1(K(1));
  while (!r1.is_zero()) {
    auto [q, r2] = divrem(r0, r1);
    r0 = r1; r1 = r2;
    Poly<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = s1; s1 = s2;
    t0 = t1; t1 = t2;
  }
  if (r0.is_zero()) { u = Poly<K>(); v = Poly<K>(); return r0; }
  K f = inverse(r0.lc());
  u = f * s0;
  v = f * t0;
  return f * r0;
}

template <class K> Poly<K> pow_mod(const Poly<K> &base, const Int &e, const Poly<K> &m) {
  Poly<K> r(K(1)), b = base % m;
  mpz_class k = e.v;
  while (sgn(k) > 0) {
    if (mpz_odd_p(k.get_mpz_t())) r = (r * b) % m;
    b = (b * b) % m;
    k >>= 1;
  }
  return r;
}

template <class K> Poly<K> compose(const Poly<K> &p, const Poly<K> &q) {
  Poly<K> r;
  for (int i = p.degree(); i >= 0; i--) r = r * q + Poly<K>(p.c[i]);
  return r;
}

// resultant of two univariate polynomials by the subresultant PRS
template <class K> K resultant(const Poly<K> &a, const Poly<K> &b) {
  if (a.is_zero() || b.is_zero()) return K();
  Poly<K> f = a, g = b;
  K res(1);
  bool swap_sign = false;
  if (f.degree() < g.degree()) {
    std::swap(f, g);
    if ((a.degree() & 1) && (b.degree() & 1)) swap_sign = true;
  }
  while (g.degree() > 0) {
    Poly<K> r = f % g;
    if (r.is_zero()) return K(); // positive-degree common factor
    int df = f.degree(), dg = g.degree(), dr = r.degree();
    // res(f,g) = lc(g)^(df-dr) * (-1)^(df*dg) * res(g,r)
    K l = g.lc();
    K mult(1);
    for (int i = 0; i < df - dr; i++) mult = mult * l;
    res = res * mult;
    if ((df & 1) && (dg & 1)) res = -res;
    f = g;
    g = r;
  }
  // g constant
  K l = g.lc();
  K mult(1);
  for (int i = 0; i < f.degree(); i++) mult = mult * l;
  res = res * mult;
  if (swap_sign) res = -res;
  return res;
}

template <class K> std::ostream &operator<<(std::ostream &os, const Poly<K> &p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (int i = p.degree(); i >= 0; i--) {
    if (p.coeff(i).is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << p.coeff(i) << ")";
    if (i > 0) os << "*t^" << i;
    first = false;
  }
  return os;
}

} // namespace picard

#endif
