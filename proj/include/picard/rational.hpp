#ifndef PICARD_RATIONAL_HPP
#define PICARD_RATIONAL_HPP

#include <gmpxx.h>
#include <Eigen/Core>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace picard {

// Thin eager wrappers over GMP. gmpxx expression templates interact badly with
// generic code (Eigen, our templated polynomial layer), so every operator here
// returns a materialized value.

struct Int {
  mpz_class v;

  Int() : v(0) {}
  Int(int x) : v(x) {}
  Int(long x) : v(x) {}
  Int(long long x) : v(static_cast<long>(x)) {}
  Int(const mpz_class &x) : v(x) {}
  explicit Int(const std::string &s) : v(s) {}

  bool is_zero() const { return sgn(v) == 0; }
  int sign() const { return sgn(v); }
  bool fits_long() const { return v.fits_slong_p(); }
  long to_long() const { return v.get_si(); }
  double to_double() const { return v.get_d(); }
  std::string str() const { return v.get_str(); }

  Int operator-() const { return Int(mpz_class(-v)); }
  Int &operator+=(const Int &o) { v += o.v; return *this; }
  Int &operator-=(const Int &o) { v -= o.v; return *this; }
  Int &operator*=(const Int &o) { v *= o.v; return *this; }

  friend Int operator+(const Int &a, const Int &b) { return Int(mpz_class(a.v + b.v)); }
  friend Int operator-(const Int &a, const Int &b) { return Int(mpz_class(a.v - b.v)); }
  friend Int operator*(const Int &a, const Int &b) { return Int(mpz_class(a.v * b.v)); }
  friend Int operator/(const Int &a, const Int &b) { return Int(mpz_class(a.v / b.v)); }
  friend Int operator%(const Int &a, const Int &b) { return Int(mpz_class(a.v % b.v)); }
  friend bool operator==(const Int &a, const Int &b) { return a.v == b.v; }
  friend bool operator!=(const Int &a, const Int &b) { return a.v != b.v; }
  friend bool operator<(const Int &a, const Int &b) { return a.v < b.v; }
  friend bool operator<=(const Int &a, const Int &b) { return a.v <= b.v; }
  friend bool operator>(const Int &a, const Int &b) { return a.v > b.v; }
  friend bool operator>=(const Int &a, const Int &b) { return a.v >= b.v; }
  friend std::ostream &operator<<(std::ostream &os, const Int &a) { return os << a.v; }
};

inline Int abs(const Int &a) { return Int(mpz_class(abs(a.v))); }
inline Int gcd(const Int &a, const Int &b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.v.get_mpz_t(), b.v.get_mpz_t());
  return Int(r);
}
inline Int lcm(const Int &a, const Int &b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.v.get_mpz_t(), b.v.get_mpz_t());
  return Int(r);
}
inline Int divexact(const Int &a, const Int &b) {
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), a.v.get_mpz_t(), b.v.get_mpz_t());
  return Int(r);
}
inline bool divides(const Int &d, const Int &a) {
  return mpz_divisible_p(a.v.get_mpz_t(), d.v.get_mpz_t()) != 0;
}
inline Int pow(const Int &a, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), a.v.get_mpz_t(), e);
  return Int(r);
}
inline Int mod_floor(const Int &a, const Int &m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.v.get_mpz_t(), m.v.get_mpz_t());
  return Int(r);
}
// representative in (-m/2, m/2]
inline Int mod_symmetric(const Int &a, const Int &m) {
  Int r = mod_floor(a, m);
  if (Int(2) * r > m) r -= m;
  return r;
}
inline bool is_square(const Int &a) {
  return sgn(a.v) >= 0 && mpz_perfect_square_p(a.v.get_mpz_t()) != 0;
}
inline Int isqrt(const Int &a) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), a.v.get_mpz_t());
  return Int(r);
}
inline Int binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Int(r);
}

struct Rat {
  mpq_class v;

  Rat() : v(0) {}
  Rat(int x) : v(x) {}
  Rat(long x) : v(x) {}
  Rat(const Int &x) : v(x.v) {}
  Rat(const Int &n, const Int &d) : v(n.v, d.v) { v.canonicalize(); }
  Rat(const mpq_class &x) : v(x) {}
  explicit Rat(const std::string &s) : v(s) { v.canonicalize(); }

  bool is_zero() const { return sgn(v) == 0; }
  int sign() const { return sgn(v); }
  Int num() const { return Int(v.get_num()); }
  Int den() const { return Int(v.get_den()); }
  bool is_integer() const { return v.get_den() == 1; }
  double to_double() const { return v.get_d(); }
  std::string str() const { return v.get_str(); }

  Rat operator-() const { return Rat(mpq_class(-v)); }
  Rat &operator+=(const Rat &o) { v += o.v; return *this; }
  Rat &operator-=(const Rat &o) { v -= o.v; return *this; }
  Rat &operator*=(const Rat &o) { v *= o.v; return *this; }
  Rat &operator/=(const Rat &o) { v /= o.v; return *this; }

  friend Rat operator+(const Rat &a, const Rat &b) { return Rat(mpq_class(a.v + b.v)); }
  friend Rat operator-(const Rat &a, const Rat &b) { return Rat(mpq_class(a.v - b.v)); }
  friend Rat operator*(const Rat &a, const Rat &b) { return Rat(mpq_class(a.v * b.v)); }
  friend Rat operator/(const Rat &a, const Rat &b) {
    if (sgn(b.v) == 0) throw std::domain_error("Rat: division by zero");
    return Rat(mpq_class(a.v / b.v));
  }
  friend bool operator==(const Rat &a, const Rat &b) { return a.v == b.v; }
  friend bool operator!=(const Rat &a, const Rat &b) { return a.v != b.v; }
  friend bool operator<(const Rat &a, const Rat &b) { return a.v < b.v; }
  friend bool operator<=(const Rat &a, const Rat &b) { return a.v <= b.v; }
  friend bool operator>(const Rat &a, const Rat &b) { return a.v > b.v; }
  friend bool operator>=(const Rat &a, const Rat &b) { return a.v >= b.v; }
  friend std::ostream &operator<<(std::ostream &os, const Rat &a) { return os << a.v; }
};

inline Rat abs(const Rat &a) { return Rat(mpq_class(abs(a.v))); }
inline Rat inverse(const Rat &a) { return Rat(1) / a; }
inline Rat pow(const Rat &a, long e) {
  if (e < 0) return inverse(pow(a, -e));
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), a.v.get_num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), a.v.get_den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rat(Int(n), Int(d));
}

// prime factorization of |n| by trial division then Pollard rho; desk-scale inputs
std::vector<std::pair<Int, int>> factor_integer(const Int &n);
// squarefree integer representative of the class of q in Q*/(Q*)^2
Int square_class(const Rat &q);
// multiplicity of prime p in n (n != 0)
int valuation(const Int &n, const Int &p);

using MatInt = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using MatRat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VecInt = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using VecRat = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

} // namespace picard

namespace Eigen {
template <> struct NumTraits<picard::Int> : GenericNumTraits<picard::Int> {
  typedef picard::Int Real;
  typedef picard::Int NonInteger;
  typedef picard::Int Nested;
  typedef picard::Int Literal;
  static inline Real epsilon() { return picard::Int(0); }
  static inline Real dummy_precision() { return picard::Int(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};
template <> struct NumTraits<picard::Rat> : GenericNumTraits<picard::Rat> {
  typedef picard::Rat Real;
  typedef picard::Rat NonInteger;
  typedef picard::Rat Nested;
  typedef picard::Rat Literal;
  static inline Real epsilon() { return picard::Rat(0); }
  static inline Real dummy_precision() { return picard::Rat(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 100
  };
};
} // namespace Eigen

#endif
