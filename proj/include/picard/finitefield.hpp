#ifndef PICARD_FINITEFIELD_HPP
#define PICARD_FINITEFIELD_HPP

#include "picard/errors.hpp"
#include "picard/rational.hpp"
#include <cstdint>
#include <memory>
#include <vector>

namespace picard {

// F_{p^n} with full exponent/log/Zech tables, so that the point-count kernel
// can run entirely in logarithm representation. Elements are packed base-p
// digit vectors (coefficient of x^i is digit i); table size caps q at 2^24
// and characteristic 2 is rejected outright.

struct FqCtx {
  long p = 0;
  int n = 0;
  uint32_t q = 0;
  std::vector<uint32_t> defining;  // coeffs c_0..c_{n-1} of the monic defining poly
  std::vector<uint32_t> exp_tab;   // size 2(q-1); exp_tab[k] = packed g^k
  std::vector<int32_t> log_tab;    // size q; log of packed value, -1 for 0
  std::vector<int32_t> zech;       // size q-1; log(1+g^d), kNegOne if 1+g^d=0
  uint32_t half = 0;               // log(-1) = (q-1)/2

  static constexpr int32_t kNegOne = -1;

  static std::shared_ptr<const FqCtx> create(long p, int n);

  uint32_t add_packed(uint32_t a, uint32_t b) const;
  uint32_t neg_packed(uint32_t a) const;
  uint32_t mul_packed(uint32_t a, uint32_t b) const;
  uint32_t inv_packed(uint32_t a) const;
  uint32_t pow_packed(uint32_t a, const Int &e) const;
  // quadratic character: 0 -> 0, squares -> +1, nonsquares -> -1
  int chi(uint32_t a) const {
    if (a == 0) return 0;
    return (log_tab[a] & 1) ? -1 : 1;
  }
  uint32_t from_int(const Int &a) const;
  uint32_t from_rat(const Rat &a) const; // denominator must be invertible mod p
  // packed value of the base-field scalar c in [0,p)
  uint32_t scalar(long c) const { return static_cast<uint32_t>(((c % p) + p) % p); }
  uint32_t frobenius(uint32_t a) const; // a^p
};

using FqCtxPtr = std::shared_ptr<const FqCtx>;

struct FqElem {
  FqCtxPtr C;      // null: plain integer constant not yet reduced
  uint32_t v = 0;  // packed value when C set
  long k = 0;      // constant when C null

  FqElem() = default;
  FqElem(int x) : k(x) {}
  FqElem(long x) : k(x) {}
  FqElem(FqCtxPtr c, uint32_t val) : C(std::move(c)), v(val) {}

  FqElem promoted(const FqCtxPtr &c) const {
    if (!c || C == c) return *this;
    if (C) throw InternalError("FqElem: mixing distinct finite fields");
    return FqElem(c, c->from_int(Int(k)));
  }
  bool is_zero() const { return C ? v == 0 : k == 0; }

  FqElem operator-() const {
    if (!C) return FqElem(-k);
    return FqElem(C, C->neg_packed(v));
  }
  friend FqElem operator+(const FqElem &a, const FqElem &b) {
    const FqCtxPtr &c = a.C ? a.C : b.C;
    if (!c) return FqElem(a.k + b.k);
    FqElem x = a.promoted(c), y = b.promoted(c);
    return FqElem(c, c->add_packed(x.v, y.v));
  }
  friend FqElem operator-(const FqElem &a, const FqElem &b) { return a + (-b); }
  friend FqElem operator*(const FqElem &a, const FqElem &b) {
    const FqCtxPtr &c = a.C ? a.C : b.C;
    if (!c) return FqElem(a.k * b.k);
    FqElem x = a.promoted(c), y = b.promoted(c);
    return FqElem(c, c->mul_packed(x.v, y.v));
  }
  friend FqElem operator/(const FqElem &a, const FqElem &b) {
    const FqCtxPtr &c = a.C ? a.C : b.C;
    if (!c) throw InternalError("FqElem: constant division without field");
    FqElem x = a.promoted(c), y = b.promoted(c);
    return FqElem(c, c->mul_packed(x.v, c->inv_packed(y.v)));
  }
  FqElem &operator+=(const FqElem &o) { return *this = *this + o; }
  FqElem &operator-=(const FqElem &o) { return *this = *this - o; }
  FqElem &operator*=(const FqElem &o) { return *this = *this * o; }
  friend bool operator==(const FqElem &a, const FqElem &b) {
    const FqCtxPtr &c = a.C ? a.C : b.C;
    if (!c) return a.k == b.k;
    return a.promoted(c).v == b.promoted(c).v;
  }
  friend bool operator!=(const FqElem &a, const FqElem &b) { return !(a == b); }
  friend bool operator<(const FqElem &a, const FqElem &b) {
    const FqCtxPtr &c = a.C ? a.C : b.C;
    if (!c) return a.k < b.k;
    return a.promoted(c).v < b.promoted(c).v;
  }
};

inline std::ostream &operator<<(std::ostream &os, const FqElem &a) {
  if (a.C) return os << "#" << a.v;
  return os << a.k;
}

inline FqElem inverse(const FqElem &a) {
  if (!a.C) throw InternalError("FqElem: inverse without field context");
  return FqElem(a.C, a.C->inv_packed(a.v));
}

} // namespace picard

#endif
