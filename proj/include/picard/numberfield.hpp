#ifndef PICARD_NUMBERFIELD_HPP
#define PICARD_NUMBERFIELD_HPP

#include "picard/errors.hpp"
#include "picard/poly.hpp"
#include <memory>
#include <string>
#include <vector>

namespace picard {

// Simple extension Q(alpha) with monic irreducible minimal polynomial.
// Towers are always flattened to a primitive element before a field object
// is handed out, so one generator suffices. The rational field itself is
// represented by a null field pointer on elements.

struct NumberField {
  Poly<Rat> minpoly; // monic, irreducible over Q
  std::vector<std::string> tower_trace;

  int degree() const { return minpoly.degree(); }

  static std::shared_ptr<const NumberField> create(Poly<Rat> m, std::vector<std::string> trace = {});

  // reduction cache for x^k, k = degree .. 2*degree-2
  const std::vector<std::vector<Rat>> &xpow() const { return xpow_; }

private:
  std::vector<std::vector<Rat>> xpow_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

struct NFElem {
  FieldPtr F;          // null: rational constant
  std::vector<Rat> c;  // null F: size<=1; else size == F->degree()

  NFElem() = default;
  NFElem(int x) { if (x != 0) c.assign(1, Rat(x)); }
  explicit NFElem(const Rat &x) { if (!x.is_zero()) c.assign(1, x); }
  NFElem(FieldPtr f, std::vector<Rat> cc) : F(std::move(f)), c(std::move(cc)) {
    assert(F && static_cast<int>(c.size()) == F->degree());
    strip();
  }

  static NFElem generator(const FieldPtr &f) {
    std::vector<Rat> cc(f->degree(), Rat(0));
    if (f->degree() == 1) {
      // alpha is rational: alpha = -m(0)
      return NFElem(f, std::vector<Rat>{-f->minpoly.coeff(0)});
    }
    cc[1] = Rat(1);
    return NFElem(f, std::move(cc));
  }
  static NFElem from_rat(const FieldPtr &f, const Rat &x) {
    if (!f) return NFElem(x);
    std::vector<Rat> cc(f->degree(), Rat(0));
    cc[0] = x;
    return NFElem(f, std::move(cc));
  }

  bool is_rational() const {
    if (!F) return true;
    for (size_t i = 1; i < c.size(); i++)
      if (!c[i].is_zero()) return false;
    return true;
  }
  Rat rat_value() const {
    assert(is_rational());
    return c.empty() ? Rat(0) : c[0];
  }
  bool is_zero() const {
    for (auto &a : c)
      if (!a.is_zero()) return false;
    return true;
  }
  Rat coeff(int i) const { return i < static_cast<int>(c.size()) ? c[i] : Rat(0); }

  // promote to field f (must match F if already attached)
  NFElem promoted(const FieldPtr &f) const {
    if (!f || F == f) return *this;
    if (F && F != f) throw InternalError("NFElem: mixing distinct fields");
    return from_rat(f, c.empty() ? Rat(0) : c[0]);
  }

  NFElem operator-() const {
    NFElem r = *this;
    for (auto &a : r.c) a = -a;
    return r;
  }

  friend NFElem operator+(const NFElem &x, const NFElem &y) { return binop(x, y, 0); }
  friend NFElem operator-(const NFElem &x, const NFElem &y) { return binop(x, y, 1); }
  friend NFElem operator*(const NFElem &x, const NFElem &y);
  friend NFElem operator/(const NFElem &x, const NFElem &y) { return x * inverse_impl(y); }

  NFElem &operator+=(const NFElem &o) { return *this = *this + o; }
  NFElem &operator-=(const NFElem &o) { return *this = *this - o; }
  NFElem &operator*=(const NFElem &o) { return *this = *this * o; }

  friend bool operator==(const NFElem &x, const NFElem &y) {
    const FieldPtr &f = x.F ? x.F : y.F;
    if (!f) return x.rat_as_is() == y.rat_as_is();
    NFElem a = x.promoted(f), b = y.promoted(f);
    return a.c == b.c;
  }
  friend bool operator!=(const NFElem &x, const NFElem &y) { return !(x == y); }

  // deterministic total order (used for canonical keys only)
  friend bool operator<(const NFElem &x, const NFElem &y) {
    const FieldPtr &f = x.F ? x.F : y.F;
    NFElem a = x.promoted(f), b = y.promoted(f);
    size_t n = std::max(a.c.size(), b.c.size());
    for (size_t i = 0; i < n; i++) {
      Rat ai = a.coeff(static_cast<int>(i)), bi = b.coeff(static_cast<int>(i));
      if (ai != bi) return ai < bi;
    }
    return false;
  }

  static NFElem inverse_impl(const NFElem &x);

private:
  Rat rat_as_is() const { return c.empty() ? Rat(0) : c[0]; }
  void strip() {}
  static NFElem binop(const NFElem &x, const NFElem &y, int op) {
    const FieldPtr &f = x.F ? x.F : y.F;
    NFElem a = x.promoted(f), b = y.promoted(f);
    size_t n = std::max(a.c.size(), b.c.size());
    NFElem r;
    r.F = f;
    r.c.resize(f ? f->degree() : n, Rat(0));
    if (r.c.size() < n) r.c.resize(n, Rat(0));
    for (size_t i = 0; i < r.c.size(); i++) {
      Rat ai = a.coeff(static_cast<int>(i)), bi = b.coeff(static_cast<int>(i));
      r.c[i] = op == 0 ? ai + bi : ai - bi;
    }
    if (!f) { // rational
      Rat v = r.c.empty() ? Rat(0) : r.c[0];
      r.c.clear();
      if (!v.is_zero()) r.c.assign(1, v);
    }
    return r;
  }
};

inline NFElem inverse(const NFElem &x) { return NFElem::inverse_impl(x); }

std::ostream &operator<<(std::ostream &os, const NFElem &x);

// evaluate a Q-coefficient polynomial at an element (generator images, embeddings)
inline NFElem eval_at(const Poly<Rat> &p, const NFElem &x) {
  NFElem r;
  for (int i = p.degree(); i >= 0; i--) r = r * x + NFElem(p.coeff(i));
  return r;
}

// view an element as the polynomial in the generator that represents it
inline Poly<Rat> rep_poly(const NFElem &x) {
  return Poly<Rat>(std::vector<Rat>(x.c));
}

// matrix type for automorphism matrices and coordinate changes over the field
using MatNF = Eigen::Matrix<NFElem, Eigen::Dynamic, Eigen::Dynamic>;
using VecNF = Eigen::Matrix<NFElem, Eigen::Dynamic, 1>;

} // namespace picard

namespace Eigen {
template <> struct NumTraits<picard::NFElem> : GenericNumTraits<picard::NFElem> {
  typedef picard::NFElem Real;
  typedef picard::NFElem NonInteger;
  typedef picard::NFElem Nested;
  typedef picard::NFElem Literal;
  static inline Real epsilon() { return picard::NFElem(0); }
  static inline Real dummy_precision() { return picard::NFElem(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 60,
    MulCost = 120
  };
};
} // namespace Eigen

#endif
