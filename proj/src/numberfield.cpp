#include "picard/numberfield.hpp"

namespace picard {

std::shared_ptr<const NumberField> NumberField::create(Poly<Rat> m, std::vector<std::string> trace) {
  if (m.degree() < 1) throw InputError("number field minimal polynomial must have degree >= 1");
  m = make_monic(m);
  auto F = std::make_shared<NumberField>();
  F->minpoly = m;
  F->tower_trace = std::move(trace);
  int d = m.degree();
  // x^(d+j) mod m for j = 0 .. d-2
  std::vector<Rat> cur(d, Rat(0)); // x^d mod m
  for (int i = 0; i < d; i++) cur[i] = -m.coeff(i);
  F->xpow_.push_back(cur);
  for (int j = 1; j <= d - 2; j++) {
    std::vector<Rat> nxt(d, Rat(0));
    // multiply cur by x, reduce
    Rat top = cur[d - 1];
    for (int i = d - 1; i >= 1; i--) nxt[i] = cur[i - 1];
    nxt[0] = Rat(0);
    if (!top.is_zero())
      for (int i = 0; i < d; i++) nxt[i] += top * F->xpow_[0][i];
    F->xpow_.push_back(nxt);
    cur = std::move(nxt);
  }
  return F;
}

NFElem operator*(const NFElem &x, const NFElem &y) {
  const FieldPtr &f = x.F ? x.F : y.F;
  if (!f) {
    Rat v = (x.c.empty() ? Rat(0) : x.c[0]) * (y.c.empty() ? Rat(0) : y.c[0]);
    NFElem r;
    if (!v.is_zero()) r.c.assign(1, v);
    return r;
  }
  NFElem a = x.promoted(f), b = y.promoted(f);
  int d = f->degree();
  std::vector<Rat> prod(2 * d - 1, Rat(0));
  for (int i = 0; i < d; i++) {
    if (a.c[i].is_zero()) continue;
    for (int j = 0; j < d; j++) {
      if (b.c[j].is_zero()) continue;
      prod[i + j] += a.c[i] * b.c[j];
    }
  }
  std::vector<Rat> red(d, Rat(0));
  for (int i = 0; i < d; i++) red[i] = prod[i];
  const auto &xp = f->xpow();
  for (int k = d; k <= 2 * d - 2; k++) {
    if (prod[k].is_zero()) continue;
    const auto &row = xp[k - d];
    for (int i = 0; i < d; i++) red[i] += prod[k] * row[i];
  }
  return NFElem(f, std::move(red));
}

NFElem NFElem::inverse_impl(const NFElem &x) {
  if (x.is_zero()) throw std::domain_error("NFElem: division by zero");
  if (!x.F) return NFElem(Rat(1) / x.c[0]);
  Poly<Rat> a = rep_poly(x);
  Poly<Rat> u, v;
  Poly<Rat> g = extended_gcd(a, x.F->minpoly, u, v);
  if (g.degree() != 0)
    throw InternalError("NFElem inverse: minimal polynomial not irreducible");
  Poly<Rat> inv = u % x.F->minpoly;
  std::vector<Rat> cc(x.F->degree(), Rat(0));
  for (int i = 0; i <= inv.degree(); i++) cc[i] = inv.coeff(i);
  return NFElem(x.F, std::move(cc));
}

std::ostream &operator<<(std::ostream &os, const NFElem &x) {
  if (x.is_zero()) return os << "0";
  if (x.is_rational()) return os << x.rat_value();
  bool first = true;
  for (int i = static_cast<int>(x.c.size()) - 1; i >= 0; i--) {
    if (x.c[i].is_zero()) continue;
    if (!first) os << " + ";
    os << x.c[i];
    if (i > 0) os << "*alpha^" << i;
    first = false;
  }
  return os;
}

} // namespace picard
