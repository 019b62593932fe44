#pragma once
// Resultants of multivariate polynomials with respect to one variable.
//
// Primary path: subresultant PRS with explicit tracking of the correction
// factors, so the returned value is the honest Sylvester resultant (sign
// included), not merely something with the right zero set.  Fallback and
// test oracle: fraction-free Bareiss elimination on the Sylvester matrix.

#include <picard/multipoly.hpp>

#include <vector>

namespace picard {

// a as a coefficient vector in `var`: c[i] = coefficient of var^i, an
// element of the remaining-variable ring (exponent of `var` zeroed out).
template <class K>
std::vector<MultiPoly<K>> coeff_vector(const MultiPoly<K> &a, int var) {
  std::vector<MultiPoly<K>> c;
  int d = a.degree_in(var);
  if (d < 0) return c;
  c.assign(d + 1, MultiPoly<K>(a.vars));
  for (auto &[e, k] : a.terms) {
    Expo r = e;
    int i = r[var];
    r[var] = 0;
    c[i].add_term(r, k);
  }
  return c;
}

template <class K>
MultiPoly<K> from_coeff_vector(const std::vector<MultiPoly<K>> &c,
                               const std::vector<std::string> &vars, int var) {
  MultiPoly<K> r(vars);
  for (size_t i = 0; i < c.size(); i++) {
    for (auto &[e, k] : c[i].terms) {
      Expo x = e;
      x[var] += static_cast<int>(i);
      r.add_term(x, k);
    }
  }
  return r;
}

// collapse a multivariate polynomial that only involves `var`
template <class K> Poly<K> to_univariate(const MultiPoly<K> &m, int var) {
  std::vector<K> c;
  for (auto &[e, k] : m.terms) {
    for (size_t i = 0; i < e.size(); i++)
      if (static_cast<int>(i) != var && e[i] != 0)
        throw InternalError("to_univariate: residual variable " + m.vars[i]);
    if (static_cast<int>(c.size()) <= e[var]) c.resize(e[var] + 1, K());
    c[e[var]] = k;
  }
  return Poly<K>(c);
}

namespace detail {

template <class K> void cv_trim(std::vector<MultiPoly<K>> &c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// lc(b)^(deg a - deg b + 1) * a  mod  b, fraction-free.  The full power of
// lc(b) is always applied, also when the degree drops by more than one.
template <class K>
std::vector<MultiPoly<K>> cv_prem(std::vector<MultiPoly<K>> a,
                                  const std::vector<MultiPoly<K>> &b) {
  int db = static_cast<int>(b.size()) - 1;
  const MultiPoly<K> &lb = b.back();
  int want = static_cast<int>(a.size()) - static_cast<int>(b.size()) + 1;
  int done = 0;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    int da = static_cast<int>(a.size()) - 1;
    MultiPoly<K> la = a.back();
    for (auto &x : a) x = x * lb;
    for (int i = 0; i <= db; i++) a[da - db + i] -= la * b[i];
    cv_trim(a);
    done++;
  }
  for (int t = done; t < want; t++)
    for (auto &x : a) x = x * lb;
  return a;
}

} // namespace detail

// Sylvester-matrix resultant via fraction-free Bareiss elimination.
// Exact divisions are guaranteed by Bareiss' identity over a domain.
template <class K>
MultiPoly<K> resultant_sylvester(const MultiPoly<K> &a, const MultiPoly<K> &b, int var) {
  auto ca = coeff_vector(a, var), cb = coeff_vector(b, var);
  int m = static_cast<int>(ca.size()) - 1, n = static_cast<int>(cb.size()) - 1;
  MultiPoly<K> one = MultiPoly<K>::constant(a.vars, K(1));
  if (m < 0 || n < 0) return MultiPoly<K>(a.vars); // res with 0 is 0
  if (m == 0 && n == 0) return one;
  std::vector<std::vector<MultiPoly<K>>> s(
      m + n, std::vector<MultiPoly<K>>(m + n, MultiPoly<K>(a.vars)));
  for (int i = 0; i < n; i++)
    for (int j = 0; j <= m; j++) s[i][i + j] = ca[m - j];
  for (int i = 0; i < m; i++)
    for (int j = 0; j <= n; j++) s[n + i][i + j] = cb[n - j];
  int sz = m + n;
  int sign = 1;
  MultiPoly<K> prev = one;
  for (int k = 0; k < sz - 1; k++) {
    if (s[k][k].is_zero()) {
      int piv = -1;
      for (int i = k + 1; i < sz; i++)
        if (!s[i][k].is_zero()) { piv = i; break; }
      if (piv < 0) return MultiPoly<K>(a.vars);
      std::swap(s[k], s[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < sz; i++) {
      for (int j = k + 1; j < sz; j++) {
        MultiPoly<K> num = s[i][j] * s[k][k] - s[i][k] * s[k][j];
        auto q = try_divide(num, prev);
        if (!q) throw InternalError("bareiss: non-exact division");
        s[i][j] = *q;
      }
      s[i][k] = MultiPoly<K>(a.vars);
    }
    prev = s[k][k];
  }
  MultiPoly<K> det = s[sz - 1][sz - 1];
  if (sign < 0) det = MultiPoly<K>::constant(a.vars, K(-1)) * det;
  return det;
}

// Resultant via subresultant PRS.  Each pseudo-remainder step relates the
// resultant of the old pair to that of the new pair by known powers of
// leading coefficients; those powers are accumulated into numerator and
// denominator products and cancelled by one exact division at the end.
// Intermediate remainders are divided by Collins' g*h^delta factor, which
// subresultant theory guarantees to be an exact division; if bookkeeping is
// ever violated we fall back to the Sylvester path rather than guess.
template <class K>
MultiPoly<K> resultant_eliminate(const MultiPoly<K> &a, const MultiPoly<K> &b, int var) {
  using MP = MultiPoly<K>;
  auto vars = a.vars;
  MP one = MP::constant(vars, K(1));
  auto ca = coeff_vector(a, var), cb = coeff_vector(b, var);
  if (ca.empty() || cb.empty()) return MP(vars);
  int da = static_cast<int>(ca.size()) - 1, db = static_cast<int>(cb.size()) - 1;
  int sign = 1;
  if (da < db) {
    std::swap(ca, cb);
    std::swap(da, db);
    if (da % 2 && db % 2) sign = -sign;
  }
  MP num = one, den = one;
  MP g = one, h = one;
  while (true) {
    int n1 = static_cast<int>(ca.size()) - 1, n2 = static_cast<int>(cb.size()) - 1;
    if (n2 == 0) {
      // res(F1, c) = c^n1
      MP r = one;
      for (int i = 0; i < n1; i++) r = r * cb[0];
      MP total = num * r;
      auto q = try_divide(total, den);
      if (!q) return resultant_sylvester(a, b, var);
      return sign < 0 ? MP::constant(vars, K(-1)) * (*q) : *q;
    }
    int delta = n1 - n2;
    MP lc2 = cb.back();
    auto rem = detail::cv_prem(ca, cb);
    if (rem.empty()) return MP(vars); // positive-degree common factor
    int n3 = static_cast<int>(rem.size()) - 1;
    // From lc2^(delta+1)*F1 = Q*F2 + R with deg R = n3:
    //   res(F1,F2) = (-1)^(n1*n2) * lc2^((n1-n3)-(delta+1)*n2) * res(F2,R)
    if (n1 % 2 && n2 % 2) sign = -sign;
    int e = (n1 - n3) - (delta + 1) * n2;
    for (int i = 0; i < e; i++) num = num * lc2;
    for (int i = 0; i < -e; i++) den = den * lc2;
    // R = beta * F3 with beta = g*h^delta; res(F2, R) = beta^n2 * res(F2, F3)
    MP beta = g;
    for (int i = 0; i < delta; i++) beta = beta * h;
    std::vector<MP> next;
    next.reserve(rem.size());
    for (auto &x : rem) {
      auto q = try_divide(x, beta);
      if (!q) return resultant_sylvester(a, b, var);
      next.push_back(*q);
    }
    for (int i = 0; i < n2; i++) num = num * beta;
    // h' = h^(1-delta) * lc2^delta
    {
      MP t = one;
      for (int i = 0; i < delta; i++) t = t * lc2;
      if (delta == 0) {
        t = t * h;
      } else {
        MP pd = one;
        for (int i = 0; i < delta - 1; i++) pd = pd * h;
        auto q = try_divide(t, pd);
        if (!q) return resultant_sylvester(a, b, var);
        t = *q;
      }
      h = t;
    }
    g = lc2;
    ca = std::move(cb);
    cb = std::move(next);
  }
}

} // namespace picard
