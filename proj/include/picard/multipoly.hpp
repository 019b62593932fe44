#ifndef PICARD_MULTIPOLY_HPP
#define PICARD_MULTIPOLY_HPP

#include "picard/poly.hpp"
#include <map>
#include <numeric>
#include <optional>
#include <string>

namespace picard {

using Expo = std::vector<int>;

inline int expo_total(const Expo &e) { return std::accumulate(e.begin(), e.end(), 0); }

// term orders; compare returns >0 if a comes before b (a is the larger monomial)
enum class OrderKind { Lex, DegRevLex, Block };

struct MonomialOrder {
  OrderKind kind = OrderKind::DegRevLex;
  int block_head = 0; // Block: first block_head variables are eliminated first

  static int cmp_lex(const Expo &a, const Expo &b, int lo, int hi) {
    for (int i = lo; i < hi; i++)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }
  static int cmp_degrevlex(const Expo &a, const Expo &b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; i++) { da += a[i]; db += b[i]; }
    if (da != db) return da > db ? 1 : -1;
    for (int i = hi - 1; i >= lo; i--)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }
  int compare(const Expo &a, const Expo &b) const {
    int n = static_cast<int>(a.size());
    switch (kind) {
    case OrderKind::Lex: return cmp_lex(a, b, 0, n);
    case OrderKind::DegRevLex: return cmp_degrevlex(a, b, 0, n);
    case OrderKind::Block: {
      int c = cmp_degrevlex(a, b, 0, block_head);
      if (c != 0) return c;
      return cmp_degrevlex(a, b, block_head, n);
    }
    }
    return 0;
  }
};

// Sparse multivariate polynomial. Terms live in a std::map keyed by exponent
// vector (plain lexicographic vector compare), which fixes a canonical storage
// order: equal polynomials compare equal memberwise. Zero coefficients are
// never stored. The optional grading carries weights for weighted-degree
// checks (the surface ring uses (1,1,1,3)).

template <class K> struct MultiPoly {
  std::vector<std::string> vars;
  std::map<Expo, K> terms;
  std::optional<std::vector<int>> grading;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vs) : vars(std::move(vs)) {}

  static MultiPoly constant(std::vector<std::string> vs, const K &a) {
    MultiPoly p(std::move(vs));
    if (!a.is_zero()) p.terms.emplace(Expo(p.vars.size(), 0), a);
    return p;
  }
  static MultiPoly variable(std::vector<std::string> vs, int i) {
    MultiPoly p(std::move(vs));
    Expo e(p.vars.size(), 0);
    e[i] = 1;
    p.terms.emplace(std::move(e), K(1));
    return p;
  }

  int nvars() const { return static_cast<int>(vars.size()); }
  bool is_zero() const { return terms.empty(); }
  bool is_constant() const {
    return terms.empty() || (terms.size() == 1 && expo_total(terms.begin()->first) == 0);
  }
  K constant_term() const {
    auto it = terms.find(Expo(vars.size(), 0));
    return it == terms.end() ? K() : it->second;
  }

  void add_term(const Expo &e, const K &a) {
    if (a.is_zero()) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
      terms.emplace(e, a);
    } else {
      it->second += a;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  int total_degree() const {
    int d = -1;
    for (auto &[e, a] : terms) d = std::max(d, expo_total(e));
    return d;
  }
  int degree_in(int var) const {
    int d = -1;
    for (auto &[e, a] : terms) d = std::max(d, e[var]);
    return d;
  }
  int weighted_degree(const Expo &e) const {
    const auto &w = *grading;
    int d = 0;
    for (size_t i = 0; i < e.size(); i++) d += w[i] * e[i];
    return d;
  }
  // homogeneous w.r.t. grading if present, else w.r.t. total degree
  bool is_homogeneous(int *deg_out = nullptr) const {
    int d = -1;
    for (auto &[e, a] : terms) {
      int de = grading ? weighted_degree(e) : expo_total(e);
      if (d < 0) d = de;
      else if (d != de) return false;
    }
    if (deg_out) *deg_out = d;
    return true;
  }

  friend bool operator==(const MultiPoly &a, const MultiPoly &b) {
    return a.vars == b.vars && a.terms == b.terms;
  }
  friend bool operator!=(const MultiPoly &a, const MultiPoly &b) { return !(a == b); }

  friend MultiPoly operator+(const MultiPoly &a, const MultiPoly &b) {
    assert(a.vars == b.vars || a.vars.empty() || b.vars.empty());
    MultiPoly r = a;
    if (r.vars.empty()) { r.vars = b.vars; r.grading = b.grading; }
    for (auto &[e, c] : b.terms) r.add_term(e, c);
    return r;
  }
  friend MultiPoly operator-(const MultiPoly &a, const MultiPoly &b) {
    MultiPoly r = a;
    if (r.vars.empty()) { r.vars = b.vars; r.grading = b.grading; }
    for (auto &[e, c] : b.terms) r.add_term(e, -c);
    return r;
  }
  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto &[e, c] : r.terms) c = -c;
    return r;
  }
  friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b) {
    assert(a.vars == b.vars);
    MultiPoly r(a.vars);
    r.grading = a.grading;
    for (auto &[ea, ca] : a.terms)
      for (auto &[eb, cb] : b.terms) {
        Expo e(ea);
        for (size_t i = 0; i < e.size(); i++) e[i] += eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend MultiPoly operator*(const K &s, const MultiPoly &p) {
    MultiPoly r(p.vars);
    r.grading = p.grading;
    if (s.is_zero()) return r;
    for (auto &[e, c] : p.terms) r.terms.emplace(e, s * c);
    return r;
  }
  MultiPoly &operator+=(const MultiPoly &o) { return *this = *this + o; }
  MultiPoly &operator-=(const MultiPoly &o) { return *this = *this - o; }
  MultiPoly &operator*=(const MultiPoly &o) { return *this = *this * o; }

  MultiPoly partial(int var) const {
    MultiPoly r(vars);
    for (auto &[e, c] : terms) {
      if (e[var] == 0) continue;
      Expo e2(e);
      int k = e2[var]--;
      K f = K();
      for (int i = 0; i < k; i++) f += c; // k*c without K(int) for large ints
      r.add_term(e2, f);
    }
    return r;
  }

  // substitute each variable by a polynomial in the ring of `sample`
  MultiPoly substitute(const std::vector<MultiPoly> &images) const {
    assert(images.size() == vars.size());
    MultiPoly r = images.empty() ? MultiPoly() : MultiPoly(images[0].vars);
    std::vector<std::vector<MultiPoly>> pw(vars.size()); // pw[i][k] = images[i]^k
    auto power = [&](size_t i, int k) -> const MultiPoly & {
      auto &cache = pw[i];
      if (cache.empty()) cache.push_back(MultiPoly::constant(images[i].vars, K(1)));
      while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
      return cache[k];
    };
    for (auto &[e, c] : terms) {
      MultiPoly t = MultiPoly::constant(images[0].vars, c);
      for (size_t i = 0; i < e.size(); i++)
        if (e[i] > 0) t = t * power(i, e[i]);
      r += t;
    }
    return r;
  }

  // substitute each variable by a univariate polynomial in t
  Poly<K> substitute_univariate(const std::vector<Poly<K>> &images) const {
    assert(images.size() == vars.size());
    Poly<K> r;
    std::vector<std::vector<Poly<K>>> pw(vars.size());
    auto power = [&](size_t i, int k) -> const Poly<K> & {
      auto &cache = pw[i];
      if (cache.empty()) cache.push_back(Poly<K>(K(1)));
      while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
      return cache[k];
    };
    for (auto &[e, c] : terms) {
      Poly<K> t(c);
      for (size_t i = 0; i < e.size(); i++)
        if (e[i] > 0) t = t * power(i, e[i]);
      r += t;
    }
    return r;
  }

  // substitute a scalar for one variable
  MultiPoly substitute_scalar(int var, const K &val) const {
    MultiPoly r(vars);
    r.grading = grading;
    std::vector<K> pw = {K(1)};
    for (auto &[e, c] : terms) {
      while (static_cast<int>(pw.size()) <= e[var]) pw.push_back(pw.back() * val);
      Expo e2(e);
      e2[var] = 0;
      r.add_term(e2, c * pw[e[var]]);
    }
    return r;
  }

  // view as univariate in `var`: coefficient polynomials indexed by power
  std::vector<MultiPoly> coeffs_in(int var) const {
    int d = degree_in(var);
    std::vector<MultiPoly> out(std::max(d + 1, 0), MultiPoly(vars));
    for (auto &[e, c] : terms) {
      Expo e2(e);
      int k = e2[var];
      e2[var] = 0;
      out[k].add_term(e2, c);
    }
    return out;
  }

  // apply a map to every coefficient (field embeddings, reductions)
  template <class F, class K2 = std::invoke_result_t<F, K>>
  MultiPoly<K2> map_coeffs(F f) const {
    MultiPoly<K2> r(vars);
    r.grading = grading;
    for (auto &[e, c] : terms) r.add_term(e, f(c));
    return r;
  }

  // leading term under an order
  std::pair<Expo, K> leading_term(const MonomialOrder &ord) const {
    assert(!terms.empty());
    auto best = terms.begin();
    for (auto it = std::next(terms.begin()); it != terms.end(); ++it)
      if (ord.compare(it->first, best->first) > 0) best = it;
    return {best->first, best->second};
  }
};

// exact division by a single polynomial; nullopt when b does not divide a.
// A single divisor is a Groebner basis of the ideal it generates, so the
// division algorithm's zero remainder is equivalent to divisibility.
template <class K>
std::optional<MultiPoly<K>> try_divide(const MultiPoly<K> &a, const MultiPoly<K> &b) {
  if (b.is_zero()) return a.is_zero() ? std::optional<MultiPoly<K>>(a) : std::nullopt;
  MonomialOrder ord{OrderKind::DegRevLex, 0};
  auto [lte, ltc] = b.leading_term(ord);
  K ltc_inv = inverse(ltc);
  MultiPoly<K> q(a.vars), r = a;
  q.grading = a.grading;
  while (!r.is_zero()) {
    auto [re, rc] = r.leading_term(ord);
    Expo d(re.size());
    bool ok = true;
    for (size_t i = 0; i < re.size(); i++) {
      d[i] = re[i] - lte[i];
      if (d[i] < 0) { ok = false; break; }
    }
    if (!ok) return std::nullopt;
    K f = rc * ltc_inv;
    q.add_term(d, f);
    MultiPoly<K> t(a.vars);
    t.add_term(d, f);
    r -= t * b;
  }
  return q;
}

template <class K> MultiPoly<K> from_univariate(const Poly<K> &p, std::vector<std::string> vars, int var) {
  MultiPoly<K> r(std::move(vars));
  for (int i = 0; i <= p.degree(); i++) {
    Expo e(r.vars.size(), 0);
    e[var] = i;
    r.add_term(e, p.coeff(i));
  }
  return r;
}

} // namespace picard

#endif
