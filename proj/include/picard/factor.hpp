#pragma once
// Polynomial factorization: squarefree decomposition in characteristic 0,
// Cantor-Zassenhaus over F_q, Zassenhaus lifting over Q, and Trager's norm
// reduction for number fields (declared here, implemented in factor_zz.cpp
// and factor_nf.cpp).

#include <picard/finitefield.hpp>
#include <picard/numberfield.hpp>
#include <picard/poly.hpp>

#include <utility>
#include <vector>

namespace picard {

// Yun's algorithm; valid in characteristic 0 only.  Returns monic pairwise
// coprime squarefree g_i with f = lc(f) * prod g_i^{e_i}, e_i strictly
// increasing, constant g_i omitted.
template <class K>
std::vector<std::pair<Poly<K>, int>> squarefree_decomposition(const Poly<K> &f) {
  std::vector<std::pair<Poly<K>, int>> out;
  if (f.degree() <= 0) return out;
  Poly<K> fm = make_monic(f);
  Poly<K> fp = fm.derivative();
  Poly<K> g = gcd(fm, fp);
  Poly<K> a = fm / g;
  Poly<K> b = fp / g;
  Poly<K> c = b - a.derivative();
  int i = 1;
  while (a.degree() > 0) {
    Poly<K> d = gcd(a, c);
    if (d.degree() > 0) out.push_back({d, i});
    a = a / d;
    b = c / d;
    c = b - a.derivative();
    i++;
  }
  return out;
}

template <class K> bool is_squarefree(const Poly<K> &f) {
  if (f.degree() <= 0) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

// f = c * s^2 with s in K[t]: the exact criterion for f to become a square
// over the algebraic closure while staying expressible over K up to the
// constant c.  Zero input reports false.
template <class K> struct SquareWitness {
  bool is_square = false;
  Poly<K> s;
  K c{};
};

template <class K> SquareWitness<K> is_square_in_closure(const Poly<K> &f) {
  SquareWitness<K> w;
  if (f.is_zero()) return w;
  if (f.degree() == 0) {
    w.is_square = true;
    w.s = Poly<K>(K(1));
    w.c = f.lc();
    return w;
  }
  auto parts = squarefree_decomposition(f);
  Poly<K> s(K(1));
  for (auto &[g, e] : parts) {
    if (e % 2) return w; // odd multiplicity: not of the form c*s^2
    for (int i = 0; i < e / 2; i++) s = s * g;
  }
  w.is_square = true;
  w.s = s;
  w.c = f.lc();
  return w;
}

// ---- finite fields ----

// Monic irreducible factors with multiplicity, canonically ordered
// (degree, then coefficient order).  Deterministic: the internal
// Cantor-Zassenhaus randomness is driven by a fixed-seed generator.
std::vector<std::pair<Poly<FqElem>, int>> factor_mod_p(const Poly<FqElem> &f);

// ---- rationals ----

struct RatFactorization {
  Rat content;                                  // lc of the input
  std::vector<std::pair<Poly<Rat>, int>> factors; // monic irreducible
};

RatFactorization factor_over_q(const Poly<Rat> &f);

bool is_irreducible_q(const Poly<Rat> &f);

// Monic gcd over Q from modular images (CRT plus trial division), with the
// generic remainder sequence as a small-degree fallback.  The modular route
// avoids the coefficient swell of Euclid on the large eliminants that
// resultants produce.
Poly<Rat> gcd_rational(const Poly<Rat> &a, const Poly<Rat> &b);

// f / gcd(f, f'), monic: same roots, all simple.
Poly<Rat> squarefree_part_rational(const Poly<Rat> &f);

// ---- number fields ----

// gcd and squarefree part over a number field, routed through the modular
// rational code path whenever every coefficient happens to be rational
// (gcds are stable under field extension, so the dispatch is exact).
Poly<NFElem> gcd_univariate(const Poly<NFElem> &a, const Poly<NFElem> &b);
Poly<NFElem> squarefree_univariate(const Poly<NFElem> &f);

struct NFFactorization {
  NFElem content;
  std::vector<std::pair<Poly<NFElem>, int>> factors; // monic irreducible over the field
};

// Trager's method: factor f over `field` (defaults to the coefficient field
// detected from the entries; Q when all are rational).
NFFactorization factor_over_field(const Poly<NFElem> &f, FieldPtr field = nullptr);

// One root per irreducible factor of f, each living in a field extending
// the input field.  `alpha_image` maps the generator of the original field
// into `field` (rational constant when the original field was Q); `root` is
// a root of the corresponding factor inside `field`.
struct RootLocation {
  Poly<NFElem> factor;   // monic irreducible over the input field
  FieldPtr field;        // null for Q
  NFElem alpha_image;    // image of the input field's generator in `field`
  NFElem root;
};

// Throws FieldDegreeCapExceeded when a root would need a field of degree
// greater than `max_degree` over Q.
std::vector<RootLocation> factor_and_extend(const Poly<NFElem> &f, FieldPtr base,
                                            int max_degree = kDefaultMaxFieldDegree);

// Map an element of the old field through alpha |-> alpha_image.
NFElem embed_elem(const NFElem &x, FieldPtr target, const NFElem &alpha_image);

// All field automorphisms, as images of the generator.  The identity is
// always present (and first).
std::vector<NFElem> field_automorphisms(FieldPtr f);

bool is_galois(FieldPtr f);

struct GaloisClosure {
  FieldPtr field;            // null when the closure is Q itself
  NFElem alpha_image;        // embedding of the input field's generator
  std::vector<NFElem> embeddings; // all roots of the input minpoly in the closure
};

GaloisClosure galois_closure(FieldPtr f, int max_degree = kDefaultMaxFieldDegree);

} // namespace picard
