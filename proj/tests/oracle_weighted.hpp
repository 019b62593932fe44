#ifndef ORACLE_WEIGHTED_HPP
#define ORACLE_WEIGHTED_HPP

// Independent point-count oracle: enumerate the points of w^2 = f(x,y,z)
// inside P(1,1,1,3) over F_q directly. Every nonzero tuple (x,y,z,w) on the
// surface sits in a free scaling orbit of size q-1, so the count is
// #{(x,y,z,w) != 0 : w^2 = f} / (q-1). Pure brute force, q^3 work; only for
// small q.

#include "picard/finitefield.hpp"
#include "picard/multipoly.hpp"
#include "picard/rational.hpp"

#include <vector>

inline picard::Int weighted_brute_count(const picard::MultiPoly<picard::FqElem> &f,
                                        const picard::FqCtxPtr &C) {
  using namespace picard;
  struct T {
    uint32_t w;
    int a, b, c;
  };
  std::vector<T> terms;
  for (const auto &[e, coef] : f.terms) {
    uint32_t w = coef.C ? coef.v : C->from_int(Int(coef.k));
    if (w != 0) terms.push_back({w, e[0], e[1], e[2]});
  }
  std::vector<uint32_t> elems;
  elems.push_back(0);
  for (uint32_t k = 0; k + 1 < C->q; k++) elems.push_back(C->exp_tab[k]);

  long long tuples = 0;
  for (uint32_t x : elems)
    for (uint32_t y : elems)
      for (uint32_t z : elems) {
        uint32_t v = 0;
        for (const auto &t : terms) {
          uint32_t m = t.w;
          for (int i = 0; i < t.a; i++) m = C->mul_packed(m, x);
          for (int i = 0; i < t.b; i++) m = C->mul_packed(m, y);
          for (int i = 0; i < t.c; i++) m = C->mul_packed(m, z);
          v = C->add_packed(v, m);
        }
        tuples += 1 + C->chi(v); // number of w with w^2 = v
      }
  tuples -= 1; // the zero tuple (0,0,0,0) is not a projective point
  return Int(tuples / static_cast<long long>(C->q - 1));
}

#endif
