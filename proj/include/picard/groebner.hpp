#pragma once
// Buchberger's algorithm with a reduction-step budget.  A partial basis is
// returned with completed=false when the budget runs out; callers must treat
// a partial basis as inconclusive (in particular, it proves nothing about
// ideal membership or emptiness).

#include <picard/multipoly.hpp>

#include <chrono>
#include <optional>
#include <vector>

namespace picard {

template <class K> struct GroebnerResult {
  std::vector<MultiPoly<K>> basis; // monic, reduced when completed
  bool completed = false;
  long steps_used = 0;
};

namespace detail {

inline bool expo_divides(const Expo &a, const Expo &b) { // a | b
  for (size_t i = 0; i < a.size(); i++)
    if (a[i] > b[i]) return false;
  return true;
}

inline Expo expo_lcm(const Expo &a, const Expo &b) {
  Expo r(a.size());
  for (size_t i = 0; i < a.size(); i++) r[i] = std::max(a[i], b[i]);
  return r;
}

inline bool expo_coprime(const Expo &a, const Expo &b) {
  for (size_t i = 0; i < a.size(); i++)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

} // namespace detail

// Full normal form of f modulo basis.  Every reduction counts against
// *budget; when it reaches zero (or the deadline passes) the current partial
// remainder is returned and exhausted is set.
template <class K>
MultiPoly<K> normal_form(MultiPoly<K> f, const std::vector<MultiPoly<K>> &basis,
                         const MonomialOrder &ord, long *budget, bool *exhausted,
                         std::optional<std::chrono::steady_clock::time_point> deadline =
                             std::nullopt) {
  MultiPoly<K> r(f.vars);
  r.grading = f.grading;
  while (!f.is_zero()) {
    auto [le, lc] = f.leading_term(ord);
    bool reduced = false;
    for (const auto &g : basis) {
      if (g.is_zero()) continue;
      auto [ge, gc] = g.leading_term(ord);
      if (!detail::expo_divides(ge, le)) continue;
      if ((budget && *budget <= 0) ||
          (deadline && std::chrono::steady_clock::now() > *deadline)) {
        if (exhausted) *exhausted = true;
        for (auto &[e, c] : f.terms) r.add_term(e, c);
        return r;
      }
      if (budget) (*budget)--;
      Expo d(le.size());
      for (size_t i = 0; i < le.size(); i++) d[i] = le[i] - ge[i];
      MultiPoly<K> t(f.vars);
      t.add_term(d, lc * inverse(gc));
      f -= t * g;
      reduced = true;
      break;
    }
    if (!reduced) {
      // move the irreducible leading term to the remainder
      r.add_term(le, lc);
      MultiPoly<K> t(f.vars);
      t.add_term(le, lc);
      f -= t;
    }
  }
  return r;
}

template <class K>
GroebnerResult<K> groebner_basis(std::vector<MultiPoly<K>> gens, MonomialOrder ord,
                                 long budget = 200000,
                                 std::optional<std::chrono::steady_clock::time_point> deadline =
                                     std::nullopt) {
  GroebnerResult<K> out;
  long initial = budget;
  std::vector<MultiPoly<K>> G;
  for (auto &g : gens) {
    if (g.is_zero()) continue;
    auto [e, c] = g.leading_term(ord);
    G.push_back(inverse(c) * g);
  }
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < G.size(); i++)
    for (size_t j = i + 1; j < G.size(); j++) pairs.push_back({i, j});
  bool exhausted = false;
  while (!pairs.empty() && !exhausted) {
    if (deadline && std::chrono::steady_clock::now() > *deadline) {
      exhausted = true;
      break;
    }
    auto [i, j] = pairs.back();
    pairs.pop_back();
    auto [ei, ci] = G[i].leading_term(ord);
    auto [ej, cj] = G[j].leading_term(ord);
    if (detail::expo_coprime(ei, ej)) continue; // Buchberger's first criterion
    Expo l = detail::expo_lcm(ei, ej);
    MultiPoly<K> ti(G[i].vars), tj(G[j].vars);
    Expo di(l.size()), dj(l.size());
    for (size_t k = 0; k < l.size(); k++) {
      di[k] = l[k] - ei[k];
      dj[k] = l[k] - ej[k];
    }
    ti.add_term(di, K(1));
    tj.add_term(dj, K(1));
    MultiPoly<K> s = ti * G[i] - tj * G[j];
    MultiPoly<K> r = normal_form(s, G, ord, &budget, &exhausted, deadline);
    if (exhausted) break;
    if (!r.is_zero()) {
      auto [re, rc] = r.leading_term(ord);
      r = inverse(rc) * r;
      for (size_t k = 0; k < G.size(); k++) pairs.push_back({k, G.size()});
      G.push_back(r);
    }
  }
  out.completed = !exhausted;
  out.steps_used = initial - budget;
  if (out.completed) {
    // interreduce to the unique reduced basis
    std::vector<MultiPoly<K>> R;
    for (size_t i = 0; i < G.size(); i++) {
      auto [ei, ci] = G[i].leading_term(ord);
      bool redundant = false;
      for (size_t j = 0; j < G.size(); j++) {
        if (i == j) continue;
        auto [ej, cj] = G[j].leading_term(ord);
        if (detail::expo_divides(ej, ei) && !(ej == ei && j > i)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) R.push_back(G[i]);
    }
    for (size_t i = 0; i < R.size(); i++) {
      std::vector<MultiPoly<K>> others;
      for (size_t j = 0; j < R.size(); j++)
        if (j != i) others.push_back(R[j]);
      R[i] = normal_form(R[i], others, ord, nullptr, nullptr);
      auto [e, c] = R[i].leading_term(ord);
      R[i] = inverse(c) * R[i];
    }
    // canonical order: by leading monomial, descending
    std::sort(R.begin(), R.end(), [&](const MultiPoly<K> &a, const MultiPoly<K> &b) {
      return ord.compare(a.leading_term(ord).first, b.leading_term(ord).first) > 0;
    });
    out.basis = R;
  } else {
    out.basis = G;
  }
  return out;
}

// ideal membership; only meaningful for a completed basis
template <class K>
bool reduces_to_zero(const MultiPoly<K> &f, const GroebnerResult<K> &gb,
                     const MonomialOrder &ord) {
  return normal_form(f, gb.basis, ord, nullptr, nullptr).is_zero();
}

// the ideal is all of the ring iff the reduced basis contains a constant
template <class K> bool contains_one(const GroebnerResult<K> &gb) {
  for (auto &g : gb.basis)
    if (!g.is_zero() && g.is_constant()) return true;
  return false;
}

} // namespace picard
