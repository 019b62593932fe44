#include <picard/factor.hpp>
#include <picard/resultant.hpp>

#include <algorithm>

namespace picard {

namespace {

FieldPtr detect_field(const Poly<NFElem> &f, FieldPtr hint) {
  if (hint) return hint;
  for (int i = 0; i <= f.degree(); i++)
    if (f.coeff(i).F) return f.coeff(i).F;
  return nullptr;
}

Poly<NFElem> promote_poly(const Poly<Rat> &p, const FieldPtr &f) {
  std::vector<NFElem> c;
  for (int i = 0; i <= p.degree(); i++) c.push_back(NFElem::from_rat(f, p.coeff(i)));
  return Poly<NFElem>(c);
}

Poly<Rat> demote_poly(const Poly<NFElem> &p) {
  std::vector<Rat> c;
  for (int i = 0; i <= p.degree(); i++) {
    if (!p.coeff(i).is_rational())
      throw InternalError("demote_poly: non-rational coefficient");
    c.push_back(p.coeff(i).rat_value());
  }
  return Poly<Rat>(c);
}

// g in K[x] as a bivariate over Q: alpha |-> first var, x |-> second var
MultiPoly<Rat> bivariate_rep(const Poly<NFElem> &g, const std::vector<std::string> &vars) {
  MultiPoly<Rat> r(vars);
  for (int i = 0; i <= g.degree(); i++) {
    Poly<Rat> rep = rep_poly(g.coeff(i));
    for (int j = 0; j <= rep.degree(); j++) {
      if (rep.coeff(j).is_zero()) continue;
      r.add_term(Expo{j, i}, rep.coeff(j));
    }
  }
  return r;
}

// Norm from K[x] down to Q[x]: Res_t(m(t), g(t, x)) with alpha |-> t.
Poly<Rat> norm_poly(const Poly<NFElem> &g, const FieldPtr &K) {
  std::vector<std::string> vars{"t", "x"};
  MultiPoly<Rat> G = bivariate_rep(g, vars);
  MultiPoly<Rat> M(vars);
  for (int j = 0; j <= K->minpoly.degree(); j++)
    if (!K->minpoly.coeff(j).is_zero()) M.add_term(Expo{j, 0}, K->minpoly.coeff(j));
  MultiPoly<Rat> r = resultant_eliminate(M, G, 0);
  return to_univariate(r, 1);
}

bool nfelem_less(const NFElem &a, const NFElem &b) { return a < b; }

bool poly_less_nf(const Poly<NFElem> &a, const Poly<NFElem> &b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; i--) {
    if (nfelem_less(a.coeff(i), b.coeff(i))) return true;
    if (nfelem_less(b.coeff(i), a.coeff(i))) return false;
  }
  return false;
}

// factors of a monic squarefree g over K, Trager's norm method
std::vector<Poly<NFElem>> trager_squarefree(const Poly<NFElem> &g, const FieldPtr &K) {
  NFElem alpha = NFElem::generator(K);
  for (int trial = 0;; trial++) {
    int s = (trial % 2 == 0) ? trial / 2 : -(trial / 2 + 1); // 0, -1, 1, -2, 2, ...
    if (trial > 40) throw InternalError("trager: no squarefree shift found");
    Poly<NFElem> shift(std::vector<NFElem>{NFElem(-s) * alpha, NFElem(1)});
    Poly<NFElem> gs = compose(g, shift);
    Poly<Rat> N = norm_poly(gs, K);
    if (N.degree() != g.degree() * K->degree())
      throw InternalError("trager: norm degree mismatch");
    if (!is_squarefree(N)) continue;
    auto nf = factor_over_q(N);
    std::vector<Poly<NFElem>> out;
    int degsum = 0;
    for (auto &[Nj, mult] : nf.factors) {
      Poly<NFElem> hj = gcd(gs, promote_poly(Nj, K));
      if (hj.degree() == 0) continue;
      Poly<NFElem> unshift(std::vector<NFElem>{NFElem(s) * alpha, NFElem(1)});
      out.push_back(compose(hj, unshift));
      degsum += hj.degree();
    }
    if (degsum != g.degree())
      throw InternalError("trager: factor degrees do not add up");
    return out;
  }
}

} // namespace

NFFactorization factor_over_field(const Poly<NFElem> &f, FieldPtr field) {
  FieldPtr K = detect_field(f, std::move(field));
  NFFactorization out;
  out.content = f.is_zero() ? NFElem(0) : f.lc();
  if (f.degree() <= 0) return out;
  if (!K) {
    auto rf = factor_over_q(demote_poly(f));
    for (auto &[g, m] : rf.factors) out.factors.push_back({promote_poly(g, nullptr), m});
    return out;
  }
  Poly<NFElem> fm;
  {
    std::vector<NFElem> c;
    for (int i = 0; i <= f.degree(); i++) c.push_back(f.coeff(i).promoted(K));
    fm = make_monic(Poly<NFElem>(c));
  }
  for (auto &[part, mult] : squarefree_decomposition(fm))
    for (auto &h : trager_squarefree(part, K)) out.factors.push_back({h, mult});
  std::sort(out.factors.begin(), out.factors.end(), [](const auto &a, const auto &b) {
    if (poly_less_nf(a.first, b.first)) return true;
    if (poly_less_nf(b.first, a.first)) return false;
    return a.second < b.second;
  });
  return out;
}

namespace {

// evaluate a Q-coefficient polynomial at gamma = beta + lambda*alpha inside
// the tower K[y]/(h); zero result means the polynomial vanishes at gamma
bool vanishes_at_tower_gamma(const Poly<Rat> &F, const Poly<NFElem> &h,
                             const NFElem &alpha, int lambda) {
  Poly<NFElem> gamma(std::vector<NFElem>{NFElem(lambda) * alpha, NFElem(1)});
  gamma = gamma % h;
  Poly<NFElem> acc; // zero
  for (int i = F.degree(); i >= 0; i--) {
    acc = (acc * gamma) % h;
    acc = acc + Poly<NFElem>(NFElem(F.coeff(i)));
  }
  return acc.is_zero();
}

// flatten K(beta) with h(beta)=0 over K=Q(alpha) to a single generator
RootLocation flatten_tower(const Poly<NFElem> &h, const FieldPtr &K, int max_degree) {
  int n = K->degree(), d = h.degree();
  if (n * d > max_degree)
    throw FieldDegreeCapExceeded("field degree " + std::to_string(n * d) +
                                 " exceeds cap " + std::to_string(max_degree));
  NFElem alpha = NFElem::generator(K);
  std::vector<std::string> vars{"x", "t"};
  // B0(x, y): h with alpha |-> x and the root variable |-> y (y slot reused as t)
  MultiPoly<Rat> B0 = bivariate_rep(h, vars); // exponents: {x deg, y deg}
  MultiPoly<Rat> Mx(vars);
  for (int j = 0; j <= K->minpoly.degree(); j++)
    if (!K->minpoly.coeff(j).is_zero()) Mx.add_term(Expo{j, 0}, K->minpoly.coeff(j));
  for (int trial = 0; trial < 40; trial++) {
    int lambda = (trial % 2 == 0) ? trial / 2 + 1 : -(trial / 2 + 1); // 1, -1, 2, -2, ...
    // substitute y = t - lambda*x to express gamma = beta + lambda*alpha
    MultiPoly<Rat> xv = MultiPoly<Rat>::variable(vars, 0);
    MultiPoly<Rat> tv = MultiPoly<Rat>::variable(vars, 1);
    MultiPoly<Rat> sub = tv - MultiPoly<Rat>::constant(vars, Rat(lambda)) * xv;
    MultiPoly<Rat> B = B0.substitute({xv, sub});
    Poly<Rat> H = to_univariate(resultant_eliminate(Mx, B, 0), 1);
    if (H.degree() != n * d) continue;
    if (!is_squarefree(H)) continue;
    auto hf = factor_over_q(H);
    Poly<Rat> F0;
    for (auto &[F, m] : hf.factors)
      if (vanishes_at_tower_gamma(F, h, alpha, lambda)) { F0 = F; break; }
    if (F0.degree() != n * d) continue; // gamma not primitive for this lambda
    FieldPtr L = NumberField::create(F0);
    NFElem gamma = NFElem::generator(L);
    // recover alpha in L: x is the unique common root of m_alpha(x) and
    // B(x, gamma), so the gcd over L[x] must come out linear
    Poly<NFElem> Bg; // B with t |-> gamma, as a polynomial in x over L
    {
      auto cv = coeff_vector(B, 0); // coefficients by power of x, polys in t
      std::vector<NFElem> cc;
      for (auto &ct : cv) cc.push_back(eval_at(to_univariate(ct, 1), gamma));
      Bg = Poly<NFElem>(cc);
    }
    Poly<NFElem> A = gcd(promote_poly(K->minpoly, L), Bg);
    if (A.degree() != 1) continue;
    NFElem alpha_img = NFElem(0) - A.coeff(0); // monic linear
    NFElem beta_img = gamma - NFElem(lambda) * alpha_img;
    // sanity: h with embedded coefficients vanishes at beta_img
    NFElem check(0);
    for (int i = h.degree(); i >= 0; i--)
      check = check * beta_img + embed_elem(h.coeff(i), L, alpha_img);
    if (!check.is_zero()) throw InternalError("flatten_tower: embedding check failed");
    return RootLocation{h, L, alpha_img, beta_img};
  }
  throw InternalError("flatten_tower: no primitive element found");
}

} // namespace

NFElem embed_elem(const NFElem &x, FieldPtr target, const NFElem &alpha_image) {
  if (x.is_rational()) return NFElem::from_rat(target, x.rat_value());
  return eval_at(rep_poly(x), alpha_image).promoted(target);
}

std::vector<RootLocation> factor_and_extend(const Poly<NFElem> &f, FieldPtr base,
                                            int max_degree) {
  FieldPtr K = detect_field(f, base);
  auto fac = factor_over_field(f, K);
  std::vector<RootLocation> out;
  NFElem alpha_id = K ? NFElem::generator(K) : NFElem(0);
  for (auto &[h, mult] : fac.factors) {
    if (h.degree() == 1) {
      out.push_back(RootLocation{h, K, alpha_id, NFElem(0) - h.coeff(0)});
      continue;
    }
    if (!K) {
      int d = h.degree();
      if (d > max_degree)
        throw FieldDegreeCapExceeded("field degree " + std::to_string(d) +
                                     " exceeds cap " + std::to_string(max_degree));
      FieldPtr L = NumberField::create(demote_poly(h));
      out.push_back(RootLocation{h, L, NFElem(0), NFElem::generator(L)});
      continue;
    }
    out.push_back(flatten_tower(h, K, max_degree));
  }
  return out;
}

std::vector<NFElem> field_automorphisms(FieldPtr f) {
  if (!f) return {};
  Poly<NFElem> m = promote_poly(f->minpoly, f);
  auto fac = factor_over_field(m, f);
  std::vector<NFElem> roots;
  for (auto &[h, mult] : fac.factors)
    if (h.degree() == 1) roots.push_back(NFElem(0) - h.coeff(0));
  NFElem alpha = NFElem::generator(f);
  std::stable_sort(roots.begin(), roots.end(), [&](const NFElem &a, const NFElem &b) {
    if (a == alpha) return !(b == alpha);
    if (b == alpha) return false;
    return nfelem_less(a, b);
  });
  if (roots.empty() || !(roots[0] == alpha))
    throw InternalError("field_automorphisms: identity root missing");
  return roots;
}

bool is_galois(FieldPtr f) {
  if (!f) return true;
  return static_cast<int>(field_automorphisms(f).size()) == f->degree();
}

GaloisClosure galois_closure(FieldPtr f, int max_degree) {
  GaloisClosure out;
  if (!f) return out;
  FieldPtr L = f;
  NFElem alpha_in_L = NFElem::generator(f);
  Poly<Rat> m0 = f->minpoly;
  while (true) {
    auto fac = factor_over_field(promote_poly(m0, L), L);
    Poly<NFElem> big;
    std::vector<NFElem> roots;
    for (auto &[h, mult] : fac.factors) {
      if (h.degree() == 1)
        roots.push_back(NFElem(0) - h.coeff(0));
      else if (big.degree() < 2)
        big = h;
    }
    if (big.degree() < 2) {
      std::sort(roots.begin(), roots.end(), nfelem_less);
      out.field = L;
      out.alpha_image = alpha_in_L;
      out.embeddings = roots;
      return out;
    }
    RootLocation rl = flatten_tower(big, L, max_degree);
    alpha_in_L = embed_elem(alpha_in_L, rl.field, rl.alpha_image);
    L = rl.field;
  }
}

namespace {

bool all_rational_coeffs(const Poly<NFElem> &p) {
  for (int i = 0; i <= p.degree(); i++)
    if (!p.coeff(i).is_rational()) return false;
  return true;
}

Poly<Rat> to_rational(const Poly<NFElem> &p) {
  std::vector<Rat> c;
  for (int i = 0; i <= p.degree(); i++) c.push_back(p.coeff(i).rat_value());
  return Poly<Rat>(c);
}

Poly<NFElem> from_rational(const Poly<Rat> &p) {
  std::vector<NFElem> c;
  for (int i = 0; i <= p.degree(); i++) c.push_back(NFElem(p.coeff(i)));
  return Poly<NFElem>(c);
}

} // namespace

Poly<NFElem> gcd_univariate(const Poly<NFElem> &a, const Poly<NFElem> &b) {
  if (all_rational_coeffs(a) && all_rational_coeffs(b))
    return from_rational(gcd_rational(to_rational(a), to_rational(b)));
  return gcd(a, b);
}

Poly<NFElem> squarefree_univariate(const Poly<NFElem> &f) {
  if (f.degree() <= 0) return Poly<NFElem>(NFElem(1));
  if (all_rational_coeffs(f))
    return from_rational(squarefree_part_rational(to_rational(f)));
  Poly<NFElem> g = gcd(f, f.derivative());
  return make_monic(divrem(f, g).first);
}

} // namespace picard
