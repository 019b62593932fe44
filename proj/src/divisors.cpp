#include "picard/divisors.hpp"
#include "picard/grammar.hpp"
#include "picard/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

namespace picard {

Poly<NFElem> embed_poly(const Poly<NFElem> &p, FieldPtr target, const NFElem &alpha_image) {
  std::vector<NFElem> c;
  for (int i = 0; i <= p.degree(); i++) c.push_back(embed_elem(p.coeff(i), target, alpha_image));
  return Poly<NFElem>(c);
}

MultiPoly<NFElem> embed_multipoly(const MultiPoly<NFElem> &p, FieldPtr target,
                                  const NFElem &alpha_image) {
  MultiPoly<NFElem> r(p);
  for (auto &[e, c] : r.terms) c = embed_elem(c, target, alpha_image);
  return r;
}

std::string normalized_curve_key(const MultiPoly<NFElem> &c) {
  if (c.is_zero()) return "0";
  // first nonzero coefficient (in the term map's canonical order) scaled to 1
  const NFElem &lead = c.terms.begin()->second;
  return print_polynomial(inverse(lead) * c);
}

DivisorRecord hyperplane_record() {
  DivisorRecord r;
  r.kind = DivisorKind::Hyperplane;
  r.degree = 1;
  r.label = "H";
  return r;
}

std::vector<DivisorRecord> split_records_from(DivisorKind kind,
                                              const MultiPoly<NFElem> &plane_curve,
                                              const std::array<Poly<NFElem>, 3> &param,
                                              const EvenTangency &lift, FieldPtr field,
                                              const NFElem &surface_gen_image,
                                              const std::string &label_base) {
  std::vector<DivisorRecord> out;
  for (int sign : {+1, -1}) {
    DivisorRecord r;
    r.kind = kind;
    r.plane_curve = plane_curve;
    r.degree = plane_curve.total_degree();
    r.param = param;
    r.lift_branch = lift.s;
    r.lift_scale = lift.c;
    r.lift_sign = sign;
    r.field = field;
    r.surface_gen_image = surface_gen_image;
    r.label = label_base + (sign > 0 ? "+" : "-");
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

// Poly<NFElem> coefficients as bivariate polynomials in (s, t)
MultiPoly<NFElem> at_var(const Poly<NFElem> &p, const std::vector<std::string> &vars, int var) {
  MultiPoly<NFElem> r(vars);
  for (int i = 0; i <= p.degree(); i++) {
    if (p.coeff(i).is_zero()) continue;
    Expo e(vars.size(), 0);
    e[var] = i;
    r.add_term(e, p.coeff(i));
  }
  return r;
}

} // namespace

std::optional<EvenTangency> check_even_tangency(const std::array<Poly<NFElem>, 3> &param,
                                                const MultiPoly<NFElem> &f) {
  std::array<Poly<NFElem>, 3> P = param;
  if (P[0].is_zero() && P[1].is_zero() && P[2].is_zero())
    throw InputError("check_even_tangency: zero parametrization");

  // remove a common polynomial factor; it only reparametrizes the base points
  Poly<NFElem> common = gcd_univariate(gcd_univariate(P[0], P[1]), P[2]);
  if (common.degree() > 0)
    for (auto &p : P) p = divrem(p, common).first;

  // constant maps have a rank-1 coefficient matrix: all 2x2 minors vanish
  int dmax = std::max({P[0].degree(), P[1].degree(), P[2].degree()});
  bool nonconstant = false;
  for (int a = 0; a < 3 && !nonconstant; a++)
    for (int b = a + 1; b < 3 && !nonconstant; b++)
      for (int i = 0; i <= dmax && !nonconstant; i++)
        for (int j = i + 1; j <= dmax && !nonconstant; j++)
          if (!(P[a].coeff(i) * P[b].coeff(j) - P[a].coeff(j) * P[b].coeff(i)).is_zero())
            nonconstant = true;
  if (!nonconstant) throw InputError("check_even_tangency: parametrization is constant");

  Poly<NFElem> g = f.substitute_univariate({P[0], P[1], P[2]});
  if (g.is_zero())
    throw InputError("check_even_tangency: the curve lies inside the branch sextic");

  if (dmax >= 2) {
    // Singular parameters of the map: pairs s != t with the same image, and
    // ramification on the diagonal.  Both are zeros of the quotients of the
    // cross polynomials P_a(s)P_b(t) - P_a(t)P_b(s) by (s - t).
    std::vector<std::string> st{"s", "t"};
    MultiPoly<NFElem> S = MultiPoly<NFElem>::variable(st, 0);
    MultiPoly<NFElem> T = MultiPoly<NFElem>::variable(st, 1);
    std::vector<MultiPoly<NFElem>> quot;
    bool constant_quotient = false;
    for (int a = 0; a < 3; a++)
      for (int b = a + 1; b < 3; b++) {
        MultiPoly<NFElem> cross = at_var(P[a], st, 0) * at_var(P[b], st, 1) -
                                  at_var(P[a], st, 1) * at_var(P[b], st, 0);
        if (cross.is_zero()) continue;
        auto q = try_divide(cross, S - T);
        if (!q) throw InternalError("check_even_tangency: cross polynomial not divisible by s-t");
        if (q->is_zero()) continue;
        if (q->is_constant()) constant_quotient = true;
        quot.push_back(*q);
      }
    if (!constant_quotient) {
      // a nonzero constant quotient certifies an injective immersion; otherwise
      // project the common zeros of the quotients to the s-line
      if (quot.size() < 2)
        throw InputError("check_even_tangency: parametrization is not birational onto its image");
      std::vector<Poly<NFElem>> projections;
      for (size_t i = 0; i + 1 < quot.size(); i++)
        for (size_t j = i + 1; j < quot.size(); j++) {
          MultiPoly<NFElem> res = resultant_eliminate(quot[i], quot[j], 1);
          if (!res.is_zero()) projections.push_back(to_univariate(res, 0));
        }
      if (projections.empty())
        throw InputError("check_even_tangency: parametrization is not birational onto its image");
      Poly<NFElem> rs = projections[0];
      for (size_t i = 1; i < projections.size(); i++) rs = gcd_univariate(rs, projections[i]);
      if (rs.degree() > 0 && gcd_univariate(rs, g).degree() > 0)
        throw InputError(
            "check_even_tangency: a singular point of the curve could not be kept off the "
            "branch sextic");
    }
  }

  auto w = is_square_in_closure(g);
  if (!w.is_square) return std::nullopt;
  return EvenTangency{w.s, w.c};
}

std::optional<DelPezzoCertificate> detect_del_pezzo(const DoubleSexticSurface &X) {
  DelPezzoCertificate cert;
  for (int v = 0; v < 3; v++) {
    bool even = true;
    for (auto &[e, c] : X.f.terms)
      if (e[v] % 2 != 0) {
        even = false;
        break;
      }
    if (even) cert.variables.push_back(v);
  }
  if (cert.variables.empty()) return std::nullopt;
  return cert;
}

// ---- sixtangent conics ----

namespace {

using TP = std::vector<MultiPoly<NFElem>>; // polynomial in t, coefficients upward

TP tp_mul(const TP &a, const TP &b, const std::vector<std::string> &vars) {
  if (a.empty() || b.empty()) return {};
  TP r(a.size() + b.size() - 1, MultiPoly<NFElem>(vars));
  for (size_t i = 0; i < a.size(); i++)
    for (size_t j = 0; j < b.size(); j++) r[i + j] = r[i + j] + a[i] * b[j];
  return r;
}

NFElem mp_coeff_of(const MultiPoly<NFElem> &p, int i, int j, int k) {
  auto it = p.terms.find(Expo{i, j, k});
  return it == p.terms.end() ? NFElem(0) : it->second;
}

struct AffineConic {
  // a0 + a1 x + a2 y + a3 xy + a4 x^2 + a5 y^2 in the chart z = 1
  std::array<NFElem, 6> a;
};

AffineConic affine_conic(const MultiPoly<NFElem> &C) {
  AffineConic r;
  r.a[0] = mp_coeff_of(C, 0, 0, 2);
  r.a[1] = mp_coeff_of(C, 1, 0, 1);
  r.a[2] = mp_coeff_of(C, 0, 1, 1);
  r.a[3] = mp_coeff_of(C, 1, 1, 0);
  r.a[4] = mp_coeff_of(C, 2, 0, 0);
  r.a[5] = mp_coeff_of(C, 0, 2, 0);
  return r;
}

NFElem conic_det(const AffineConic &c) {
  // symmetric matrix (x, y, z) rows: [[a4, a3/2, a1/2], [a3/2, a5, a2/2], [a1/2, a2/2, a0]]
  NFElem h(Rat(1, 2));
  NFElem m01 = h * c.a[3], m02 = h * c.a[1], m12 = h * c.a[2];
  return c.a[4] * (c.a[5] * c.a[0] - m12 * m12) - m01 * (m01 * c.a[0] - m12 * m02) +
         m02 * (m01 * m12 - c.a[5] * m02);
}

// parametrization of the conic through (x0, y0), in the printed form
std::array<Poly<NFElem>, 3> conic_param(const AffineConic &c, const NFElem &x0,
                                        const NFElem &y0) {
  const auto &a = c.a;
  Poly<NFElem> Zt(std::vector<NFElem>{a[4], a[3], a[5]});
  Poly<NFElem> Xt(std::vector<NFElem>{-(a[1] + a[3] * y0 + a[4] * x0), -(a[2] + NFElem(2) * a[5] * y0),
                                      a[5] * x0});
  Poly<NFElem> T(std::vector<NFElem>{NFElem(0), NFElem(1)});
  Poly<NFElem> Yt = T * (Xt - x0 * Zt) + y0 * Zt;
  return {Xt, Yt, Zt};
}

// rational points on the affine conic: small rational x0 with the quadratic in
// y solvable over the field, then the swapped orientation
std::optional<std::pair<NFElem, NFElem>> conic_point_over_field(const AffineConic &c,
                                                                FieldPtr F) {
  std::vector<Rat> heights;
  for (int den = 1; den <= 3; den++)
    for (int num = 0; num <= 8; num++)
      for (int s : {1, -1}) {
        if (num == 0 && s < 0) continue;
        Rat v(Int(s * num), Int(den));
        if (std::find(heights.begin(), heights.end(), v) == heights.end()) heights.push_back(v);
      }
  for (int orient = 0; orient < 2; orient++) {
    // orient 0: fix x0, solve for y; orient 1: fix y0, solve for x
    for (const Rat &t : heights) {
      NFElem t0 = NFElem::from_rat(F, t);
      NFElem q2 = orient == 0 ? c.a[5] : c.a[4];
      NFElem q1 = orient == 0 ? c.a[2] + c.a[3] * t0 : c.a[1] + c.a[3] * t0;
      NFElem q0 = orient == 0 ? c.a[0] + c.a[1] * t0 + c.a[4] * t0 * t0
                              : c.a[0] + c.a[2] * t0 + c.a[5] * t0 * t0;
      if (q2.is_zero()) {
        if (q1.is_zero()) continue;
        NFElem root = -(q0 / q1);
        return orient == 0 ? std::make_pair(t0, root) : std::make_pair(root, t0);
      }
      Poly<NFElem> q(std::vector<NFElem>{q0, q1, q2});
      auto fac = factor_over_field(q, F);
      for (auto &[p, e] : fac.factors)
        if (p.degree() == 1) {
          NFElem root = -p.coeff(0);
          return orient == 0 ? std::make_pair(t0, root) : std::make_pair(root, t0);
        }
    }
  }
  return std::nullopt;
}

} // namespace

SearchOutcome find_sixtangent_conics(const DoubleSexticSurface &X, long budget,
                                     const std::vector<MultiPoly<NFElem>> &known_conics,
                                     std::optional<double> time_limit_secs) {
  SearchOutcome out;
  int counter = 0;

  // fast path: verify supplied conics directly through a base point
  for (const auto &C : known_conics) {
    if (C.is_zero() || C.total_degree() != 2 || !C.is_homogeneous()) {
      out.notes.push_back("known conic rejected: not a homogeneous quadric");
      continue;
    }
    FieldPtr F = X.field;
    for (auto &[e, c] : C.terms)
      if (c.F && !F) F = c.F;
    AffineConic ac = affine_conic(C);
    if (conic_det(ac).is_zero()) {
      out.notes.push_back("degenerate conic skipped: " + normalized_curve_key(C));
      continue;
    }
    FieldPtr Fpt = F;
    NFElem gen_image = F ? NFElem::generator(F) : NFElem(0);
    AffineConic ac_pt = ac;
    MultiPoly<NFElem> C_pt = C;
    MultiPoly<NFElem> f_pt = X.f;
    auto pt = conic_point_over_field(ac, F);
    if (!pt) {
      // no small point over the base field: adjoin a root of a fiber quadric
      try {
        Rat x0v(0);
        Poly<NFElem> q;
        for (int k = 0; k <= 2; k++) {
          Rat xv(k);
          NFElem x0e = NFElem(xv).promoted(F);
          q = Poly<NFElem>(std::vector<NFElem>{ac.a[0] + ac.a[1] * x0e + ac.a[4] * x0e * x0e,
                                               ac.a[2] + ac.a[3] * x0e, ac.a[5]});
          if (q.degree() >= 1) {
            x0v = xv;
            break;
          }
        }
        if (q.degree() < 1)
          throw InternalError("nondegenerate conic with three constant fibers");
        auto roots = factor_and_extend(q, F);
        const RootLocation &r = roots.front();
        Fpt = r.field;
        gen_image = F ? r.alpha_image : NFElem(0);
        if (F && Fpt != F) {
          for (auto &a : ac_pt.a) a = embed_elem(a, Fpt, r.alpha_image);
          C_pt = embed_multipoly(C, Fpt, r.alpha_image);
          f_pt = embed_multipoly(X.f, Fpt, r.alpha_image);
        }
        pt = std::make_pair(NFElem::from_rat(Fpt, x0v), r.root);
      } catch (const FieldDegreeCapExceeded &) {
        out.completed = false;
        out.notes.push_back("field degree cap while searching a point on a known conic");
        continue;
      }
    }
    auto param = conic_param(ac_pt, pt->first, pt->second);
    Poly<NFElem> on_conic = C_pt.substitute_univariate({param[0], param[1], param[2]});
    if (!on_conic.is_zero())
      throw InternalError("conic parametrization left the conic");
    try {
      auto lift = check_even_tangency(param, f_pt);
      if (lift) {
        auto recs = split_records_from(DivisorKind::SplitCurveComponent, C_pt, param, *lift,
                                       Fpt, gen_image, "conic-" + std::to_string(++counter));
        for (auto &r : recs) out.found.push_back(std::move(r));
      } else {
        out.notes.push_back("known conic is not sixtangent: " + normalized_curve_key(C));
      }
    } catch (const InputError &e) {
      out.notes.push_back(std::string("known conic rejected: ") + e.what());
    }
  }

  // general search: the full coefficient system over the conic parameters
  if (budget <= 0) {
    out.completed = false;
    out.notes.push_back("conic search budget exhausted before the general search");
    return out;
  }
  std::vector<std::string> vars{"a0", "a1", "a2", "a3", "a4", "a5", "x0", "y0",
                                "b0", "b1", "b2", "b3", "b4", "b5", "b6"};
  auto V = [&](int i) { return MultiPoly<NFElem>::variable(vars, i); };
  MultiPoly<NFElem> zero(vars);
  MultiPoly<NFElem> a0 = V(0), a1 = V(1), a2 = V(2), a3 = V(3), a4 = V(4), a5 = V(5);
  MultiPoly<NFElem> x0 = V(6), y0 = V(7);

  TP Zt{a4, a3, a5};
  TP Xt{zero - (a1 + a3 * y0 + a4 * x0), zero - (a2 + MultiPoly<NFElem>::constant(vars, NFElem(2)) * a5 * y0),
        a5 * x0};
  // Y_t = t (X_t - x0 Z_t) + y0 Z_t
  TP shifted{zero};
  for (size_t i = 0; i < Xt.size(); i++) shifted.push_back(Xt[i] - x0 * Zt[i]);
  TP Yt = shifted;
  for (size_t i = 0; i < Zt.size(); i++) Yt[i] = Yt[i] + y0 * Zt[i];

  // f(X_t, Y_t, Z_t) via cached powers
  std::vector<TP> powX{{MultiPoly<NFElem>::constant(vars, NFElem(1))}};
  std::vector<TP> powY = powX, powZ = powX;
  for (int i = 1; i <= 6; i++) {
    powX.push_back(tp_mul(powX.back(), Xt, vars));
    powY.push_back(tp_mul(powY.back(), Yt, vars));
    powZ.push_back(tp_mul(powZ.back(), Zt, vars));
  }
  TP fXYZ(13, zero);
  for (auto &[e, c] : X.f.terms) {
    TP term = tp_mul(tp_mul(powX[e[0]], powY[e[1]], vars), powZ[e[2]], vars);
    for (size_t i = 0; i < term.size() && i < fXYZ.size(); i++)
      fXYZ[i] = fXYZ[i] + MultiPoly<NFElem>::constant(vars, c) * term[i];
  }
  TP sq(13, zero); // (b0 t^6 + ... + b6)^2
  for (int i = 0; i <= 6; i++)
    for (int j = 0; j <= 6; j++) sq[i + j] = sq[i + j] + V(8 + 6 - i) * V(8 + 6 - j);

  std::vector<MultiPoly<NFElem>> gens;
  for (int i = 0; i < 13; i++) {
    MultiPoly<NFElem> eq = fXYZ[i] - sq[i];
    if (!eq.is_zero()) gens.push_back(eq);
  }
  gens.push_back(a0 + a1 * x0 + a2 * y0 + a3 * x0 * y0 + a4 * x0 * x0 + a5 * y0 * y0);

  std::optional<std::chrono::steady_clock::time_point> deadline;
  double limit = time_limit_secs ? *time_limit_secs
                                 : (X.time_budget_secs ? *X.time_budget_secs : -1.0);
  if (limit >= 0)
    deadline = std::chrono::steady_clock::now() +
               std::chrono::microseconds(static_cast<long>(limit * 1e6));
  auto gb = groebner_basis<NFElem>(gens, MonomialOrder{OrderKind::DegRevLex, 0}, budget, deadline);
  if (!gb.completed) {
    out.completed = false;
    bool timed_out = gb.steps_used < budget;
    out.notes.push_back(std::string("conic search inconclusive: Groebner ") +
                        (timed_out ? "time limit" : "step budget") + " reached after " +
                        std::to_string(gb.steps_used) + " reduction steps");
    return out;
  }
  if (contains_one(gb)) return out; // no solutions at all

  // zero-dimensional extraction needs a univariate member for every variable;
  // the system always carries the positive-dimensional scaling and base-point
  // freedom, so this is expected to fail and the search reports honestly.
  for (size_t v = 0; v < vars.size(); v++) {
    bool have = false;
    for (auto &g : gb.basis) {
      bool pure = !g.is_constant();
      for (size_t wv = 0; wv < vars.size() && pure; wv++)
        if (wv != v && g.degree_in(static_cast<int>(wv)) > 0) pure = false;
      if (pure && g.degree_in(static_cast<int>(v)) > 0) {
        have = true;
        break;
      }
    }
    if (!have) {
      out.completed = false;
      out.notes.push_back(
          "conic search inconclusive: the solution variety is positive-dimensional "
          "(conic scaling and base-point freedom); supply known conics for the direct check");
      return out;
    }
  }
  out.notes.push_back("conic system unexpectedly zero-dimensional; no extractor engaged");
  out.completed = false;
  return out;
}

// ---- propagation ----

namespace {

struct CurveEntry {
  DivisorKind kind = DivisorKind::SplitCurveComponent;
  MultiPoly<NFElem> curve;
  std::array<Poly<NFElem>, 3> param;
  Poly<NFElem> s;
  NFElem c;
  std::string label;
  bool geometric = true;
};

bool lift_identity_holds(const MultiPoly<NFElem> &f, const std::array<Poly<NFElem>, 3> &param,
                         const Poly<NFElem> &s, const NFElem &c) {
  Poly<NFElem> g = f.substitute_univariate({param[0], param[1], param[2]});
  return g == c * (s * s);
}

// canonical parametrization of a line from its normalized equation
std::array<Poly<NFElem>, 3> line_param(const MultiPoly<NFElem> &line) {
  NFElem a = mp_coeff_of(line, 1, 0, 0), b = mp_coeff_of(line, 0, 1, 0),
         c = mp_coeff_of(line, 0, 0, 1);
  Poly<NFElem> T(std::vector<NFElem>{NFElem(0), NFElem(1)});
  if (!a.is_zero()) {
    NFElem ia = inverse(a);
    return {Poly<NFElem>(std::vector<NFElem>{-(ia * c), -(ia * b)}), T,
            Poly<NFElem>(NFElem(1))};
  }
  if (!b.is_zero())
    return {T, Poly<NFElem>(-(inverse(b) * c)), Poly<NFElem>(NFElem(1))};
  return {T, Poly<NFElem>(NFElem(1)), Poly<NFElem>(NFElem(0))};
}

MatNF adjugate3(const MatNF &M) {
  MatNF A(3, 3);
  auto co = [&](int i0, int i1, int j0, int j1) {
    return M(i0, j0) * M(i1, j1) - M(i0, j1) * M(i1, j0);
  };
  A(0, 0) = co(1, 2, 1, 2);
  A(0, 1) = -co(0, 2, 1, 2);
  A(0, 2) = co(0, 1, 1, 2);
  A(1, 0) = -co(1, 2, 0, 2);
  A(1, 1) = co(0, 2, 0, 2);
  A(1, 2) = -co(0, 1, 0, 2);
  A(2, 0) = co(1, 2, 0, 1);
  A(2, 1) = -co(0, 2, 0, 1);
  A(2, 2) = co(0, 1, 0, 1);
  return A;
}

} // namespace

DivisorSet propagate(const DivisorSet &sigma0, const DoubleSexticSurface &X) {
  auto partial = [&]() {
    DivisorSet p = sigma0;
    p.g_closed = false;
    p.galois_closed = false;
    return p;
  };
  try {
    // 1. one common field: iterated compositum of every record field,
    //    then its Galois closure
    FieldPtr K = X.field;
    NFElem xgen = K ? NFElem::generator(K) : NFElem(0);
    std::map<const NumberField *, NFElem> emb; // record-field generator image in K
    for (const auto &r : sigma0.records) {
      if (!r.field || emb.count(r.field.get())) continue;
      std::vector<NFElem> mp;
      for (int i = 0; i <= r.field->minpoly.degree(); i++)
        mp.push_back(NFElem(r.field->minpoly.coeff(i)));
      Poly<NFElem> target(mp);
      if (X.field) {
        // only embeddings that carry the record's copy of the surface field onto
        // the canonical one are admissible: their images are the roots of
        // gcd(minpoly(y), s(y) - xgen) where s expresses the surface generator
        Poly<Rat> s = rep_poly(r.surface_gen_image);
        std::vector<NFElem> sc;
        for (int i = 0; i <= s.degree(); i++) sc.push_back(NFElem(s.coeff(i)));
        Poly<NFElem> rel = Poly<NFElem>(sc) - Poly<NFElem>(xgen);
        Poly<NFElem> relK(std::vector<NFElem>{});
        for (int i = 0; i <= rel.degree(); i++)
          relK = relK + Poly<NFElem>::monomial(rel.coeff(i).promoted(K), i);
        target = gcd(target, relK);
        if (target.degree() < 1)
          throw InternalError("propagate: record field does not extend the surface field");
      }
      auto roots = factor_and_extend(target, K);
      const RootLocation &loc = roots.front(); // any admissible root presents the compositum
      if (loc.field != K) {
        for (auto &[fp, e] : emb) e = embed_elem(e, loc.field, loc.alpha_image);
        if (K) xgen = embed_elem(xgen, loc.field, loc.alpha_image);
        K = loc.field;
      }
      emb[r.field.get()] = loc.root;
    }
    if (K) {
      GaloisClosure gc = galois_closure(K);
      if (gc.field && gc.field != K) {
        for (auto &[fp, e] : emb) e = embed_elem(e, gc.field, gc.alpha_image);
        xgen = embed_elem(xgen, gc.field, gc.alpha_image);
        K = gc.field;
      }
    }
    MultiPoly<NFElem> fK = X.field ? embed_multipoly(X.f, K, xgen) : X.f;

    // 2. embed the seed records and index them at curve level
    std::map<std::string, CurveEntry> entries;
    std::vector<std::string> queue;
    auto embed_into_K = [&](const DivisorRecord &r) {
      CurveEntry e;
      e.kind = r.kind;
      e.label = r.label;
      if (!r.label.empty() && (r.label.back() == '+' || r.label.back() == '-'))
        e.label.pop_back();
      e.geometric =
          r.kind == DivisorKind::SplitCurveComponent && !r.plane_curve.is_zero();
      if (!e.geometric) {
        e.curve = r.plane_curve;
        return e;
      }
      if (r.field && !emb.count(r.field.get()))
        throw InternalError("propagate: record field missing from the compositum");
      NFElem im = r.field ? emb[r.field.get()] : NFElem(0);
      e.curve = r.field ? embed_multipoly(r.plane_curve, K, im) : r.plane_curve;
      for (int i = 0; i < 3; i++)
        e.param[i] = r.field ? embed_poly(r.param[i], K, im) : r.param[i];
      e.s = r.field ? embed_poly(r.lift_branch, K, im) : r.lift_branch;
      e.c = r.field ? embed_elem(r.lift_scale, K, im) : r.lift_scale;
      return e;
    };
    auto entry_key = [&](const CurveEntry &e) {
      if (e.kind == DivisorKind::Hyperplane) return std::string("H");
      if (!e.geometric) return "formal:" + e.label;
      return normalized_curve_key(e.curve);
    };
    auto add_entry = [&](CurveEntry e) -> bool {
      // lines are re-parametrized canonically so that every presentation of
      // the same line carries identical lift data
      if (e.geometric && e.curve.total_degree() == 1) {
        NFElem lead = e.curve.terms.begin()->second;
        e.curve = inverse(lead) * e.curve;
        e.param = line_param(e.curve);
        auto lift = check_even_tangency(e.param, fK);
        if (!lift) throw InternalError("propagate: transported line lost its split");
        e.s = lift->s;
        e.c = lift->c;
      }
      std::string key = entry_key(e);
      if (entries.count(key)) return false;
      if (e.geometric && !lift_identity_holds(fK, e.param, e.s, e.c))
        throw InternalError("propagate: transported record fails the split identity");
      entries.emplace(key, std::move(e));
      queue.push_back(key);
      return true;
    };
    for (const auto &r : sigma0.records) add_entry(embed_into_K(r));

    // 3. close under G and under Gal(K / base)
    std::vector<std::pair<MatNF, NFElem>> gmaps; // (M over K, lambda over K)
    for (const auto &A : X.autos) {
      MatNF M(3, 3);
      for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++)
          M(i, j) = X.field ? embed_elem(A.M(i, j), K, xgen) : A.M(i, j).promoted(K);
      NFElem lam = X.field ? embed_elem(A.lambda, K, xgen) : A.lambda.promoted(K);
      gmaps.push_back({M, lam});
    }
    std::vector<NFElem> sigmas;
    if (K)
      for (const NFElem &s : field_automorphisms(K)) {
        if (!X.field) {
          sigmas.push_back(s);
          continue;
        }
        if (embed_elem(xgen, K, s) == xgen) sigmas.push_back(s); // fixes the base field
      }

    while (!queue.empty()) {
      std::string key = queue.back();
      queue.pop_back();
      CurveEntry cur = entries.at(key); // copy: the map may grow
      if (!cur.geometric) continue;
      for (const auto &[M, lam] : gmaps) {
        CurveEntry img = cur;
        img.label.clear(); // derived entries are relabeled by position
        MatNF A = adjugate3(M);
        std::vector<std::string> xyz = cur.curve.vars;
        std::vector<MultiPoly<NFElem>> images;
        for (int i = 0; i < 3; i++) {
          MultiPoly<NFElem> row(xyz);
          for (int j = 0; j < 3; j++)
            row = row + MultiPoly<NFElem>::constant(xyz, A(i, j)) *
                            MultiPoly<NFElem>::variable(xyz, j);
          images.push_back(row);
        }
        img.curve = cur.curve.substitute(images);
        for (int i = 0; i < 3; i++) {
          Poly<NFElem> acc;
          for (int j = 0; j < 3; j++) acc = acc + M(i, j) * cur.param[j];
          img.param[i] = acc;
        }
        img.c = lam * lam * cur.c;
        add_entry(std::move(img));
      }
      for (const NFElem &s : sigmas) {
        CurveEntry img = cur;
        img.label.clear();
        img.curve = embed_multipoly(cur.curve, K, s);
        for (int i = 0; i < 3; i++) img.param[i] = embed_poly(cur.param[i], K, s);
        img.s = embed_poly(cur.s, K, s);
        img.c = embed_elem(cur.c, K, s);
        add_entry(std::move(img));
      }
    }

    // 4. assemble: both components of every split curve, deterministic order
    DivisorSet out;
    out.field = K;
    out.surface_gen_image = xgen;
    out.g_closed = true;
    out.galois_closed = true;
    std::vector<std::pair<std::string, const CurveEntry *>> ordered;
    for (auto &[k, e] : entries) ordered.push_back({k, &e});
    std::sort(ordered.begin(), ordered.end(),
              [](auto &a, auto &b) { return a.first < b.first; });
    int counter = 0;
    for (auto &[k, e] : ordered) {
      if (!e->geometric) {
        DivisorRecord r;
        r.kind = e->kind;
        r.plane_curve = e->curve;
        r.degree = e->kind == DivisorKind::Hyperplane ? 1 : 0;
        r.label = e->label;
        r.field = K;
        r.surface_gen_image = xgen;
        out.records.push_back(std::move(r));
        continue;
      }
      counter++;
      std::string base = e->label.empty() ? "D" + std::to_string(counter) : e->label;
      auto recs = split_records_from(DivisorKind::SplitCurveComponent, e->curve, e->param,
                                     EvenTangency{e->s, e->c}, K, xgen, base);
      for (auto &r : recs) out.records.push_back(std::move(r));
    }
    return out;
  } catch (const FieldDegreeCapExceeded &) {
    return partial();
  }
}

} // namespace picard
