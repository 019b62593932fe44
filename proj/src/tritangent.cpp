#include "picard/divisors.hpp"
#include "picard/grammar.hpp"

#include <functional>
#include <set>

// Line search over the three chart families x = u*y + v*z, y = u*z, z = 0.
// Restricting the sextic to a parametrized line gives a degree-6 polynomial
// g(t) whose coefficients are polynomials in the line parameters; the line
// splits the double cover exactly when g is a scalar times a square.  Matching
// g against c*(t^3 + a t^2 + b t + g)^2 coefficient by coefficient and
// eliminating a, b, g leaves three closed conditions E2, E1, E0 on the g_j,
// valid wherever g6 != 0; shorter matchings cover the degenerate degrees.

namespace picard {

namespace {

long long binom6(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; i++) r = r * (n - k + i) / i;
  return r;
}

// E2, E1, E0: the degree-6 matching conditions
template <class R, class MK>
std::vector<R> cascade_top(const std::array<R, 7> &g, MK mk) {
  R c = g[6];
  R bb = mk(4) * c * g[4] - g[5] * g[5];
  R eb = mk(8) * c * c * g[3] - mk(4) * c * g[4] * g[5] + g[5] * g[5] * g[5];
  R c2 = c * c, c3 = c2 * c;
  R E2 = mk(64) * c3 * g[2] - bb * bb - mk(4) * g[5] * eb;
  R E1 = mk(64) * c3 * c * g[1] - bb * eb;
  R E0 = mk(256) * c3 * c2 * g[0] - eb * eb;
  return {E2, E1, E0};
}

// degree-4 matching (needs g6 = g5 = 0, g4 != 0)
template <class R, class MK>
std::vector<R> cascade_quartic(const std::array<R, 7> &g, MK mk) {
  R c = g[4];
  R bb = mk(4) * c * g[2] - g[3] * g[3];
  R E1 = mk(8) * c * c * g[1] - g[3] * bb;
  R E0 = mk(64) * c * c * c * g[0] - bb * bb;
  return {E1, E0};
}

// degree-2 matching (needs g6 = ... = g3 = 0, g2 != 0)
template <class R, class MK>
std::vector<R> cascade_quadratic(const std::array<R, 7> &g, MK mk) {
  return {mk(4) * g[2] * g[0] - g[1] * g[1]};
}

struct Ext {
  FieldPtr F;
  NFElem xgen; // surface field generator's image in F; unused over Q
};

NFElem eval_over(const Poly<NFElem> &p, FieldPtr src, const Ext &e, const NFElem &x) {
  Poly<NFElem> q = (src && e.F != src) ? embed_poly(p, e.F, e.xgen) : p;
  NFElem r(0);
  for (int i = q.degree(); i >= 0; i--) r = r * x + q.coeff(i);
  return r;
}

std::string field_tag(const FieldPtr &F) {
  if (!F) return "Q";
  std::string s;
  for (int i = 0; i <= F->minpoly.degree(); i++) s += print_rat(F->minpoly.coeff(i)) + ",";
  return s;
}

} // namespace

SearchOutcome find_tritangent_lines(const DoubleSexticSurface &X) {
  SearchOutcome out;
  const FieldPtr F0 = X.field;
  const std::vector<std::string> &xyz = X.f.vars;
  int counter = 0;
  std::set<std::string> seen;

  auto deliver = [&](const Ext &e, const MultiPoly<NFElem> &curve,
                     const std::array<Poly<NFElem>, 3> &param) {
    std::string key = field_tag(e.F) + "|" + normalized_curve_key(curve);
    if (!seen.insert(key).second) return;
    MultiPoly<NFElem> fc = (F0 && e.F != F0) ? embed_multipoly(X.f, e.F, e.xgen) : X.f;
    try {
      auto lift = check_even_tangency(param, fc);
      if (!lift) return;
      counter++;
      auto recs = split_records_from(DivisorKind::SplitCurveComponent, curve, param, *lift,
                                     e.F, F0 ? e.xgen : NFElem(0),
                                     "line-" + std::to_string(counter));
      for (auto &r : recs) out.found.push_back(std::move(r));
    } catch (const InputError &) {
      // exact verification refused an elimination artifact
    }
  };
  auto line_A = [&](const Ext &e, const NFElem &u0, const NFElem &v0) {
    MultiPoly<NFElem> C = MultiPoly<NFElem>::variable(xyz, 0) -
                          MultiPoly<NFElem>::constant(xyz, u0) * MultiPoly<NFElem>::variable(xyz, 1) -
                          MultiPoly<NFElem>::constant(xyz, v0) * MultiPoly<NFElem>::variable(xyz, 2);
    std::array<Poly<NFElem>, 3> P{Poly<NFElem>(std::vector<NFElem>{v0, u0}),
                                  Poly<NFElem>(std::vector<NFElem>{NFElem(0), NFElem(1)}),
                                  Poly<NFElem>(NFElem(1))};
    deliver(e, C, P);
  };

  // coefficient ladder for the one-parameter sub-families: branches over the
  // top degree of the restriction, deeper roots deferred to shorter matchings
  auto ladder = [&](const std::array<Poly<NFElem>, 7> &g, const char *tag,
                    const std::function<void(const Ext &, const NFElem &)> &emit) {
    auto mk = [](int n) { return Poly<NFElem>(NFElem(n)); };
    for (int k : {6, 4, 2, 0}) {
      if (g[k].is_zero()) continue;
      std::vector<Poly<NFElem>> eqs;
      for (int j = k + 1; j <= 6; j++)
        if (!g[j].is_zero()) eqs.push_back(g[j]);
      std::vector<Poly<NFElem>> casc;
      if (k == 6) casc = cascade_top(g, mk);
      else if (k == 4) casc = cascade_quartic(g, mk);
      else if (k == 2) casc = cascade_quadratic(g, mk);
      for (auto &c : casc)
        if (!c.is_zero()) eqs.push_back(c);
      if (eqs.empty()) {
        // every parameter would pass: a one-parameter family of split lines,
        // impossible over a smooth branch curve
        out.completed = false;
        out.notes.push_back(std::string(tag) + ": unconstrained tangency family");
        continue;
      }
      Poly<NFElem> U = eqs[0];
      for (size_t i = 1; i < eqs.size() && U.degree() > 0; i++)
        U = gcd_univariate(U, eqs[i]);
      if (U.degree() < 1) continue;
      U = squarefree_univariate(U);
      auto fac = factor_over_field(U, F0);
      for (auto &[pf, mult] : fac.factors) {
        if (pf.degree() < 1) continue;
        try {
          for (const auto &loc : factor_and_extend(pf, F0)) {
            Ext e{loc.field, F0 ? loc.alpha_image : NFElem(0)};
            if (eval_over(g[k], F0, e, loc.root).is_zero()) continue; // deeper branch
            emit(e, loc.root);
          }
        } catch (const FieldDegreeCapExceeded &) {
          out.completed = false;
          out.notes.push_back(std::string(tag) + ": field degree cap reached, partial search");
        }
      }
    }
  };

  // restriction coefficients for the full first chart x = u*y + v*z,
  // parametrized as (u*t + v, t, 1): g_j(u, v)
  std::vector<std::string> uv{"u", "v"};
  std::array<MultiPoly<NFElem>, 7> G;
  for (auto &q : G) q = MultiPoly<NFElem>(uv);
  for (auto &[ex, cf] : X.f.terms) {
    int i = ex[0], j = ex[1];
    for (int m = 0; m <= i; m++)
      G[m + j].add_term(Expo{m, i - m}, cf * NFElem(static_cast<int>(binom6(i, m))));
  }
  Poly<NFElem> phi = to_univariate(G[6], 0); // t^6 coefficient, v-free

  // ---- chart x = u*y + v*z, u, v and g6 nonzero ----
  {
    auto mkb = [&uv](int n) { return MultiPoly<NFElem>::constant(uv, NFElem(n)); };
    std::vector<MultiPoly<NFElem>> E = cascade_top(G, mkb);

    // strip monomial content: the coordinate axes belong to the edge passes
    auto strip = [&](MultiPoly<NFElem> p) {
      for (int var = 0; var < 2; var++) {
        MultiPoly<NFElem> unit = MultiPoly<NFElem>::variable(uv, var);
        while (!p.is_zero()) {
          auto q = try_divide(p, unit);
          if (!q) break;
          p = *q;
        }
      }
      return p;
    };
    std::vector<MultiPoly<NFElem>> S, T;
    bool any = false;
    for (auto &Ei : E) {
      if (Ei.is_zero()) continue;
      any = true;
      MultiPoly<NFElem> s = strip(Ei);
      (s.degree_in(1) > 0 ? S : T).push_back(s);
    }
    std::vector<Poly<NFElem>> ucons;
    bool elim_ok = true;
    if (!any) {
      out.completed = false;
      out.notes.push_back("chart x = u*y + v*z: tangency conditions vanish identically");
      elim_ok = false;
    } else if (S.empty()) {
      for (auto &t : T) ucons.push_back(to_univariate(t, 0));
    } else if (S.size() == 1 && T.empty()) {
      out.completed = false;
      out.notes.push_back("chart x = u*y + v*z: tangency locus is a curve, not enumerable");
      elim_ok = false;
    } else {
      for (size_t i = 0; i < S.size(); i++)
        for (size_t j = i + 1; j < S.size(); j++) {
          MultiPoly<NFElem> r = resultant_eliminate(S[i], S[j], 1);
          if (!r.is_zero()) ucons.push_back(to_univariate(r, 0));
        }
      for (auto &t : T) ucons.push_back(to_univariate(t, 0));
      if (ucons.empty()) {
        out.completed = false;
        out.notes.push_back("chart x = u*y + v*z: elimination degenerated, partial search");
        elim_ok = false;
      }
    }
    if (elim_ok && !ucons.empty()) {
      Poly<NFElem> U = ucons[0];
      for (size_t i = 1; i < ucons.size() && U.degree() > 0; i++)
        U = gcd_univariate(U, ucons[i]);
      if (U.degree() >= 1) {
        U = squarefree_univariate(U);
        auto fac = factor_over_field(U, F0);
        for (auto &[pf, mult] : fac.factors) {
          if (pf.degree() < 1) continue;
          try {
            for (const auto &loc : factor_and_extend(pf, F0)) {
              Ext e1{loc.field, F0 ? loc.alpha_image : NFElem(0)};
              NFElem u0 = loc.root;
              if (u0.is_zero()) continue;                        // axis: x = v*z pass
              if (eval_over(phi, F0, e1, u0).is_zero()) continue; // degenerate top pass
              std::vector<Poly<NFElem>> vcons;
              bool nonzero_spec = false;
              for (auto &Ei : E) {
                if (Ei.is_zero()) continue;
                MultiPoly<NFElem> EiF = F0 ? embed_multipoly(Ei, e1.F, e1.xgen) : Ei;
                Poly<NFElem> pv = to_univariate(EiF.substitute_scalar(0, u0), 1);
                if (!pv.is_zero()) {
                  nonzero_spec = true;
                  vcons.push_back(pv);
                }
              }
              if (!nonzero_spec) {
                out.completed = false;
                out.notes.push_back(
                    "chart x = u*y + v*z: unconstrained second parameter at a root");
                continue;
              }
              Poly<NFElem> Uv = vcons[0];
              for (size_t i = 1; i < vcons.size() && Uv.degree() > 0; i++)
                Uv = gcd_univariate(Uv, vcons[i]);
              if (Uv.degree() < 1) continue;
              Uv = squarefree_univariate(Uv);
              for (const auto &loc2 : factor_and_extend(Uv, e1.F)) {
                if (loc2.root.is_zero()) continue; // axis: x = u*y pass
                Ext e2{loc2.field,
                       F0 ? (loc2.field != e1.F ? embed_elem(e1.xgen, loc2.field, loc2.alpha_image)
                                                : e1.xgen)
                          : NFElem(0)};
                NFElem u0e =
                    loc2.field != e1.F ? embed_elem(u0, loc2.field, loc2.alpha_image) : u0;
                line_A(e2, u0e, loc2.root);
              }
            }
          } catch (const FieldDegreeCapExceeded &) {
            out.completed = false;
            out.notes.push_back("chart x = u*y + v*z: field degree cap reached, partial search");
          }
        }
      }
    }
  }

  // ---- chart x = u*y + v*z with g6(u) = 0: the restriction drops degree ----
  if (phi.degree() >= 1) {
    auto fac = factor_over_field(squarefree_univariate(phi), F0);
    for (auto &[pf, mult] : fac.factors) {
      if (pf.degree() < 1) continue;
      try {
        for (const auto &loc : factor_and_extend(pf, F0)) {
          Ext e1{loc.field, F0 ? loc.alpha_image : NFElem(0)};
          NFElem u0 = loc.root;
          if (u0.is_zero()) continue; // axis: x = v*z pass
          // t^5 coefficient is linear in v; an odd-degree restriction never splits
          MultiPoly<NFElem> g5 = F0 ? embed_multipoly(G[5], e1.F, e1.xgen) : G[5];
          Poly<NFElem> lin = to_univariate(g5.substitute_scalar(0, u0), 1);
          if (!lin.is_zero()) {
            if (lin.degree() == 1) {
              NFElem v0 = -(lin.coeff(0) / lin.coeff(1));
              if (!v0.is_zero()) line_A(e1, u0, v0);
            }
            continue;
          }
          // the t^5 coefficient vanishes for every v: only possible when the
          // branch curve is singular, but enumerate the shorter matchings anyway
          std::array<Poly<NFElem>, 7> gv;
          for (int j = 0; j <= 4; j++) {
            MultiPoly<NFElem> gj = F0 ? embed_multipoly(G[j], e1.F, e1.xgen) : G[j];
            gv[j] = to_univariate(gj.substitute_scalar(0, u0), 1);
          }
          auto mk = [](int n) { return Poly<NFElem>(NFElem(n)); };
          std::vector<Poly<NFElem>> systems;
          {
            auto c4 = cascade_quartic(gv, mk);
            Poly<NFElem> s4 = c4[0];
            if (s4.is_zero()) s4 = c4[1];
            else if (!c4[1].is_zero()) s4 = gcd_univariate(s4, c4[1]);
            systems.push_back(s4);
          }
          {
            Poly<NFElem> s2 = gcd_univariate(gv[4], gv[3]);
            auto c2 = cascade_quadratic(gv, mk);
            if (!c2[0].is_zero()) s2 = gcd_univariate(s2, c2[0]);
            systems.push_back(s2);
          }
          systems.push_back(gcd_univariate(gcd_univariate(gv[4], gv[3]), gcd_univariate(gv[2], gv[1])));
          for (auto &sys : systems) {
            if (sys.degree() < 1) continue;
            for (const auto &loc2 : factor_and_extend(squarefree_univariate(sys), e1.F)) {
              if (loc2.root.is_zero()) continue;
              Ext e2{loc2.field,
                     F0 ? (loc2.field != e1.F ? embed_elem(e1.xgen, loc2.field, loc2.alpha_image)
                                              : e1.xgen)
                        : NFElem(0)};
              NFElem u0e =
                  loc2.field != e1.F ? embed_elem(u0, loc2.field, loc2.alpha_image) : u0;
              line_A(e2, u0e, loc2.root);
            }
          }
        }
      } catch (const FieldDegreeCapExceeded &) {
        out.completed = false;
        out.notes.push_back("chart x = u*y + v*z: field degree cap on a degenerate root");
      }
    }
  }

  // ---- edge of the first chart: x = v*z, restriction f(v, t, 1) ----
  {
    std::array<Poly<NFElem>, 7> g;
    for (auto &[ex, cf] : X.f.terms) g[ex[1]] = g[ex[1]] + Poly<NFElem>::monomial(cf, ex[0]);
    ladder(g, "chart x = v*z", [&](const Ext &e, const NFElem &w) { line_A(e, NFElem(0), w); });
  }

  // ---- edge of the first chart: x = u*y, restriction f(u*t, t, 1) ----
  {
    std::array<Poly<NFElem>, 7> g;
    for (auto &[ex, cf] : X.f.terms)
      g[ex[0] + ex[1]] = g[ex[0] + ex[1]] + Poly<NFElem>::monomial(cf, ex[0]);
    ladder(g, "chart x = u*y", [&](const Ext &e, const NFElem &w) { line_A(e, w, NFElem(0)); });
  }

  // ---- second chart: y = u*z, restriction f(t, u, 1) ----
  {
    std::array<Poly<NFElem>, 7> g;
    for (auto &[ex, cf] : X.f.terms) g[ex[0]] = g[ex[0]] + Poly<NFElem>::monomial(cf, ex[1]);
    ladder(g, "chart y = u*z", [&](const Ext &e, const NFElem &w) {
      MultiPoly<NFElem> C = MultiPoly<NFElem>::variable(xyz, 1) -
                            MultiPoly<NFElem>::constant(xyz, w) * MultiPoly<NFElem>::variable(xyz, 2);
      std::array<Poly<NFElem>, 3> P{Poly<NFElem>(std::vector<NFElem>{NFElem(0), NFElem(1)}),
                                    Poly<NFElem>(w), Poly<NFElem>(NFElem(1))};
      deliver(e, C, P);
    });
  }

  // ---- the single remaining line z = 0 ----
  {
    MultiPoly<NFElem> C = MultiPoly<NFElem>::variable(xyz, 2);
    std::array<Poly<NFElem>, 3> P{Poly<NFElem>(std::vector<NFElem>{NFElem(0), NFElem(1)}),
                                  Poly<NFElem>(NFElem(1)), Poly<NFElem>()};
    deliver(Ext{F0, F0 ? NFElem::generator(F0) : NFElem(0)}, C, P);
  }

  return out;
}

} // namespace picard
