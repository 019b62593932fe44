#include <picard/surface.hpp>

#include <picard/groebner.hpp>
#include <picard/resultant.hpp>

#include <sstream>

namespace picard {

namespace {

// partials of the projective form restricted to the chart where coordinate
// `chart` equals 1; remaining two variables keep their names
std::vector<MultiPoly<NFElem>> chart_system(const MultiPoly<NFElem> &f, int chart) {
  std::vector<MultiPoly<NFElem>> sys;
  std::vector<MultiPoly<NFElem>> gens{f, f.partial(0), f.partial(1), f.partial(2)};
  for (auto &g : gens) {
    MultiPoly<NFElem> h = g.substitute_scalar(chart, NFElem(1));
    if (!h.is_zero()) sys.push_back(h);
  }
  return sys;
}

// drop the (now unused) chart variable so the polynomials live in two variables
MultiPoly<NFElem> drop_var(const MultiPoly<NFElem> &p, int chart) {
  std::vector<std::string> nv;
  for (size_t i = 0; i < p.vars.size(); i++)
    if (static_cast<int>(i) != chart) nv.push_back(p.vars[i]);
  MultiPoly<NFElem> r(nv);
  for (auto &[e, c] : p.terms) {
    Expo ne;
    for (size_t i = 0; i < e.size(); i++)
      if (static_cast<int>(i) != chart) ne.push_back(e[i]);
    r.add_term(ne, c);
  }
  return r;
}

struct ChartWitness {
  bool found = false;
  NFElem a, b; // chart coordinates
  FieldPtr field;
  NFElem alpha_image; // embedding of the surface field into `field`
};

// common zero of a proper 2-variable system, with field extensions as needed
ChartWitness witness_in_chart(const std::vector<MultiPoly<NFElem>> &sys, FieldPtr K,
                              const std::vector<NFElem> &b_candidates) {
  for (const NFElem &b : b_candidates) {
    // substitute the second variable, gcd in the first
    Poly<NFElem> g; // zero
    bool ok = true;
    for (auto &s : sys) {
      MultiPoly<NFElem> sub = s.substitute_scalar(1, b);
      Poly<NFElem> u;
      try {
        u = to_univariate(sub, 0);
      } catch (const InternalError &) {
        ok = false;
        break;
      }
      g = g.is_zero() ? u : gcd(g, u);
      if (!g.is_zero() && g.degree() == 0) break;
    }
    if (!ok || g.is_zero() || g.degree() == 0) continue;
    auto roots = factor_and_extend(g, K);
    if (roots.empty()) continue;
    const RootLocation &rl = roots[0];
    ChartWitness w;
    w.found = true;
    w.a = rl.root;
    w.b = embed_elem(b, rl.field, rl.alpha_image);
    w.field = rl.field;
    w.alpha_image = rl.alpha_image;
    return w;
  }
  return {};
}

// candidate values of the second chart variable at common zeros: roots of the
// gcd of pairwise resultants, plus small rationals for degenerate systems
std::vector<NFElem> witness_b_candidates(const std::vector<MultiPoly<NFElem>> &sys,
                                         FieldPtr K) {
  std::vector<NFElem> out;
  Poly<NFElem> acc; // gcd of eliminants
  for (size_t i = 0; i + 1 < sys.size(); i++) {
    MultiPoly<NFElem> r = resultant_eliminate(sys[i], sys[i + 1], 0);
    Poly<NFElem> u;
    try {
      u = to_univariate(r, 1);
    } catch (const InternalError &) {
      continue;
    }
    if (u.is_zero()) continue;
    acc = acc.is_zero() ? u : gcd(acc, u);
    if (acc.degree() == 0) break;
  }
  if (acc.degree() > 0) {
    try {
      for (auto &rl : factor_and_extend(acc, K))
        if (rl.field == K) out.push_back(rl.root); // same-field roots first
    } catch (const FieldDegreeCapExceeded &) {
      // fall through to rational probes
    }
  }
  for (long v = 0; v <= 6; v++) {
    out.push_back(NFElem::from_rat(K, Rat(v)));
    if (v > 0) out.push_back(NFElem::from_rat(K, Rat(-v)));
  }
  return out;
}

} // namespace

SmoothnessReport branch_smoothness(const MultiPoly<NFElem> &f, FieldPtr K) {
  SmoothnessReport rep;
  // Fast path: one prime p >= 5 with f mod p smooth already certifies
  // smoothness in characteristic zero (the partials then have no common
  // projective zero mod p, so their resultant is nonzero mod p, hence
  // nonzero over the rationals).  Singular and unlucky reductions are
  // inconclusive and fall through to the exact computation below.
  bool rational = std::all_of(f.terms.begin(), f.terms.end(),
                              [](const auto &t) { return t.second.is_rational(); });
  if (rational) {
    for (long p : {5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L}) {
      bool ok = true;
      for (auto &[e, c] : f.terms)
        if (mod_floor(Int(c.rat_value().den()), Int(p)) == 0) { ok = false; break; }
      if (!ok) continue;
      try {
        if (branch_smooth_mod_p(reduce_sextic_mod_p(f, FqCtx::create(p, 1)))) {
          rep.smooth = true;
          return rep;
        }
      } catch (const BudgetExceeded &) {
        // treat an expensive reduction as just another inconclusive prime
      }
    }
  }
  MonomialOrder ord{OrderKind::DegRevLex, 0};
  for (int chart = 0; chart < 3; chart++) {
    std::vector<MultiPoly<NFElem>> sys;
    for (auto &g : chart_system(f, chart)) sys.push_back(drop_var(g, chart));
    if (sys.empty()) {
      // every generator vanishes identically on the chart: wildly singular
      sys.push_back(MultiPoly<NFElem>({f.vars[(chart + 1) % 3], f.vars[(chart + 2) % 3]}));
    }
    auto gb = groebner_basis<NFElem>(sys, ord, 500000);
    if (!gb.completed)
      throw BudgetExceeded("smoothness certificate (Groebner) on chart " +
                           f.vars[chart] + " = 1");
    if (contains_one(gb)) continue; // chart clean
    rep.smooth = false;
    // try to produce a witness point
    ChartWitness w;
    if (std::none_of(sys.begin(), sys.end(),
                     [](const MultiPoly<NFElem> &s) { return s.is_zero(); })) {
      try {
        w = witness_in_chart(sys, K, witness_b_candidates(sys, K));
      } catch (const FieldDegreeCapExceeded &) {
        w = {};
      }
    }
    if (w.found) {
      rep.have_witness = true;
      rep.witness_field = w.field;
      NFElem one = NFElem(1);
      if (w.field) one = NFElem::from_rat(w.field, Rat(1));
      int j = 0;
      for (int i = 0; i < 3; i++) {
        if (i == chart)
          rep.witness[i] = one;
        else
          rep.witness[i] = (j++ == 0) ? w.a : w.b;
      }
    }
    return rep;
  }
  rep.smooth = true;
  return rep;
}

bool branch_smooth_mod_p(const MultiPoly<FqElem> &f) {
  FqCtxPtr C;
  for (auto &[e, c] : f.terms)
    if (c.C) { C = c.C; break; }
  if (!C) throw InternalError("branch_smooth_mod_p: no field context");
  MonomialOrder ord{OrderKind::DegRevLex, 0};
  for (int chart = 0; chart < 3; chart++) {
    std::vector<MultiPoly<FqElem>> sys;
    std::vector<MultiPoly<FqElem>> gens{f, f.partial(0), f.partial(1), f.partial(2)};
    for (auto &g : gens) {
      MultiPoly<FqElem> h = g.substitute_scalar(chart, FqElem(C, C->scalar(1)));
      if (!h.is_zero()) sys.push_back(h);
    }
    if (sys.empty()) return false;
    auto gb = groebner_basis<FqElem>(sys, ord, 500000);
    if (!gb.completed)
      throw BudgetExceeded("smoothness certificate mod p on chart " + f.vars[chart] + " = 1");
    if (!contains_one(gb)) return false;
  }
  return true;
}

DoubleSexticSurface validate_surface(FieldPtr field, const MultiPoly<NFElem> &f,
                                     std::vector<SurfaceAutomorphism> autos,
                                     std::optional<double> time_budget) {
  if (f.vars != std::vector<std::string>{"x", "y", "z"})
    throw InputError("surface polynomial must use exactly the variables x, y, z");
  if (f.is_zero()) throw NotHomogeneous("zero polynomial");
  if (!f.is_homogeneous() || f.total_degree() != 6)
    throw NotHomogeneous("sextic must be homogeneous of degree 6");
  for (auto &[e, c] : f.terms) {
    if (c.F && c.F != field)
      throw InputError("coefficient field does not match the declared field");
  }
  auto rep = branch_smoothness(f, field);
  if (!rep.smooth) {
    if (rep.have_witness) {
      std::vector<std::string> w;
      std::ostringstream all;
      all << "(";
      for (int i = 0; i < 3; i++) {
        std::ostringstream os;
        os << rep.witness[i];
        w.push_back(os.str());
        all << (i ? " : " : "") << os.str();
      }
      all << ")";
      std::string wf;
      if (rep.witness_field) {
        std::ostringstream os;
        os << rep.witness_field->minpoly;
        wf = os.str();
      }
      throw SingularBranchCurve("branch sextic is singular at " + all.str(), w, wf);
    }
    throw SingularBranchCurve("branch sextic is singular (no witness within field cap)");
  }
  // automorphism law: f(M v) = lambda^2 f(v), sign in {+1, -1}, det M != 0
  for (size_t k = 0; k < autos.size(); k++) {
    const auto &A = autos[k];
    std::string which = "automorphism " + std::to_string(k + 1);
    if (A.M.rows() != 3 || A.M.cols() != 3) throw BadAutomorphism(which + ": matrix not 3x3");
    if (A.sign != 1 && A.sign != -1) throw BadAutomorphism(which + ": sign must be +1 or -1");
    if (A.lambda.is_zero()) throw BadAutomorphism(which + ": lambda must be nonzero");
    NFElem det = A.M(0, 0) * (A.M(1, 1) * A.M(2, 2) - A.M(1, 2) * A.M(2, 1)) -
                 A.M(0, 1) * (A.M(1, 0) * A.M(2, 2) - A.M(1, 2) * A.M(2, 0)) +
                 A.M(0, 2) * (A.M(1, 0) * A.M(2, 1) - A.M(1, 1) * A.M(2, 0));
    if (det.is_zero()) throw BadAutomorphism(which + ": matrix is singular");
    std::vector<MultiPoly<NFElem>> images;
    for (int i = 0; i < 3; i++) {
      MultiPoly<NFElem> img(f.vars);
      for (int j = 0; j < 3; j++) {
        Expo e(3, 0);
        e[j] = 1;
        img.add_term(e, A.M(i, j));
      }
      images.push_back(img);
    }
    MultiPoly<NFElem> fM = f.substitute(images);
    if (!(fM == (A.lambda * A.lambda) * f))
      throw BadAutomorphism(which + ": f(M x) != lambda^2 f(x)");
  }
  DoubleSexticSurface X;
  X.field = std::move(field);
  X.f = f;
  X.autos = std::move(autos);
  X.time_budget_secs = time_budget;
  return X;
}

MultiPoly<NFElem> quartic_node_to_sextic(const MultiPoly<NFElem> &f2,
                                         const MultiPoly<NFElem> &f3,
                                         const MultiPoly<NFElem> &f4) {
  auto check = [](const MultiPoly<NFElem> &g, int d, const char *name) {
    if (g.is_zero()) return; // zero form is allowed at any degree
    if (!g.is_homogeneous() || g.total_degree() != d)
      throw InputError(std::string(name) + " must be homogeneous of degree " +
                       std::to_string(d));
  };
  check(f2, 2, "f2");
  check(f3, 3, "f3");
  check(f4, 4, "f4");
  MultiPoly<NFElem> four = MultiPoly<NFElem>::constant(f3.vars, NFElem(4));
  return f3 * f3 - four * f2 * f4;
}

MultiPoly<FqElem> reduce_sextic_mod_p(const MultiPoly<NFElem> &f, const FqCtxPtr &C) {
  MultiPoly<FqElem> r(f.vars);
  r.grading = f.grading;
  for (auto &[e, c] : f.terms) {
    if (!c.is_rational())
      throw UnsupportedField("reduction mod p needs rational coefficients");
    r.add_term(e, FqElem(C, C->from_rat(c.rat_value())));
  }
  return r;
}

std::vector<long> good_primes(const DoubleSexticSurface &X, long lo, long hi) {
  if (X.field) throw UnsupportedField("good primes are only computed over Q");
  std::vector<long> out;
  for (long p = std::max<long>(3, lo); p <= hi; p++) {
    if (mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 40) == 0) continue;
    bool ok = true;
    for (auto &[e, c] : X.f.terms)
      if (mod_floor(Int(c.rat_value().den()), Int(p)) == 0) { ok = false; break; }
    if (!ok) continue;
    FqCtxPtr C = FqCtx::create(p, 1);
    if (branch_smooth_mod_p(reduce_sextic_mod_p(X.f, C))) out.push_back(p);
  }
  return out;
}

} // namespace picard
