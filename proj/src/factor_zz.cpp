#include <picard/factor.hpp>

#include <algorithm>
#include <random>

namespace picard {

// ---------------------------------------------------------------------------
// Cantor-Zassenhaus over F_q
// ---------------------------------------------------------------------------

namespace {

// squarefree decomposition in characteristic p (Yun does not apply)
void sqfree_fq(const Poly<FqElem> &f, int mult,
               std::vector<std::pair<Poly<FqElem>, int>> &out) {
  if (f.degree() <= 0) return;
  FqCtxPtr C = f.lc().C;
  long p = C->p;
  Poly<FqElem> fp = f.derivative();
  if (fp.is_zero()) {
    // f = u(x^p); take p-th roots of coefficients (Frobenius inverse)
    std::vector<FqElem> c;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) {
      FqElem a = f.coeff(i).promoted(C);
      uint32_t v = a.v;
      for (int j = 0; j < C->n - 1; j++) v = C->frobenius(v);
      c.push_back(FqElem(C, v));
    }
    sqfree_fq(Poly<FqElem>(c), mult * static_cast<int>(p), out);
    return;
  }
  Poly<FqElem> c = gcd(f, fp);
  Poly<FqElem> w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    Poly<FqElem> y = gcd(w, c);
    Poly<FqElem> z = w / y;
    if (z.degree() > 0) out.push_back({z, mult * i});
    w = y;
    c = c / y;
    i++;
  }
  if (c.degree() > 0) sqfree_fq(c, mult, out); // c = u(x^p), recurse
}

struct Edf {
  FqCtxPtr C;
  std::mt19937_64 rng{0x517cc1b727220a95ULL};

  Poly<FqElem> random_poly(int deg) {
    std::vector<FqElem> c(deg + 1);
    for (int i = 0; i <= deg; i++)
      c[i] = FqElem(C, static_cast<uint32_t>(rng() % C->q));
    return Poly<FqElem>(c);
  }

  // f monic squarefree, all irreducible factors of degree d
  void split(const Poly<FqElem> &f, int d, std::vector<Poly<FqElem>> &out) {
    if (f.degree() == d) {
      out.push_back(f);
      return;
    }
    Int e = (pow(Int(static_cast<long>(C->q)), static_cast<unsigned long>(d)) - 1) / 2;
    while (true) {
      Poly<FqElem> r = random_poly(f.degree() - 1);
      if (r.degree() < 1) continue;
      Poly<FqElem> g = gcd(r, f);
      if (g.degree() == 0) {
        Poly<FqElem> s = pow_mod(r, e, f);
        g = gcd(s - Poly<FqElem>(FqElem(C, C->scalar(1))), f);
      }
      if (g.degree() > 0 && g.degree() < f.degree()) {
        split(g, d, out);
        split(f / g, d, out);
        return;
      }
    }
  }
};

bool poly_less_fq(const Poly<FqElem> &a, const Poly<FqElem> &b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; i--) {
    const FqElem &x = a.coeff(i), &y = b.coeff(i);
    if (x < y) return true;
    if (y < x) return false;
  }
  return false;
}

} // namespace

std::vector<std::pair<Poly<FqElem>, int>> factor_mod_p(const Poly<FqElem> &f) {
  std::vector<std::pair<Poly<FqElem>, int>> out;
  if (f.degree() <= 0) return out;
  FqCtxPtr C = f.lc().C;
  if (!C) throw InternalError("factor_mod_p: no field context");
  Poly<FqElem> fm = make_monic(f);
  std::vector<std::pair<Poly<FqElem>, int>> parts;
  sqfree_fq(fm, 1, parts);
  Edf edf{C};
  Poly<FqElem> x(std::vector<FqElem>{FqElem(C, C->scalar(0)), FqElem(C, C->scalar(1))});
  for (auto &[g0, mult] : parts) {
    // distinct-degree, then equal-degree on each bucket
    Poly<FqElem> g = g0;
    Poly<FqElem> h = pow_mod(x, Int(static_cast<long>(C->q)), g);
    for (int d = 1; 2 * d <= g.degree(); d++) {
      Poly<FqElem> gd = gcd(h - x, g);
      if (gd.degree() > 0) {
        std::vector<Poly<FqElem>> irr;
        edf.split(gd, d, irr);
        for (auto &u : irr) out.push_back({u, mult});
        g = g / gd;
        if (g.degree() == 0) break;
        h = h % g;
      }
      if (2 * (d + 1) <= g.degree())
        h = pow_mod(h, Int(static_cast<long>(C->q)), g);
    }
    if (g.degree() > 0) out.push_back({g, mult});
  }
  std::sort(out.begin(), out.end(),
            [](const auto &a, const auto &b) { return poly_less_fq(a.first, b.first); });
  return out;
}

// ---------------------------------------------------------------------------
// Zassenhaus over Z
// ---------------------------------------------------------------------------

namespace {

using ZPoly = std::vector<Int>; // coeffs in [0, M)

long nextprime_l(long p) {
  mpz_class z(p), r;
  mpz_nextprime(r.get_mpz_t(), z.get_mpz_t());
  return r.get_si();
}

void z_trim(ZPoly &a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly z_mul(const ZPoly &a, const ZPoly &b, const Int &M) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); i++)
    for (size_t j = 0; j < b.size(); j++) r[i + j] += a[i] * b[j];
  for (auto &c : r) c = mod_floor(c, M);
  z_trim(r);
  return r;
}

ZPoly z_add(ZPoly a, const ZPoly &b, const Int &M) {
  if (a.size() < b.size()) a.resize(b.size(), Int(0));
  for (size_t i = 0; i < b.size(); i++) a[i] = mod_floor(a[i] + b[i], M);
  z_trim(a);
  return a;
}

ZPoly z_sub(ZPoly a, const ZPoly &b, const Int &M) {
  if (a.size() < b.size()) a.resize(b.size(), Int(0));
  for (size_t i = 0; i < b.size(); i++) a[i] = mod_floor(a[i] - b[i], M);
  z_trim(a);
  return a;
}

ZPoly z_scale(ZPoly a, const Int &c, const Int &M) {
  for (auto &x : a) x = mod_floor(x * c, M);
  z_trim(a);
  return a;
}

// b monic
void z_divrem(const ZPoly &a, const ZPoly &b, const Int &M, ZPoly &q, ZPoly &r) {
  q.clear();
  r = a;
  if (b.empty()) throw InternalError("z_divrem: zero divisor");
  int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(r.size()) - 1 >= db) q.assign(r.size() - db, Int(0));
  while (static_cast<int>(r.size()) - 1 >= db) {
    int dr = static_cast<int>(r.size()) - 1;
    Int c = r.back();
    q[dr - db] = c;
    for (int i = 0; i <= db; i++) r[dr - db + i] = mod_floor(r[dr - db + i] - c * b[i], M);
    z_trim(r);
  }
}

ZPoly z_reduce(const ZPoly &a, const Int &M) {
  ZPoly r = a;
  for (auto &c : r) c = mod_floor(c, M);
  z_trim(r);
  return r;
}

// symmetric representative in (-M/2, M/2]
ZPoly z_symmetric(const ZPoly &a, const Int &M) {
  ZPoly r = a;
  for (auto &c : r) {
    c = mod_floor(c, M);
    if (2 * c > M) c -= M;
  }
  z_trim(r);
  return r;
}

// One quadratic Hensel step: from data valid mod m to data valid mod m^2.
struct HenselPair {
  ZPoly u, v, s, t;
};

void hensel_step(const ZPoly &g, HenselPair &h, const Int &m) {
  Int m2 = m * m;
  ZPoly e = z_sub(z_reduce(g, m2), z_mul(h.u, h.v, m2), m2);
  ZPoly q, r;
  z_divrem(z_mul(h.s, e, m2), h.v, m2, q, r);
  ZPoly u2 = z_add(z_add(h.u, z_mul(h.t, e, m2), m2), z_mul(q, h.u, m2), m2);
  ZPoly v2 = z_add(h.v, r, m2);
  ZPoly b = z_sub(z_add(z_mul(h.s, u2, m2), z_mul(h.t, v2, m2), m2), ZPoly{Int(1)}, m2);
  ZPoly c, d;
  z_divrem(z_mul(h.s, b, m2), v2, m2, c, d);
  ZPoly s2 = z_sub(h.s, d, m2);
  ZPoly t2 = z_sub(z_sub(h.t, z_mul(h.t, b, m2), m2), z_mul(c, u2, m2), m2);
  h = {u2, v2, s2, t2};
}

FqCtxPtr g_fp; // prime-field context of the active Zassenhaus run

ZPoly fq_to_z(const Poly<FqElem> &a) {
  ZPoly r;
  for (int i = 0; i <= a.degree(); i++) r.push_back(Int(static_cast<long>(a.coeff(i).promoted(g_fp).v)));
  z_trim(r);
  return r;
}

Poly<FqElem> z_to_fq(const ZPoly &a) {
  std::vector<FqElem> c;
  for (auto &x : a) c.push_back(FqElem(g_fp, g_fp->from_int(x)));
  return Poly<FqElem>(c);
}

// Lift the factorization g = prod facs (mod p) to mod pK >= target, pairwise.
// g is monic with integer coefficients reduced mod pK.
std::vector<ZPoly> lift_tree(const ZPoly &g, const std::vector<Poly<FqElem>> &facs,
                             const Int &p, const Int &pK) {
  if (facs.size() == 1) return {z_reduce(g, pK)};
  size_t half = facs.size() / 2;
  Poly<FqElem> u0p = z_to_fq(ZPoly{Int(1)});
  Poly<FqElem> v0p = u0p;
  for (size_t i = 0; i < half; i++) u0p = u0p * facs[i];
  for (size_t i = half; i < facs.size(); i++) v0p = v0p * facs[i];
  Poly<FqElem> su, sv;
  Poly<FqElem> one = extended_gcd(u0p, v0p, su, sv);
  if (one.degree() != 0)
    throw InternalError("hensel: modular factors not coprime");
  HenselPair h{fq_to_z(u0p), fq_to_z(v0p), fq_to_z(su), fq_to_z(sv)};
  Int m = p;
  while (m < pK) {
    hensel_step(g, h, m);
    m = m * m;
  }
  ZPoly u = z_reduce(h.u, pK), v = z_reduce(h.v, pK);
  if (z_mul(u, v, pK) != z_reduce(g, pK))
    throw InternalError("hensel: lifted product mismatch");
  std::vector<Poly<FqElem>> left(facs.begin(), facs.begin() + half);
  std::vector<Poly<FqElem>> right(facs.begin() + half, facs.end());
  auto lf = lift_tree(u, left, p, pK);
  auto rf = lift_tree(v, right, p, pK);
  lf.insert(lf.end(), rf.begin(), rf.end());
  return lf;
}

Poly<Rat> z_to_rat(const ZPoly &a) {
  std::vector<Rat> c;
  for (auto &x : a) c.push_back(Rat(x));
  return Poly<Rat>(c);
}

ZPoly rat_to_z(const Poly<Rat> &a) {
  ZPoly r;
  for (int i = 0; i <= a.degree(); i++) {
    const Rat &c = a.coeff(i);
    if (c.den() != 1) throw InternalError("rat_to_z: non-integer coefficient");
    r.push_back(c.num());
  }
  z_trim(r);
  return r;
}

// monic squarefree g in Z[x], degree >= 1: monic irreducible factors in Z[x]
std::vector<Poly<Rat>> zassenhaus_monic(const Poly<Rat> &g) {
  if (g.degree() == 1) return {g};
  ZPoly gz = rat_to_z(g);
  // prime selection: g must stay squarefree mod p; fewest modular factors wins
  long best_p = 0;
  FqCtxPtr best_C;
  std::vector<Poly<FqElem>> best_facs;
  int tried = 0;
  for (long p = 3; tried < 4; p = nextprime_l(p)) {
    FqCtxPtr C = FqCtx::create(p, 1);
    std::vector<FqElem> c;
    for (auto &x : gz) c.push_back(FqElem(C, C->from_int(x)));
    Poly<FqElem> gp(c);
    if (gp.degree() != g.degree()) continue; // cannot happen for monic g
    if (gcd(gp, gp.derivative()).degree() != 0) continue;
    auto facs = factor_mod_p(gp);
    tried++;
    if (best_p == 0 || facs.size() < best_facs.size()) {
      best_p = p;
      best_C = C;
      best_facs.clear();
      for (auto &[f, m] : facs) best_facs.push_back(f);
    }
    if (best_facs.size() == 1) break;
  }
  if (best_facs.size() == 1) return {g};

  // Landau-Mignotte bound for monic divisors, with slack for products of
  // factor subsets of the symmetric lifts
  Int norm2 = 0;
  for (auto &c : gz) norm2 += c * c;
  Int B = (isqrt(norm2) + 1) * pow(Int(2), static_cast<unsigned long>(g.degree() + 1));
  Int p(best_p), pK = p;
  while (pK <= 2 * B) pK = pK * p;

  g_fp = best_C;
  auto lifted = lift_tree(z_reduce(gz, pK), best_facs, p, pK);
  g_fp.reset();

  // subset recombination
  std::vector<Poly<Rat>> out;
  Poly<Rat> rem = g;
  std::vector<ZPoly> pool = lifted;
  bool progress = true;
  while (progress && !pool.empty()) {
    progress = false;
    size_t m = pool.size();
    for (size_t k = 1; !progress && 2 * k <= m; k++) {
      std::vector<size_t> idx(k);
      for (size_t i = 0; i < k; i++) idx[i] = i;
      while (true) {
        ZPoly prod{Int(1)};
        for (size_t i : idx) prod = z_mul(prod, pool[i], pK);
        Poly<Rat> cand = z_to_rat(z_symmetric(prod, pK));
        if (cand.degree() > 0 && divides_poly(cand, rem)) {
          out.push_back(cand);
          rem = rem / cand;
          std::vector<ZPoly> np;
          for (size_t i = 0; i < pool.size(); i++)
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) np.push_back(pool[i]);
          pool = np;
          progress = true;
          break;
        }
        // next k-combination
        int pos = static_cast<int>(k) - 1;
        while (pos >= 0 && idx[pos] == m - k + pos) pos--;
        if (pos < 0) break;
        idx[pos]++;
        for (size_t i = pos + 1; i < k; i++) idx[i] = idx[i - 1] + 1;
      }
    }
  }
  if (rem.degree() > 0) out.push_back(rem);
  return out;
}

} // namespace

RatFactorization factor_over_q(const Poly<Rat> &f) {
  RatFactorization out;
  out.content = f.is_zero() ? Rat(0) : f.lc();
  if (f.degree() <= 0) return out;
  for (auto &[part, mult] : squarefree_decomposition(f)) {
    // scale the monic rational part to a monic integer polynomial:
    // with L = lcm of denominators (after clearing, lc L), the substitution
    // x -> x/L followed by L^(d-1) scaling gives hat(g) monic in Z[x]
    int d = part.degree();
    Int L(1);
    for (int i = 0; i <= d; i++) L = lcm(L, Int(part.coeff(i).den()));
    std::vector<Rat> hc(d + 1);
    for (int i = 0; i <= d; i++)
      hc[i] = part.coeff(i) * Rat(pow(L, static_cast<unsigned long>(d - i)));
    Poly<Rat> hat(hc); // monic, integer coefficients
    for (auto &h : zassenhaus_monic(hat)) {
      // undo the substitution: root beta of hat <-> beta/L of part
      int dh = h.degree();
      std::vector<Rat> fc(dh + 1);
      for (int i = 0; i <= dh; i++)
        fc[i] = h.coeff(i) / Rat(pow(L, static_cast<unsigned long>(dh - i)));
      out.factors.push_back({Poly<Rat>(fc), mult});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto &a, const auto &b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    for (int i = a.first.degree(); i >= 0; i--) {
      if (a.first.coeff(i) != b.first.coeff(i)) return a.first.coeff(i) < b.first.coeff(i);
    }
    return a.second < b.second;
  });
  return out;
}

bool is_irreducible_q(const Poly<Rat> &f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  auto fac = factor_over_q(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

namespace {

Int inv_mod(const Int &a, const Int &p) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.v.get_mpz_t(), p.v.get_mpz_t()) == 0)
    throw InternalError("inv_mod: element not invertible");
  return Int(r);
}

ZPoly clear_denominators(const Poly<Rat> &a) {
  Int l(1);
  for (int i = 0; i <= a.degree(); i++) l = lcm(l, a.coeff(i).den());
  ZPoly r;
  for (int i = 0; i <= a.degree(); i++) r.push_back((a.coeff(i) * Rat(l)).num());
  z_trim(r);
  return r;
}

ZPoly z_gcd_mod_p(const ZPoly &A, const ZPoly &B, const Int &p) {
  ZPoly a = z_reduce(A, p), b = z_reduce(B, p);
  while (!b.empty()) {
    ZPoly bm = z_scale(b, inv_mod(b.back(), p), p);
    ZPoly q, r;
    z_divrem(a, bm, p, q, r);
    a = std::move(bm);
    b = std::move(r);
  }
  if (!a.empty()) a = z_scale(a, inv_mod(a.back(), p), p);
  return a;
}

} // namespace

Poly<Rat> gcd_rational(const Poly<Rat> &a, const Poly<Rat> &b) {
  if (a.is_zero() && b.is_zero()) return Poly<Rat>();
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (std::min(a.degree(), b.degree()) <= 8) return gcd(a, b);

  ZPoly A = clear_denominators(a), B = clear_denominators(b);
  Int la = A.back(), lb = B.back();
  Int lcg = gcd(la, lb); // lc of the integer gcd divides this
  int best = -1;
  Int M(1);
  ZPoly acc;
  for (long p = 1000003, used = 0; used < 200; p = nextprime_l(p)) {
    Int pi(p);
    if (divides(pi, la) || divides(pi, lb)) continue;
    used++;
    ZPoly gp = z_gcd_mod_p(A, B, pi);
    int d = static_cast<int>(gp.size()) - 1;
    if (d == 0) return Poly<Rat>(Rat(1));
    if (best >= 0 && d > best) continue; // unlucky prime: gcd too large mod p
    gp = z_scale(gp, mod_floor(lcg, pi), pi);
    if (best < 0 || d < best) {
      best = d;
      M = pi;
      acc = gp;
    } else {
      Int minv = inv_mod(mod_floor(M, pi), pi);
      ZPoly na(std::max(acc.size(), gp.size()), Int(0));
      for (size_t i = 0; i < na.size(); i++) {
        Int r1 = i < acc.size() ? acc[i] : Int(0);
        Int r2 = i < gp.size() ? gp[i] : Int(0);
        na[i] = r1 + M * mod_floor((r2 - r1) * minv, pi);
      }
      M = M * pi;
      acc = std::move(na);
      z_trim(acc);
    }
    ZPoly cand = z_symmetric(acc, M);
    if (static_cast<int>(cand.size()) - 1 != best) continue;
    Int content(0);
    for (auto &c : cand) content = gcd(content, c);
    std::vector<Rat> cc;
    for (auto &c : cand) cc.push_back(Rat(c, content));
    Poly<Rat> g = make_monic(Poly<Rat>(cc));
    if (!divrem(a, g).second.is_zero()) continue;
    if (!divrem(b, g).second.is_zero()) continue;
    return g;
  }
  return gcd(a, b); // modular route failed to stabilize; certified fallback
}

Poly<Rat> squarefree_part_rational(const Poly<Rat> &f) {
  if (f.degree() <= 0) return Poly<Rat>(Rat(1));
  Poly<Rat> g = gcd_rational(f, f.derivative());
  auto [q, r] = divrem(f, g);
  if (!r.is_zero())
    throw InternalError("squarefree_part_rational: non-exact division");
  return make_monic(q);
}

} // namespace picard
