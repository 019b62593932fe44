#include <doctest.h>

#include "picard/errors.hpp"
#include "picard/grammar.hpp"
#include "picard/pointcount.hpp"
#include "picard/surface.hpp"

#include "oracle_diagonal.hpp"
#include "oracle_weighted.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

using namespace picard;

namespace {

MultiPoly<FqElem> sextic_mod_p(const std::string &s, const FqCtxPtr &C) {
  return reduce_sextic_mod_p(parse_polynomial(s, {"x", "y", "z"}, nullptr), C);
}

MultiPoly<FqElem> random_sextic(const FqCtxPtr &C, std::mt19937 &rng) {
  MultiPoly<FqElem> f({"x", "y", "z"});
  for (int a = 0; a <= 6; a++)
    for (int b = 0; a + b <= 6; b++) {
      uint32_t w = rng() % C->q;
      if (w != 0) f.terms[{a, b, 6 - a - b}] = FqElem(C, w);
    }
  return f;
}

MultiPoly<FqElem> random_smooth_sextic(const FqCtxPtr &C, std::mt19937 &rng) {
  for (;;) {
    auto f = random_sextic(C, rng);
    if (!f.terms.empty() && branch_smooth_mod_p(f)) return f;
  }
}

Poly<Rat> linear(long a) { return Poly<Rat>(std::vector<Rat>{Rat(-a), Rat(1)}); }

Poly<Rat> poly_pow(const Poly<Rat> &f, int e) {
  Poly<Rat> r(std::vector<Rat>{Rat(1)});
  for (int i = 0; i < e; i++) r = r * f;
  return r;
}

// counts #X(F_{p^n}) = 1 + t_n + p^{2n} from a monic degree-22 charpoly
std::vector<Int> counts_from_charpoly(const Poly<Rat> &P, long p, int N) {
  int d = P.degree();
  std::vector<Rat> c(d + 1); // P = T^d + c_1 T^{d-1} + ... + c_d
  for (int j = 1; j <= d; j++) c[j] = P.coeff(d - j);
  std::vector<Rat> t(N + 1);
  for (int k = 1; k <= N; k++) {
    Rat s = Rat(k) * c[k];
    for (int i = 1; i < k; i++) s += c[i] * t[k - i];
    t[k] = -s;
  }
  std::vector<Int> counts;
  Int q2(1), pp = Int(p) * Int(p);
  for (int n = 1; n <= N; n++) {
    q2 *= pp;
    REQUIRE(t[n].is_integer());
    counts.push_back(Int(1) + t[n].num() + q2);
  }
  return counts;
}

// T^d * P(p^2 / T), monicized: the root multiset alpha -> p^2/alpha
Poly<Rat> reciprocal_conjugate(const Poly<Rat> &P, long p) {
  int d = P.degree();
  std::vector<Rat> c(d + 1);
  Rat lead = P.coeff(0); // becomes the top coefficient
  for (int i = 0; i <= d; i++)
    c[i] = P.coeff(d - i) * pow(Rat(Int(p) * Int(p)), d - i) / lead;
  return Poly<Rat>(c);
}

} // namespace

TEST_CASE("point counts: frozen small cases") {
  auto C3 = FqCtx::create(3, 1);
  // w^2 = x^6: chi = 1 on the 9 points with x != 0, chi(0) = 0 on the rest
  CHECK(count_points(sextic_mod_p("x^6", C3), 1) == Int(22));
  // the square (x^3+y^3+z^3)^2: chi = +1 off the cubic, which over F_3 is the
  // line x+y+z = 0 with its 4 points, so 2*13 - 4
  CHECK(count_points(sextic_mod_p("x^6 + y^6 + z^6 + 2*x^3*y^3 + 2*x^3*z^3 + 2*y^3*z^3", C3),
                     1) == Int(22));
}

TEST_CASE("point counts match the weighted-projective brute force") {
  std::mt19937 rng(0xC0FFEE);
  // q = p^n for (p, n) pairs within brute-force reach
  const std::vector<std::pair<long, int>> qs = {{3, 1}, {3, 2}, {3, 3}, {3, 4}, {5, 1}, {5, 2}};
  for (auto [p, nmax] : qs) {
    auto C1 = FqCtx::create(p, 1);
    for (int rep = 0; rep < 2; rep++) {
      auto f = random_smooth_sextic(C1, rng);
      auto Cn = FqCtx::create(p, nmax);
      CHECK(count_points(f, nmax) == weighted_brute_count(f, Cn));
    }
  }
  // the Fermat sextic at its smallest good primes
  auto C5 = FqCtx::create(5, 1);
  auto C7 = FqCtx::create(7, 1);
  CHECK(count_points(sextic_mod_p("x^6 + y^6 + z^6", C5), 1) ==
        weighted_brute_count(sextic_mod_p("x^6 + y^6 + z^6", C5), FqCtx::create(5, 1)));
  CHECK(count_points(sextic_mod_p("x^6 + y^6 + z^6", C7), 1) ==
        weighted_brute_count(sextic_mod_p("x^6 + y^6 + z^6", C7), FqCtx::create(7, 1)));
  CHECK(count_points(sextic_mod_p("x^6 + y^6 + z^6", C7), 2) ==
        weighted_brute_count(sextic_mod_p("x^6 + y^6 + z^6", C7), FqCtx::create(7, 2)));
}

TEST_CASE("point count budget refusal names the largest feasible n") {
  auto C3 = FqCtx::create(3, 1);
  auto f3 = sextic_mod_p("x^6 + y^6 + z^6", C3);
  try {
    count_points(f3, 12);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded &e) {
    CHECK(std::string(e.what()).find("11") != std::string::npos);
  }
  auto C7 = FqCtx::create(7, 1);
  auto f7 = sextic_mod_p("x^6 + y^6 + z^6", C7);
  try {
    count_points(f7, 7);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded &e) {
    CHECK(std::string(e.what()).find("6") != std::string::npos);
  }
  CHECK_THROWS_AS(count_points(f3, 0), InputError);
  // constants-only polynomial has no field context to count over
  MultiPoly<FqElem> bare({"x", "y", "z"});
  bare.terms[{6, 0, 0}] = FqElem(1);
  CHECK_THROWS_AS(count_points(bare, 1), InputError);
}

TEST_CASE("frobenius reconstruction: Frobenius acting as p times the identity") {
  auto P = poly_pow(linear(3), 22); // (T-3)^22
  auto D = frobenius_candidates(counts_from_charpoly(P, 3, 11), 3);
  REQUIRE(D.candidates.size() == 1);
  CHECK(D.candidates[0].P == P);
  CHECK(D.candidates[0].sign == 1);
  CHECK(D.candidates[0].tate_count == 22);
  CHECK(D.bound == 22);
  CHECK(D.determined);
  CHECK(D.candidates[0].P.eval(Rat(3)) == Rat(0));
}

TEST_CASE("frobenius reconstruction: mixed eigenvalues and both sign paths") {
  // 21 eigenvalues 3 and one eigenvalue -3: the functional equation sign is -1
  auto P = poly_pow(linear(3), 21) * linear(-3);
  auto D = frobenius_candidates(counts_from_charpoly(P, 3, 11), 3);
  bool found = false;
  for (const auto &cand : D.candidates)
    if (cand.P == P) {
      found = true;
      CHECK(cand.sign == -1);
      CHECK(cand.tate_count == 22);
    }
  CHECK(found);
  CHECK(D.bound == 22);

  // a pair of complex eigenvalue conjugate pairs off the cyclotomic locus
  auto Q = Poly<Rat>(std::vector<Rat>{Rat(25), Rat(-1), Rat(1)}) *
           Poly<Rat>(std::vector<Rat>{Rat(25), Rat(-2), Rat(1)}) *
           poly_pow(linear(5), 18);
  auto D5 = frobenius_candidates(counts_from_charpoly(Q, 5, 11), 5);
  bool found5 = false;
  for (const auto &cand : D5.candidates)
    if (cand.P == Q) {
      found5 = true;
      CHECK(cand.tate_count == 18);
    }
  CHECK(found5);

  // with all 22 power sums the polynomial is pinned down completely
  auto Dfull = frobenius_candidates(counts_from_charpoly(Q, 5, 22), 5);
  REQUIRE(Dfull.candidates.size() == 1);
  CHECK(Dfull.candidates[0].P == Q);
}

TEST_CASE("frobenius reconstruction: failure and indeterminacy modes") {
  // t_1 = 1, t_2 = 0 forces e_2 = 1/2: not a characteristic polynomial
  std::vector<Int> bad = {Int(9 + 2), Int(81 + 1)};
  CHECK_THROWS_AS(frobenius_candidates(bad, 3), InconsistentCounts);

  // integral but unrealizable: power sums of 23 eigenvalues 3 truncated to 22
  std::vector<Int> off;
  Int q2(1);
  for (int n = 1; n <= 11; n++) {
    q2 *= Int(9);
    off.push_back(Int(1) + Int(23) * pow(Int(3), n) + q2);
  }
  CHECK_THROWS_AS(frobenius_candidates(off, 3), InconsistentCounts);

  // fewer than 11 counts cannot pin down the middle coefficients
  auto P = poly_pow(linear(3), 22);
  auto D = frobenius_candidates(counts_from_charpoly(P, 3, 8), 3);
  CHECK_FALSE(D.determined);
  CHECK(D.candidates.empty());
}

TEST_CASE("tate bound: cyclotomic root counting") {
  CHECK(tate_bound(poly_pow(linear(3), 22), 3) == 22);
  // root -3 = 3 * (-1) still counts
  auto P2 = Poly<Rat>(std::vector<Rat>{Rat(-9), Rat(0), Rat(1)}) * poly_pow(linear(3), 20);
  CHECK(tate_bound(P2, 3) == 22);
  // (T-3)^2 times a factor with no scaled-cyclotomic part
  std::vector<Rat> t20(21, Rat(0));
  t20[0] = Rat(-2);
  t20[20] = Rat(1);
  auto P3 = poly_pow(linear(3), 2) * Poly<Rat>(t20);
  CHECK(tate_bound(P3, 3) == 2);
  // complex pairs of modulus 5 that are not 5 * root of unity
  auto Q = Poly<Rat>(std::vector<Rat>{Rat(25), Rat(-1), Rat(1)}) *
           Poly<Rat>(std::vector<Rat>{Rat(25), Rat(-2), Rat(1)}) *
           poly_pow(linear(5), 18);
  CHECK(tate_bound(Q, 5) == 18);
}

TEST_CASE("tate bound is invariant under the reciprocal conjugate") {
  for (long p : {3L, 5L}) {
    auto A = linear(1) * poly_pow(linear(p), 21); // asymmetric root multiset
    auto B = reciprocal_conjugate(A, p);
    CHECK(B.degree() == 22);
    CHECK_FALSE(A == B);
    CHECK(tate_bound(A, p) == tate_bound(B, p));
  }
  auto Q = Poly<Rat>(std::vector<Rat>{Rat(25), Rat(-1), Rat(1)}) *
           Poly<Rat>(std::vector<Rat>{Rat(25), Rat(-2), Rat(1)}) *
           poly_pow(linear(5), 18);
  CHECK(tate_bound(reciprocal_conjugate(Q, 5), 5) == tate_bound(Q, 5));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == Poly<Rat>(std::vector<Rat>{Rat(-1), Rat(1)}));
  CHECK(cyclotomic_poly(2) == Poly<Rat>(std::vector<Rat>{Rat(1), Rat(1)}));
  CHECK(cyclotomic_poly(6) == Poly<Rat>(std::vector<Rat>{Rat(1), Rat(-1), Rat(1)}));
  CHECK(cyclotomic_poly(12) ==
        Poly<Rat>(std::vector<Rat>{Rat(1), Rat(0), Rat(-1), Rat(0), Rat(1)}));
  CHECK(cyclotomic_poly(42) ==
        Poly<Rat>(std::vector<Rat>{Rat(1), Rat(1), Rat(0), Rat(-1), Rat(-1), Rat(0),
                                   Rat(1), Rat(0), Rat(-1), Rat(-1), Rat(0), Rat(1),
                                   Rat(1)}));
}

TEST_CASE("parity refinement on synthetic square classes") {
  using Trip = std::tuple<long, int, Int>;
  // equal even bounds, differing classes: rank cannot be even
  CHECK(refine_parity({Trip{3, 4, Int(2)}, Trip{5, 4, Int(3)}}) == 3);
  CHECK(refine_parity({Trip{3, 4, Int(2)}, Trip{5, 4, Int(2)}}) == 4);
  // odd minimum: nothing to refine
  CHECK(refine_parity({Trip{3, 5, Int(2)}, Trip{5, 5, Int(3)}}) == 5);
  // an unusable class on one side blocks the refinement
  CHECK(refine_parity({Trip{3, 4, Int(0)}, Trip{5, 4, Int(3)}}) == 4);
  // the pair must both sit at the minimum
  CHECK(refine_parity({Trip{3, 4, Int(2)}, Trip{5, 6, Int(3)}}) == 4);
}

TEST_CASE("van Luijk driver: minimum over per-prime bounds, capped") {
  auto X = validate_surface(nullptr, parse_polynomial("x^6 + y^6 + z^6",
                                                      {"x", "y", "z"}, nullptr));
  // injected counts: p = 3 sees bound 22, p = 5 sees bound 18
  std::map<long, std::vector<Int>> known;
  known[3] = counts_from_charpoly(poly_pow(linear(3), 21) * linear(-3), 3, 11);
  auto Q = Poly<Rat>(std::vector<Rat>{Rat(25), Rat(-1), Rat(1)}) *
           Poly<Rat>(std::vector<Rat>{Rat(25), Rat(-2), Rat(1)}) *
           poly_pow(linear(5), 18);
  known[5] = counts_from_charpoly(Q, 5, 11);

  auto U1 = vanluijk_upper_bound(X, {3}, 11, &known);
  CHECK(U1.value == 20); // 22 capped
  CHECK(U1.provenance.find("capped") != std::string::npos);

  auto U2 = vanluijk_upper_bound(X, {3, 5}, 11, &known);
  CHECK(U2.value == 18);
  CHECK(U2.provenance.find("3: 22") != std::string::npos);
  CHECK(U2.provenance.find("5: 18") != std::string::npos);
  CHECK(U2.value <= U1.value); // more primes never loosen the bound
  CHECK(U2.primes.size() == 2);
  CHECK(U2.primes[0].counts == known[3]);

  // real counting, too few counts within budget: honest trivial cap
  auto U3 = vanluijk_upper_bound(X, {5}, 2);
  CHECK(U3.value == 20);
  CHECK(U3.provenance == "trivial cap");
  REQUIRE(U3.primes.size() == 1);
  CHECK_FALSE(U3.primes[0].determined);
  CHECK(U3.primes[0].counts.size() == 2);

  // number fields are outside the reduction machinery: trivial cap
  FieldPtr K = NumberField::create(Poly<Rat>({Rat(-2), Rat(0), Rat(1)}));
  auto nf = validate_surface(K, parse_polynomial("x^6 + y^6 + z^6 + alpha*z^6",
                                                 {"x", "y", "z"}, K));
  auto U4 = vanluijk_upper_bound(nf, {5, 7}, 3);
  CHECK(U4.value == 20);
  CHECK(U4.provenance == "trivial cap");
}

TEST_CASE("diagonal character-sum oracle matches enumeration and is reconstructed") {
  auto DF = testing::diagonal_sextic_frobenius(11);
  REQUIRE(DF.counts.size() == 11);

  // cross-validate the character sums against the counting kernel where
  // enumeration is cheap
  auto C7 = FqCtx::create(7, 1);
  auto f = sextic_mod_p("x^6 + y^6 + z^6", C7);
  for (int n = 1; n <= 4; n++) CHECK(DF.counts[n - 1] == count_points(f, n));

  // the characteristic polynomial is monic of degree 22, kills T = 7, and
  // is fixed by the functional equation
  REQUIRE(DF.char_poly.degree() == 22);
  CHECK(DF.char_poly.coeff(22) == Rat(1));
  CHECK(DF.char_poly.eval(Rat(7)) == Rat(0));
  CHECK(reciprocal_conjugate(DF.char_poly, 7) == DF.char_poly);
  for (int i = 0; i <= 22; i++) CHECK(DF.char_poly.coeff(i).is_integer());

  // the counts it predicts are the power sums of its own roots
  std::vector<Int> replay = counts_from_charpoly(DF.char_poly, 7, 11);
  CHECK(replay == DF.counts);

  // reconstruction from eleven counts recovers the true polynomial
  auto F = frobenius_candidates(DF.counts, 7);
  CHECK(F.determined);
  REQUIRE(!F.candidates.empty());
  bool found = false;
  for (const auto &cand : F.candidates)
    if (cand.P == DF.char_poly) found = true;
  CHECK(found);

  // ten counts are one short of determining the sign completion
  std::vector<Int> ten(DF.counts.begin(), DF.counts.begin() + 10);
  CHECK_FALSE(frobenius_candidates(ten, 7).determined);
}
