#include <doctest.h>

#include "picard/divisors.hpp"
#include "picard/errors.hpp"
#include "picard/grammar.hpp"
#include "picard/surface.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

using namespace picard;

namespace {

const std::vector<std::string> kXYZ = {"x", "y", "z"};

MultiPoly<NFElem> pxyz(const std::string &s, const FieldPtr &F = nullptr) {
  return parse_polynomial(s, kXYZ, F);
}

Poly<NFElem> tpoly(std::vector<int> coeffs) { // coeffs[i] * t^i
  Poly<NFElem> p;
  for (size_t i = 0; i < coeffs.size(); i++)
    p = p + Poly<NFElem>::monomial(NFElem(coeffs[i]), static_cast<int>(i));
  return p;
}

// exact check of f(X_t, Y_t, Z_t) = c * s(t)^2 for a geometric record
bool lift_identity_holds(const DivisorRecord &r, const MultiPoly<NFElem> &f) {
  MultiPoly<NFElem> fK = embed_multipoly(f, r.field, r.surface_gen_image);
  Poly<NFElem> g = fK.substitute_univariate({r.param[0], r.param[1], r.param[2]});
  Poly<NFElem> rhs = r.lift_branch * r.lift_branch;
  std::vector<NFElem> sc;
  for (int i = 0; i <= rhs.degree(); i++) sc.push_back(r.lift_scale * rhs.coeff(i));
  return g == Poly<NFElem>(sc);
}

std::set<std::string> curve_keys(const std::vector<DivisorRecord> &rs) {
  std::set<std::string> k;
  for (auto &r : rs) k.insert(normalized_curve_key(r.plane_curve));
  return k;
}

MatNF mat3(std::initializer_list<int> v) {
  MatNF M(3, 3);
  auto it = v.begin();
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++) M(i, j) = NFElem(*it++);
  return M;
}

} // namespace

TEST_CASE("hyperplane record has the fixed shape") {
  DivisorRecord h = hyperplane_record();
  CHECK(h.kind == DivisorKind::Hyperplane);
  CHECK(h.degree == 1);
  CHECK(h.label == "H");
  CHECK(h.field == nullptr);
}

TEST_CASE("even tangency detection along parametrized curves") {
  // (y^3 + z^3)^2 + x^6 restricted to the line x = 0 is the square (t^3+1)^2
  auto f = pxyz("y^6 + 2*y^3*z^3 + z^6 + x^6");
  std::array<Poly<NFElem>, 3> line0 = {tpoly({0}), tpoly({0, 1}), tpoly({1})};
  auto et = check_even_tangency(line0, f);
  REQUIRE(et.has_value());
  CHECK(et->s.degree() == 3);
  // c * s^2 reproduces the restriction exactly
  Poly<NFElem> g = f.substitute_univariate({line0[0], line0[1], line0[2]});
  Poly<NFElem> s2 = et->s * et->s;
  std::vector<NFElem> cs2;
  for (int i = 0; i <= s2.degree(); i++) cs2.push_back(et->c * s2.coeff(i));
  CHECK(g == Poly<NFElem>(cs2));

  // a line that meets the Fermat sextic transversally does not split
  auto fermat = pxyz("x^6 + y^6 + z^6");
  CHECK(!check_even_tangency(line0, fermat).has_value());

  // constant maps are rejected
  std::array<Poly<NFElem>, 3> cst = {tpoly({1}), tpoly({1}), tpoly({1})};
  CHECK_THROWS_AS((void)check_even_tangency(cst, f), InputError);

  // image inside the branch sextic: restriction identically zero
  auto reducible = pxyz("x^6 + x*y^5 + x*z^5");
  CHECK_THROWS_AS((void)check_even_tangency(line0, reducible), InputError);

  // injective conic parametrization passes the birationality screen
  std::array<Poly<NFElem>, 3> conic = {tpoly({0, -1}), tpoly({0, 0, -1}), tpoly({1})};
  CHECK(!check_even_tangency(conic, fermat).has_value());

  // a 2:1 cover of a conic is refused rather than misread
  std::array<Poly<NFElem>, 3> doubled = {tpoly({0, 0, 1}), tpoly({0, 0, 0, 0, 1}), tpoly({1})};
  CHECK_THROWS_AS((void)check_even_tangency(doubled, fermat), InputError);
}

TEST_CASE("tritangent line search on the Fermat sextic") {
  auto X = validate_surface(nullptr, pxyz("x^6 + y^6 + z^6"));
  auto R = find_tritangent_lines(X);
  CHECK(R.completed);
  // one representative per conjugacy class and sign: the three coordinate
  // pencils x = a*z, x = a*y, y = a*z each contribute two classes
  CHECK(R.found.size() == 12);
  std::set<std::string> labels;
  for (const auto &r : R.found) {
    CHECK(r.kind == DivisorKind::SplitCurveComponent);
    CHECK(r.degree == 1);
    CHECK(lift_identity_holds(r, X.f));
    labels.insert(r.label);
  }
  CHECK(labels.size() == 12);
  // both lift signs occur for every curve
  std::map<std::string, std::set<int>> signs;
  for (const auto &r : R.found)
    signs[normalized_curve_key(r.plane_curve) + "@" + (r.field ? "1" : "0")].insert(r.lift_sign);
  for (auto &[k, s] : signs) CHECK(s == std::set<int>{-1, +1});
}

TEST_CASE("tritangent line search on a surface with planted rational lines") {
  // (y^3 + 2z^3)^2 + x*y^5 + x^6: the line x = 0 splits by construction
  auto X = validate_surface(nullptr, pxyz("y^6 + 4*y^3*z^3 + 4*z^6 + x*y^5 + x^6"));
  auto R = find_tritangent_lines(X);
  CHECK(R.completed);
  auto keys = curve_keys(R.found);
  CHECK(keys.count("x"));
  CHECK(keys.count("x + y"));
  for (const auto &r : R.found) CHECK(lift_identity_holds(r, X.f));
}

TEST_CASE("tritangent line search on a generic sextic comes back empty") {
  auto X = validate_surface(nullptr, pxyz("x^6 + y^6 + z^6 + x^5*y + 3*x^4*z^2 - 2*x*y^2*z^3"));
  auto R = find_tritangent_lines(X);
  CHECK(R.completed);
  CHECK(R.found.empty());
}

TEST_CASE("del Pezzo double covers are recognized from even exponents") {
  auto X1 = validate_surface(nullptr, pxyz("x^6 + y^6 + z^6 + x^2*y^2*z^2"));
  auto c1 = detect_del_pezzo(X1);
  REQUIRE(c1.has_value());
  CHECK(c1->variables == std::vector<int>{0, 1, 2});
  CHECK(c1->rank_lower_bound == 9);

  auto X2 = validate_surface(nullptr, pxyz("x^6 + y^6 + z^6 + x^2*y^3*z"));
  auto c2 = detect_del_pezzo(X2);
  REQUIRE(c2.has_value());
  CHECK(c2->variables == std::vector<int>{0});

  auto X3 = validate_surface(nullptr, pxyz("x^6 + y^6 + z^6 + x^5*y + y^5*z + z^5*x"));
  CHECK(!detect_del_pezzo(X3).has_value());
}

TEST_CASE("propagation closes a divisor set under Galois and symmetry") {
  auto X = validate_surface(nullptr, pxyz("x^6 + y^6 + z^6"));

  // the hyperplane class is fixed by everything
  DivisorSet H;
  H.records.push_back(hyperplane_record());
  DivisorSet Hc = propagate(H, X);
  CHECK(Hc.g_closed);
  CHECK(Hc.galois_closed);
  CHECK(Hc.records.size() == 1);

  // the 12 Fermat representatives complete to all 18 lines, both signs each
  auto R = find_tritangent_lines(X);
  DivisorSet S;
  S.records = R.found;
  DivisorSet Sc = propagate(S, X);
  CHECK(Sc.g_closed);
  CHECK(Sc.galois_closed);
  CHECK(Sc.records.size() == 36);
  REQUIRE(Sc.field != nullptr);
  CHECK(Sc.field->degree() == 4);
  for (const auto &r : Sc.records) {
    CHECK(r.field == Sc.field);
    CHECK(lift_identity_holds(r, X.f));
  }
  std::set<std::string> labels;
  for (const auto &r : Sc.records) labels.insert(r.label);
  CHECK(labels.size() == 36);
  CHECK(curve_keys(Sc.records).size() == 18);

  // closing a closed set changes nothing
  DivisorSet Sc2 = propagate(Sc, X);
  CHECK(Sc2.records.size() == 36);
  CHECK(curve_keys(Sc2.records) == curve_keys(Sc.records));
}

TEST_CASE("propagation over an explicitly given field seed") {
  // seed: the line x = i*y on the Fermat sextic, one sign only
  Poly<Rat> m; // y^2 + 1
  m = m + Poly<Rat>::monomial(Rat(1), 2) + Poly<Rat>::monomial(Rat(1), 0);
  FieldPtr K = NumberField::create(m);
  NFElem i = NFElem::generator(K);
  auto fK = pxyz("x^6 + y^6 + z^6", K);
  std::array<Poly<NFElem>, 3> par = {Poly<NFElem>::monomial(i, 1),
                                     Poly<NFElem>::monomial(NFElem::from_rat(K, Rat(1)), 1),
                                     Poly<NFElem>(NFElem::from_rat(K, Rat(1)))};
  auto et = check_even_tangency(par, fK);
  REQUIRE(et.has_value());
  MultiPoly<NFElem> curve = MultiPoly<NFElem>::variable(kXYZ, 0) -
                            i * MultiPoly<NFElem>::variable(kXYZ, 1);
  auto both = split_records_from(DivisorKind::SplitCurveComponent, curve, par, *et, K,
                                 NFElem(0), "seed");
  REQUIRE(both.size() == 2);

  auto X = validate_surface(nullptr, pxyz("x^6 + y^6 + z^6"));
  DivisorSet S;
  S.records.push_back(both[0]);
  DivisorSet Sc = propagate(S, X);
  CHECK(Sc.g_closed);
  CHECK(Sc.galois_closed);
  // conjugate line x = -i*y appears, and both signs of each
  CHECK(Sc.records.size() == 4);
  CHECK(curve_keys(Sc.records).size() == 2);
  for (const auto &r : Sc.records) CHECK(lift_identity_holds(r, X.f));
}

TEST_CASE("propagation transports divisors along surface symmetries") {
  // Fermat with x <-> y registered: a line in the y = a*z pencil must drag
  // its mirror x = a*z into the closed set
  SurfaceAutomorphism swap{mat3({0, 1, 0, 1, 0, 0, 0, 0, 1}), NFElem(1), +1};
  auto X = validate_surface(nullptr, pxyz("x^6 + y^6 + z^6"), {swap});
  auto R = find_tritangent_lines(X);
  DivisorRecord seed;
  bool have = false;
  for (const auto &r : R.found)
    if (normalized_curve_key(r.plane_curve) == "y - alpha*z") {
      seed = r;
      have = true;
      break;
    }
  REQUIRE(have);
  DivisorSet S;
  S.records.push_back(seed);
  DivisorSet Sc = propagate(S, X);
  CHECK(Sc.g_closed);
  CHECK(Sc.galois_closed);
  auto keys = curve_keys(Sc.records);
  bool mirrored = false;
  for (const auto &k : keys)
    if (k.rfind("x - ", 0) == 0 && k.find("z") != std::string::npos) mirrored = true;
  CHECK(mirrored);
  for (const auto &r : Sc.records) CHECK(lift_identity_holds(r, X.f));
}

TEST_CASE("sixtangent conic search: known-conic fast path") {
  // (x^3+y^3+z^3)^2 + (x^2+y*z)*(x^4+y^4+z^4): the conic x^2 + y*z splits
  auto X = validate_surface(nullptr,
                            pxyz("2*x^6 + y^6 + z^6 + 2*x^3*y^3 + 2*x^3*z^3 + 2*y^3*z^3 + "
                                 "x^2*y^4 + x^2*z^4 + x^4*y*z + y^5*z + y*z^5"));
  auto conic = pxyz("x^2 + y*z");
  auto R = find_sixtangent_conics(X, 0, {conic});
  CHECK(!R.completed); // no budget for the general search, honestly reported
  REQUIRE(R.found.size() == 2);
  for (const auto &r : R.found) {
    CHECK(r.kind == DivisorKind::SplitCurveComponent);
    CHECK(r.degree == 2);
    CHECK(normalized_curve_key(r.plane_curve) == "x^2 + y*z");
    CHECK(lift_identity_holds(r, X.f));
    CHECK(r.lift_branch.degree() == 6);
  }
  CHECK(R.found[0].lift_sign != R.found[1].lift_sign);

  // rank-deficient (degenerate) conics are skipped with a note
  auto degen = find_sixtangent_conics(X, 0, {pxyz("x^2 + 2*x*y + y^2")});
  CHECK(degen.found.empty());
  REQUIRE(!degen.notes.empty());

  // a conic that does not split contributes nothing
  auto fermat = validate_surface(nullptr, pxyz("x^6 + y^6 + z^6"));
  auto none = find_sixtangent_conics(fermat, 0, {conic});
  CHECK(none.found.empty());
}

TEST_CASE("sixtangent conic search: budgeted general search stays honest") {
  auto X = validate_surface(nullptr, pxyz("x^6 + y^6 + z^6"));
  auto R = find_sixtangent_conics(X, 2000);
  CHECK(!R.completed);
  REQUIRE(!R.notes.empty());
  CHECK(R.notes.back().find("inconclusive") != std::string::npos);
}

TEST_CASE("univariate gcd and squarefree part route exactly over any field") {
  // rational-coefficient inputs take the modular path
  auto t = Poly<NFElem>::monomial(NFElem(1), 1);
  auto one = Poly<NFElem>(NFElem(1));
  auto a = (t - one) * (t - one) * (t + Poly<NFElem>(NFElem(2)));
  auto b = (t - one) * (t + Poly<NFElem>(NFElem(3)));
  CHECK(gcd_univariate(a, b) == t - one);
  CHECK(squarefree_univariate(a) == (t - one) * (t + Poly<NFElem>(NFElem(2))));

  // genuinely algebraic coefficients take the generic path
  Poly<Rat> m;
  m = m + Poly<Rat>::monomial(Rat(1), 2) + Poly<Rat>::monomial(Rat(1), 0);
  FieldPtr K = NumberField::create(m);
  NFElem i = NFElem::generator(K);
  auto ti = t - Poly<NFElem>(i);
  auto c = ti * (t + one);
  CHECK(gcd_univariate(c, ti) == ti);
  CHECK(squarefree_univariate(ti * ti * (t + one)) == ti * (t + one));
}
