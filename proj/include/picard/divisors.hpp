#ifndef PICARD_DIVISORS_HPP
#define PICARD_DIVISORS_HPP

#include "picard/factor.hpp"
#include "picard/resultant.hpp"
#include "picard/surface.hpp"
#include <array>
#include <optional>
#include <string>
#include <vector>

namespace picard {

enum class DivisorKind { Hyperplane, SplitCurveComponent, DelPezzoPullback, UserFormal };

// One divisor class on the double cover.  Geometric kinds carry the plane
// curve, a parametrization of it, and the branch of the lift: with
// f(X_t, Y_t, Z_t) = c * s(t)^2 identically, the record names the component
// w = lift_sign * sqrt(c) * s(t) for a persisted choice of sqrt(c).
struct DivisorRecord {
  DivisorKind kind = DivisorKind::UserFormal;
  MultiPoly<NFElem> plane_curve;     // zero polynomial when not geometric
  int degree = 0;                    // plane degree of the curve (1 for H)
  std::array<Poly<NFElem>, 3> param; // X_t, Y_t, Z_t
  Poly<NFElem> lift_branch;          // s(t)
  NFElem lift_scale;                 // c
  int lift_sign = +1;
  FieldPtr field;                    // field of definition (null: Q)
  NFElem surface_gen_image;          // surface base generator inside `field`
  std::string label;
};

struct DivisorSet {
  std::vector<DivisorRecord> records;
  bool g_closed = false;
  bool galois_closed = false;
  FieldPtr field;           // common field of every record (null: Q)
  NFElem surface_gen_image; // surface base generator inside `field`
};

struct EvenTangency {
  Poly<NFElem> s;
  NFElem c;
};

// Pullback of a general plane line; no tangency data attached.
DivisorRecord hyperplane_record();

// Coefficient-wise embedding through the generator image (see embed_elem).
MultiPoly<NFElem> embed_multipoly(const MultiPoly<NFElem> &p, FieldPtr target,
                                  const NFElem &alpha_image);
Poly<NFElem> embed_poly(const Poly<NFElem> &p, FieldPtr target, const NFElem &alpha_image);

// Decide whether the double cover splits over the parametrized curve:
// returns s, c with f(X_t, Y_t, Z_t) = c * s(t)^2 when the restriction of f
// is a square times a constant over the closure, nullopt otherwise.  The
// parametrization and f must live over one common field.  Throws InputError
// when the map is constant, when its image lies inside the branch sextic, or
// when (for non-injective parametrizations) a singular point of the image
// cannot be kept off the branch curve.
std::optional<EvenTangency> check_even_tangency(const std::array<Poly<NFElem>, 3> &param,
                                                const MultiPoly<NFElem> &f);

// The two components of a verified split, signs +1 and -1.
std::vector<DivisorRecord> split_records_from(DivisorKind kind,
                                              const MultiPoly<NFElem> &plane_curve,
                                              const std::array<Poly<NFElem>, 3> &param,
                                              const EvenTangency &lift, FieldPtr field,
                                              const NFElem &surface_gen_image,
                                              const std::string &label_base);

struct SearchOutcome {
  std::vector<DivisorRecord> found;
  bool completed = true; // false: degenerate elimination, field cap, or budget
  std::vector<std::string> notes;
};

// Exhaustive search for plane lines meeting the branch sextic with even
// multiplicity everywhere, over the three disjoint chart families
// x = u*y + v*z, then y = u*z, then z = 0.  Found lines are returned through
// one representative per conjugacy class (propagate completes the orbits).
SearchOutcome find_tritangent_lines(const DoubleSexticSurface &X);

// Conics meeting the branch sextic with even multiplicity everywhere.
// `known_conics` are checked directly through a parametrization from a small
// point search (the fast path); the general search assembles the coefficient
// system for f(X_t,Y_t,Z_t) = (b0 t^6 + ... + b6)^2 plus the incidence
// relation and runs a budgeted Groebner computation.  `budget` caps the
// reduction steps; the optional deadline caps wall-clock time.  completed is
// false whenever either cap interrupts the general search.
SearchOutcome find_sixtangent_conics(const DoubleSexticSurface &X, long budget,
                                     const std::vector<MultiPoly<NFElem>> &known_conics = {},
                                     std::optional<double> time_limit_secs = std::nullopt);

struct DelPezzoCertificate {
  std::vector<int> variables;  // coordinates occurring only with even exponents
  int rank_lower_bound = 9;
};

// f = f'(x^2, y, z) up to the analogous condition in y or z: the surface also
// covers a degree-2 del Pezzo surface and the geometric Picard rank is >= 9.
// No coordinate change is searched; the pullback classes are not constructed.
std::optional<DelPezzoCertificate> detect_del_pezzo(const DoubleSexticSurface &X);

// Close a divisor set under the surface automorphism group and under the
// Galois action of the (minimal common Galois) field of definition.  Every
// transported record is re-verified exactly.  On a field-degree cap the
// partial set is returned with both closure flags false.
DivisorSet propagate(const DivisorSet &sigma0, const DoubleSexticSurface &X);

// Canonical printed form of a plane curve: content-free, first nonzero
// coefficient one.  Used as the deduplication key together with the lift sign.
std::string normalized_curve_key(const MultiPoly<NFElem> &c);

} // namespace picard

#endif
