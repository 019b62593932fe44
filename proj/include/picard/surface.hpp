#pragma once
// Input surfaces w^2 = f(x,y,z): validation (homogeneity, branch-curve
// smoothness, automorphism law), the quartic-with-node reduction, and
// good-prime selection for the counting step.

#include <picard/factor.hpp>
#include <picard/multipoly.hpp>

#include <array>
#include <optional>
#include <vector>

namespace picard {

// (x:y:z:w) |-> (M*(x,y,z) : sign*lambda*w), with f(M*v) = lambda^2 * f(v)
struct SurfaceAutomorphism {
  MatNF M;       // 3x3 over the surface field
  NFElem lambda; // nonzero scalar
  int sign = 1;  // +1 or -1
};

struct DoubleSexticSurface {
  FieldPtr field;                          // null for Q
  MultiPoly<NFElem> f;                     // homogeneous sextic in x, y, z
  std::vector<SurfaceAutomorphism> autos;  // verified at construction
  std::optional<double> time_budget_secs;
};

// Throws NotHomogeneous / SingularBranchCurve / BadAutomorphism.
DoubleSexticSurface validate_surface(FieldPtr field, const MultiPoly<NFElem> &f,
                                     std::vector<SurfaceAutomorphism> autos = {},
                                     std::optional<double> time_budget = std::nullopt);

// Branch sextic of the projection of a nodal quartic from its node at
// (0:0:0:1): f3^2 - 4*f2*f4 for the quartic f2*u^2 + f3*u + f4.
MultiPoly<NFElem> quartic_node_to_sextic(const MultiPoly<NFElem> &f2,
                                         const MultiPoly<NFElem> &f3,
                                         const MultiPoly<NFElem> &f4);

// Odd primes p in [lo, hi] such that f has p-integral coefficients and the
// reduction mod p is still a smooth sextic.  Requires the base field Q.
std::vector<long> good_primes(const DoubleSexticSurface &X, long lo, long hi);

// Smoothness of {f = df/dx = df/dy = df/dz = 0} being empty in P^2 over the
// algebraic closure; used by validate_surface and by tests directly.
struct SmoothnessReport {
  bool smooth = false;
  bool have_witness = false;
  std::array<NFElem, 3> witness; // projective coordinates when found
  FieldPtr witness_field;
};

SmoothnessReport branch_smoothness(const MultiPoly<NFElem> &f, FieldPtr K);

// Same question for a reduction mod p; emptiness certified by Groebner
// bases per affine chart (no witness production).
bool branch_smooth_mod_p(const MultiPoly<FqElem> &f);

// Reduce a Q-coefficient sextic mod p (denominators must be p-units).
MultiPoly<FqElem> reduce_sextic_mod_p(const MultiPoly<NFElem> &f, const FqCtxPtr &C);

} // namespace picard
