#ifndef PICARD_POINTCOUNT_HPP
#define PICARD_POINTCOUNT_HPP

// Step I: bound the geometric Picard number from above. Count points of
// w^2 = f over F_{p^n}, reconstruct candidates for the characteristic
// polynomial of Frobenius on H^2 from the counts, and count eigenvalues of
// the form p * (root of unity).

#include "picard/multipoly.hpp"
#include "picard/poly.hpp"
#include "picard/surface.hpp"

#include <map>
#include <string>
#include <vector>

namespace picard {

// enumeration refusal threshold: counting over F_q costs ~q^2 = p^{2n} steps
inline constexpr long long kCountBudget = 1LL << 35;

struct FrobeniusCandidate {
  Poly<Rat> P;      // monic degree 22, integer coefficients, P(p) = 0
  int sign = 1;     // functional-equation sign that completed it
  int tate_count = 0;
  // squarefree integer representing lim_{T->p} P(T)/(T-p)^m modulo squares,
  // m the multiplicity of the root p; 0 when m != tate_count (class unused)
  Int square_class;
};

struct FrobeniusData {
  long p = 0;
  std::vector<Int> counts;  // counts[k] = #X(F_{p^{k+1}})
  std::vector<FrobeniusCandidate> candidates;
  bool determined = true;   // false: too few counts to pin down the middle
  int bound = 22;           // conservative: max tate_count over candidates
};

struct UpperBound {
  int value = 20;
  std::string provenance;
  std::vector<FrobeniusData> primes;
};

namespace detail {
// sum of chi(f(P)) over the q^2+q+1 points of P^2(F_q); f lives over the
// prime field of C and is promoted coefficient-wise
long long chi_point_sum(const MultiPoly<FqElem> &f, const FqCtxPtr &C);
}

// #X(F_{p^n}) for the double sextic w^2 = f, f over the prime field F_p.
// Throws BudgetExceeded (naming the largest feasible n) when p^{2n} exceeds
// kCountBudget.
Int count_points(const MultiPoly<FqElem> &f, int n);

// All monic integer degree-22 polynomials consistent with the given counts
// of #X(F_{p^n}), n = 1..N: power sums via Newton's identities, completion by
// the functional equation (both signs), then the filters — integrality,
// P(p) = 0, all root moduli equal to p within 1e-9 relative. N < 11 leaves
// middle coefficients free: determined=false and no candidates. Throws
// InconsistentCounts when counts cannot come from any such polynomial.
FrobeniusData frobenius_candidates(const std::vector<Int> &counts, long p);

// number of roots of candidate of the form p * (root of unity), counted with
// multiplicity: factor candidate(pT) over Q and sum the degrees of the
// cyclotomic irreducible factors
int tate_bound(const Poly<Rat> &candidate, long p);

// the m-th cyclotomic polynomial (exact, cached)
Poly<Rat> cyclotomic_poly(long m);

// parity refinement: when two primes agree on an even bound 2k but their
// discriminant square classes differ, the true rank cannot reach 2k.
// bounds: (prime, bound, square class) triples; returns the refined tau.
int refine_parity(const std::vector<std::tuple<long, int, Int>> &per_prime);

// Step I driver: per-prime bound = max tate_count over surviving candidates,
// tau = min over primes, capped at 20. known_counts (per prime) are reused
// instead of recounting; all counts actually used are returned in .primes.
// The square-class parity refinement is applied only when calibrated (see
// kSquareClassCalibrated in pointcount.cpp); until then tau is the plain min.
UpperBound vanluijk_upper_bound(const DoubleSexticSurface &X,
                                const std::vector<long> &primes, int max_n,
                                const std::map<long, std::vector<Int>> *known_counts = nullptr);

} // namespace picard

#endif
