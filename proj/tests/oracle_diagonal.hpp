#pragma once

#include "picard/poly.hpp"
#include "picard/rational.hpp"

#include <vector>

namespace picard {
namespace testing {

// Exact Frobenius data for the diagonal surface w^2 = x^6 + y^6 + z^6 at
// p = 7, computed independently of the counting kernel from multiplicative
// character sums in Q(zeta_42).  counts[n-1] = #X(F_{7^n}) for n = 1..max_n;
// char_poly is the degree-22 integer characteristic polynomial of Frobenius
// acting on H^2.
struct DiagonalFrobenius {
  std::vector<Int> counts;
  Poly<Rat> char_poly;
};

DiagonalFrobenius diagonal_sextic_frobenius(int max_n);

} // namespace testing
} // namespace picard
