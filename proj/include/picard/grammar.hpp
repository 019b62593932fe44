#ifndef PICARD_GRAMMAR_HPP
#define PICARD_GRAMMAR_HPP

#include "picard/multipoly.hpp"
#include "picard/numberfield.hpp"
#include <string>

namespace picard {

// Text form of polynomials used by every file format: a sum of terms
// `c*x^a*y^b*...`, rational coefficients `p/q`, and `alpha` for the number
// field generator (its minimal polynomial is declared by the surrounding
// document). print_polynomial emits a canonical form that reparses to the
// identical object and reprints byte-identically.

MultiPoly<NFElem> parse_polynomial(const std::string &text,
                                   const std::vector<std::string> &vars,
                                   const FieldPtr &field);

std::string print_polynomial(const MultiPoly<NFElem> &p);

Poly<NFElem> parse_univariate(const std::string &text, const std::string &var,
                              const FieldPtr &field);

std::string print_univariate(const Poly<NFElem> &p, const std::string &var);

std::string print_rat(const Rat &r);

} // namespace picard

#endif
