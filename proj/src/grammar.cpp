#include "picard/grammar.hpp"
#include "picard/errors.hpp"
#include <cctype>
#include <sstream>

namespace picard {

namespace {

struct Lexer {
  const std::string &s;
  size_t i = 0;

  explicit Lexer(const std::string &text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) i++;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      i++;
      return true;
    }
    return false;
  }
  Int integer() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) i++;
    if (i == start) throw InputError("expected integer at position " + std::to_string(start) + " in polynomial");
    return Int(s.substr(start, i - start));
  }
  std::string symbol() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) i++;
    if (i == start) throw InputError("expected symbol at position " + std::to_string(start) + " in polynomial");
    return s.substr(start, i - start);
  }
};

} // namespace

MultiPoly<NFElem> parse_polynomial(const std::string &text,
                                   const std::vector<std::string> &vars,
                                   const FieldPtr &field) {
  MultiPoly<NFElem> out(vars);
  Lexer lx(text);
  bool first = true;
  while (!lx.done()) {
    int sign = 1;
    if (lx.eat('+')) {
      // explicit plus
    } else if (lx.eat('-')) {
      sign = -1;
    } else if (!first) {
      throw InputError("expected '+' or '-' between terms in polynomial");
    }
    first = false;
    // one term: factors joined by '*'
    Rat coeff(sign);
    NFElem alpha_part(1);
    Expo e(vars.size(), 0);
    bool any_factor = false;
    while (true) {
      char c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        Int num = lx.integer();
        Int den(1);
        if (lx.eat('/')) den = lx.integer();
        if (den.is_zero()) throw InputError("zero denominator in polynomial coefficient");
        coeff *= Rat(num, den);
        any_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string name = lx.symbol();
        long expo = 1;
        if (lx.eat('^')) {
          Int ex = lx.integer();
          if (!ex.fits_long()) throw InputError("exponent too large in polynomial");
          expo = ex.to_long();
        }
        if (name == "alpha") {
          if (!field) throw InputError("polynomial uses alpha but no number field is declared");
          NFElem g = NFElem::generator(field);
          for (long k = 0; k < expo; k++) alpha_part = alpha_part * g;
        } else {
          auto it = std::find(vars.begin(), vars.end(), name);
          if (it == vars.end()) throw InputError("unknown symbol '" + name + "' in polynomial");
          e[it - vars.begin()] += static_cast<int>(expo);
        }
        any_factor = true;
      } else {
        throw InputError(std::string("unexpected character '") + c + "' in polynomial");
      }
      if (!lx.eat('*')) break;
    }
    if (!any_factor) throw InputError("empty term in polynomial");
    out.add_term(e, NFElem(coeff) * alpha_part);
  }
  return out;
}

namespace {

// one monomial with a plain rational coefficient; alpha folded in as an extra symbol
struct FlatTerm {
  Expo e;     // variable exponents
  int alpha;  // alpha exponent (already reduced below field degree)
  Rat c;
};

void print_flat(std::ostringstream &os, const std::vector<std::string> &vars,
                const std::vector<FlatTerm> &terms) {
  if (terms.empty()) {
    os << "0";
    return;
  }
  bool first = true;
  for (const auto &t : terms) {
    Rat c = t.c;
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    }
    first = false;
    bool any_sym = t.alpha > 0;
    for (int x : t.e)
      if (x > 0) any_sym = true;
    bool coeff_printed = false;
    if (!any_sym || c != Rat(1)) {
      os << c.str();
      coeff_printed = true;
    }
    if (t.alpha > 0) {
      if (coeff_printed) os << "*";
      os << "alpha";
      if (t.alpha > 1) os << "^" << t.alpha;
      coeff_printed = true;
    }
    for (size_t i = 0; i < t.e.size(); i++) {
      if (t.e[i] == 0) continue;
      if (coeff_printed) os << "*";
      os << vars[i];
      if (t.e[i] > 1) os << "^" << t.e[i];
      coeff_printed = true;
    }
  }
}

std::vector<FlatTerm> flatten(const MultiPoly<NFElem> &p) {
  std::vector<FlatTerm> flat;
  for (auto &[e, coeff] : p.terms) {
    if (!coeff.F) {
      if (!coeff.c.empty()) flat.push_back({e, 0, coeff.c[0]});
      continue;
    }
    for (int k = 0; k < static_cast<int>(coeff.c.size()); k++)
      if (!coeff.c[k].is_zero()) flat.push_back({e, k, coeff.c[k]});
  }
  // canonical order: degrevlex over variables descending, then alpha power ascending
  MonomialOrder ord{OrderKind::DegRevLex, 0};
  std::stable_sort(flat.begin(), flat.end(), [&](const FlatTerm &a, const FlatTerm &b) {
    int c = ord.compare(a.e, b.e);
    if (c != 0) return c > 0;
    return a.alpha < b.alpha;
  });
  return flat;
}

} // namespace

std::string print_polynomial(const MultiPoly<NFElem> &p) {
  std::ostringstream os;
  print_flat(os, p.vars, flatten(p));
  return os.str();
}

Poly<NFElem> parse_univariate(const std::string &text, const std::string &var,
                              const FieldPtr &field) {
  auto mp = parse_polynomial(text, {var}, field);
  std::vector<NFElem> c(std::max(mp.degree_in(0) + 1, 0));
  for (auto &[e, coeff] : mp.terms) c[e[0]] = coeff;
  return Poly<NFElem>(std::move(c));
}

std::string print_univariate(const Poly<NFElem> &p, const std::string &var) {
  return print_polynomial(from_univariate(p, {var}, 0));
}

std::string print_rat(const Rat &r) { return r.str(); }

} // namespace picard
