#include "picard/rational.hpp"
#include <algorithm>
#include <map>

namespace picard {

namespace {

bool is_prime(const Int &n) {
  // GMP's Baillie-PSW based test; deterministic for desk-scale inputs
  return mpz_probab_prime_p(n.v.get_mpz_t(), 40) > 0;
}

Int pollard_rho(const Int &n) {
  if (divides(Int(2), n)) return Int(2);
  mpz_class x = 2, y = 2, d = 1, c = 1;
  const mpz_class &N = n.v;
  auto f = [&](const mpz_class &t) { return mpz_class((t * t + c) % N); };
  while (true) {
    x = 2; y = 2; d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      mpz_class diff = abs(x - y);
      if (diff == 0) break;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), N.get_mpz_t());
    }
    if (d != 0 && d != 1 && d != N) return Int(d);
    c += 1; // cycle degenerated; restart with another polynomial
  }
}

void factor_rec(const Int &n, std::map<Int, int> &out) {
  if (n == Int(1)) return;
  if (is_prime(n)) {
    out[n]++;
    return;
  }
  Int d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(divexact(n, d), out);
}

} // namespace

std::vector<std::pair<Int, int>> factor_integer(const Int &n) {
  std::map<Int, int> acc;
  Int m = abs(n);
  if (m <= Int(1)) return {};
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    Int P(p);
    while (divides(P, m)) {
      acc[P]++;
      m = divexact(m, P);
    }
  }
  if (m > Int(1)) factor_rec(m, acc);
  return {acc.begin(), acc.end()};
}

Int square_class(const Rat &q) {
  if (q.is_zero()) return Int(0);
  Int n = q.num() * q.den(); // same class as q
  Int r(n.sign());
  for (auto &[p, e] : factor_integer(n))
    if (e % 2 != 0) r *= p;
  return r;
}

int valuation(const Int &n, const Int &p) {
  assert(!n.is_zero());
  int v = 0;
  Int m = n;
  while (divides(p, m)) {
    m = divexact(m, p);
    v++;
  }
  return v;
}

} // namespace picard
