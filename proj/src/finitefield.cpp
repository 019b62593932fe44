#include "picard/finitefield.hpp"
#include <algorithm>

namespace picard {

namespace {

// dense F_p[x] helpers on digit vectors (build-time only, not the hot path)

using PV = std::vector<uint32_t>;

void pv_trim(PV &a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PV pv_mulmod(const PV &a, const PV &b, const PV &m, long p) {
  // m monic of degree n (coefficient vector includes leading 1)
  int n = static_cast<int>(m.size()) - 1;
  std::vector<uint64_t> prod(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); i++) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); j++) prod[i + j] = (prod[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p;
  }
  for (int k = static_cast<int>(prod.size()) - 1; k >= n; k--) {
    uint64_t t = prod[k] % p;
    if (!t) continue;
    prod[k] = 0;
    for (int i = 0; i < n; i++)
      prod[k - n + i] = (prod[k - n + i] + t * (p - m[i] % p)) % p;
  }
  PV r(n, 0);
  for (int i = 0; i < n && i < static_cast<int>(prod.size()); i++) r[i] = static_cast<uint32_t>(prod[i] % p);
  pv_trim(r);
  return r;
}

PV pv_powmod(PV base, Int e, const PV &m, long p) {
  PV r = {1};
  mpz_class k = e.v;
  while (sgn(k) > 0) {
    if (mpz_odd_p(k.get_mpz_t())) r = pv_mulmod(r, base, m, p);
    base = pv_mulmod(base, base, m, p);
    k >>= 1;
  }
  return r;
}

PV pv_gcd(PV a, PV b, long p) {
  auto inv_mod = [&](long x) {
    long r = 1, e = p - 2, bb = ((x % p) + p) % p;
    while (e) {
      if (e & 1) r = r * bb % p;
      bb = bb * bb % p;
      e >>= 1;
    }
    return r;
  };
  pv_trim(a);
  pv_trim(b);
  while (!b.empty()) {
    // a mod b
    long binv = inv_mod(b.back());
    while (a.size() >= b.size() && !a.empty()) {
      uint64_t f = static_cast<uint64_t>(a.back()) * binv % p;
      if (f) {
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); i++)
          a[off + i] = static_cast<uint32_t>((a[off + i] + (p - f * b[i] % p)) % p);
      }
      a.pop_back();
      pv_trim(a);
      if (a.size() < b.size()) break;
    }
    std::swap(a, b);
  }
  return a;
}

bool pv_is_irreducible(const PV &m, long p, int n) {
  PV x = {0, 1};
  // x^(p^n) == x mod m
  PV t = x;
  for (int i = 0; i < n; i++) t = pv_powmod(t, Int(p), m, p);
  PV diff = t;
  diff.resize(std::max<size_t>(diff.size(), 2), 0);
  diff[1] = (diff[1] + p - 1) % p;
  pv_trim(diff);
  if (!diff.empty()) return false;
  // gcd(x^(p^(n/l)) - x, m) == 1 for prime l | n
  for (int l = 2; l <= n; l++) {
    if (n % l != 0) continue;
    bool lp = true;
    for (int d = 2; d * d <= l; d++)
      if (l % d == 0) lp = false;
    if (!lp) continue;
    PV s = x;
    for (int i = 0; i < n / l; i++) s = pv_powmod(s, Int(p), m, p);
    PV d2 = s;
    d2.resize(std::max<size_t>(d2.size(), 2), 0);
    d2[1] = (d2[1] + p - 1) % p;
    pv_trim(d2);
    PV g = pv_gcd(d2, m, p);
    if (g.size() != 1) return false;
  }
  return true;
}

uint32_t pv_pack(const PV &a, long p, int n) {
  uint32_t v = 0, mult = 1;
  for (int i = 0; i < n; i++) {
    uint32_t d = i < static_cast<int>(a.size()) ? a[i] : 0;
    v += d * mult;
    mult *= static_cast<uint32_t>(p);
  }
  return v;
}

} // namespace

std::shared_ptr<const FqCtx> FqCtx::create(long p, int n) {
  if (p == 2) throw UnsupportedField("characteristic 2 is rejected");
  if (p < 3 || mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 40) == 0)
    throw UnsupportedField("characteristic must be an odd prime");
  if (n < 1) throw UnsupportedField("extension degree must be positive");
  double qd = 1;
  for (int i = 0; i < n; i++) qd *= static_cast<double>(p);
  if (qd > double(1 << 24)) throw UnsupportedField("field size exceeds the 2^24 table bound");
  uint32_t q = 1;
  for (int i = 0; i < n; i++) q *= static_cast<uint32_t>(p);

  auto C = std::make_shared<FqCtx>();
  C->p = p;
  C->n = n;
  C->q = q;
  C->half = (q - 1) / 2;

  // prime factors of q-1, for primitivity checks
  std::vector<Int> qm1_primes;
  for (auto &[pr, e] : factor_integer(Int(static_cast<long>(q - 1)))) qm1_primes.push_back(pr);

  PV m;        // defining poly, coeffs 0..n (monic)
  PV gen;      // multiplicative generator as digit vector
  if (n == 1) {
    m = {0, 1}; // unused
    C->defining = {0};
    // smallest primitive root
    for (long g = 2;; g++) {
      bool ok = true;
      for (auto &r : qm1_primes) {
        long e = (static_cast<long>(q) - 1) / r.to_long();
        long acc = 1, base = g % p;
        while (e) {
          if (e & 1) acc = acc * base % p;
          base = base * base % p;
          e >>= 1;
        }
        if (acc == 1) { ok = false; break; }
      }
      if (ok) { gen = {static_cast<uint32_t>(g)}; break; }
    }
  } else {
    // smallest monic irreducible with primitive root x, scanning constant-first digit order
    bool found = false;
    for (uint32_t v = 0; v < q && !found; v++) {
      PV cand(n + 1, 0);
      uint32_t t = v;
      for (int i = 0; i < n; i++) {
        cand[i] = t % p;
        t /= static_cast<uint32_t>(p);
      }
      cand[n] = 1;
      if (cand[0] == 0) continue; // reducible: x divides
      if (!pv_is_irreducible(cand, p, n)) continue;
      // primitivity of x
      bool prim = true;
      for (auto &r : qm1_primes) {
        PV e = pv_powmod({0, 1}, Int(static_cast<long>(q - 1) / r.to_long()), cand, p);
        if (e.size() == 1 && e[0] == 1) { prim = false; break; }
      }
      if (!prim) continue;
      m = cand;
      found = true;
    }
    if (!found) throw InternalError("no primitive defining polynomial found");
    C->defining.assign(m.begin(), m.end() - 1);
    gen = {0, 1};
  }

  // exponent table by repeated multiplication with the generator
  C->exp_tab.assign(2 * (q - 1), 0);
  C->log_tab.assign(q, -1);
  PV cur = {1};
  for (uint32_t k = 0; k < q - 1; k++) {
    uint32_t packed = pv_pack(cur, p, n);
    C->exp_tab[k] = packed;
    C->exp_tab[k + (q - 1)] = packed;
    C->log_tab[packed] = static_cast<int32_t>(k);
    cur = n == 1 ? PV{static_cast<uint32_t>(static_cast<uint64_t>(cur[0]) * gen[0] % p)}
                 : pv_mulmod(cur, gen, m, p);
  }
  if (!(cur.size() == 1 && cur[0] == 1))
    throw InternalError("generator order mismatch while building tables");

  // Zech logarithms: zech[d] = log(1 + g^d)
  C->zech.assign(q - 1, kNegOne);
  for (uint32_t d = 0; d < q - 1; d++) {
    uint32_t a = C->exp_tab[d];
    // digitwise add of 1 to a
    uint32_t val = 0, mult = 1, rest = a;
    for (int i = 0; i < n; i++) {
      uint32_t dig = rest % p;
      rest /= static_cast<uint32_t>(p);
      if (i == 0) dig = (dig + 1) % p;
      val += dig * mult;
      mult *= static_cast<uint32_t>(p);
    }
    C->zech[d] = val == 0 ? kNegOne : C->log_tab[val];
  }
  return C;
}

uint32_t FqCtx::add_packed(uint32_t a, uint32_t b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  int32_t la = log_tab[a], lb = log_tab[b];
  int32_t d = lb - la;
  if (d < 0) d += static_cast<int32_t>(q - 1);
  int32_t z = zech[d];
  if (z == kNegOne) return 0;
  return exp_tab[la + z];
}

uint32_t FqCtx::neg_packed(uint32_t a) const {
  if (a == 0) return 0;
  return exp_tab[log_tab[a] + half];
}

uint32_t FqCtx::mul_packed(uint32_t a, uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_tab[log_tab[a] + log_tab[b]];
}

uint32_t FqCtx::inv_packed(uint32_t a) const {
  if (a == 0) throw std::domain_error("finite field: division by zero");
  int32_t l = log_tab[a];
  return exp_tab[(static_cast<int32_t>(q - 1) - l) % static_cast<int32_t>(q - 1)];
}

uint32_t FqCtx::pow_packed(uint32_t a, const Int &e) const {
  if (a == 0) {
    if (e.sign() <= 0 && !e.is_zero()) throw std::domain_error("finite field: 0 to negative power");
    return e.is_zero() ? 1 : 0;
  }
  Int m = mod_floor(Int(static_cast<long>(log_tab[a])) * e, Int(static_cast<long>(q - 1)));
  return exp_tab[m.to_long()];
}

uint32_t FqCtx::from_int(const Int &a) const {
  Int r = mod_floor(a, Int(p));
  return static_cast<uint32_t>(r.to_long());
}

uint32_t FqCtx::from_rat(const Rat &a) const {
  uint32_t num = from_int(a.num());
  uint32_t den = from_int(a.den());
  if (den == 0) throw InputError("denominator not invertible modulo p");
  return mul_packed(num, inv_packed(den));
}

uint32_t FqCtx::frobenius(uint32_t a) const { return pow_packed(a, Int(p)); }

} // namespace picard
