#include "picard/pointcount.hpp"

#include <thread>

namespace picard {
namespace detail {
namespace {

// a chart term c * u^eu * v^ev held as (log c, eu, ev)
struct LogTerm {
  int32_t lc;
  int32_t eu, ev;
};

// fold g^s into a running sum kept as a logarithm (kNone = sum is 0)
constexpr int32_t kNone = -1;

inline void fold(int32_t &acc, int32_t s, const int32_t *zech, int32_t Q) {
  if (acc == kNone) {
    acc = s;
    return;
  }
  int32_t d = s - acc;
  if (d < 0) d += Q;
  int32_t z = zech[d];
  if (z == FqCtx::kNegOne) {
    acc = kNone; // the two parts cancel
    return;
  }
  acc += z;
  if (acc >= Q) acc -= Q;
}

// sum of chi over a punctured line: u = g^k, k = 0..Q-1
long long line_sum(const FqCtx &C, const std::vector<LogTerm> &ts) {
  const int32_t Q = static_cast<int32_t>(C.q - 1);
  const int32_t *zech = C.zech.data();
  std::vector<int32_t> cur(ts.size());
  for (size_t t = 0; t < ts.size(); t++) cur[t] = ts[t].lc;
  long long sum = 0;
  for (int32_t k = 0; k < Q; k++) {
    int32_t acc = kNone;
    for (size_t t = 0; t < ts.size(); t++) {
      fold(acc, cur[t], zech, Q);
      cur[t] += ts[t].eu;
      if (cur[t] >= Q) cur[t] -= Q;
    }
    if (acc != kNone) sum += (acc & 1) ? -1 : 1;
  }
  return sum;
}

// sum of chi over the torus rows j0 <= log u < j1, all of log v
long long torus_rows(const FqCtx &C, const std::vector<LogTerm> &ts, int32_t j0,
                     int32_t j1) {
  const int32_t Q = static_cast<int32_t>(C.q - 1);
  const int32_t *zech = C.zech.data();
  const size_t m = ts.size();
  std::vector<int32_t> s0(m), zl(m);
  for (size_t t = 0; t < m; t++)
    s0[t] = static_cast<int32_t>((ts[t].lc + static_cast<long long>(ts[t].eu) * j0) % Q);
  long long sum = 0;
  for (int32_t j = j0; j < j1; j++) {
    for (size_t t = 0; t < m; t++) zl[t] = 0;
    for (int32_t k = 0; k < Q; k++) {
      int32_t acc = kNone;
      for (size_t t = 0; t < m; t++) {
        int32_t s = s0[t] + zl[t];
        if (s >= Q) s -= Q;
        fold(acc, s, zech, Q);
        zl[t] += ts[t].ev;
        if (zl[t] >= Q) zl[t] -= Q;
      }
      if (acc != kNone) sum += (acc & 1) ? -1 : 1;
    }
    for (size_t t = 0; t < m; t++) {
      s0[t] += ts[t].eu;
      if (s0[t] >= Q) s0[t] -= Q;
    }
  }
  return sum;
}

// deterministic parallel torus: fixed partition, partials added in order
long long torus_sum(const FqCtx &C, const std::vector<LogTerm> &ts) {
  const int32_t Q = static_cast<int32_t>(C.q - 1);
  if (ts.empty()) return 0;
  unsigned hw = std::thread::hardware_concurrency();
  int nt = static_cast<int>(hw == 0 ? 1 : hw);
  if (nt > 8) nt = 8;
  if (nt <= 1 || Q < 4096) return torus_rows(C, ts, 0, Q);
  std::vector<long long> part(nt, 0);
  std::vector<std::thread> pool;
  for (int i = 0; i < nt; i++) {
    int32_t lo = static_cast<int32_t>((static_cast<long long>(Q) * i) / nt);
    int32_t hi = static_cast<int32_t>((static_cast<long long>(Q) * (i + 1)) / nt);
    pool.emplace_back([&, i, lo, hi] { part[i] = torus_rows(C, ts, lo, hi); });
  }
  for (auto &th : pool) th.join();
  long long sum = 0;
  for (long long v : part) sum += v;
  return sum;
}

} // namespace

long long chi_point_sum(const MultiPoly<FqElem> &f, const FqCtxPtr &C) {
  if (f.vars.size() != 3)
    throw InternalError("chi_point_sum: expected a trivariate polynomial");
  // packed coefficient and exponents per term, zero coefficients dropped
  struct Term {
    uint32_t w;
    int a, b, c;
  };
  std::vector<Term> terms;
  for (const auto &[e, coef] : f.terms) {
    uint32_t w;
    if (coef.C) {
      if (coef.C->p != C->p || coef.C->n != 1)
        throw InternalError("chi_point_sum: coefficients must lie in the prime field");
      w = coef.v; // base-field scalars pack identically in the extension
    } else {
      w = C->from_int(Int(coef.k));
    }
    if (w != 0) terms.push_back({w, e[0], e[1], e[2]});
  }
  const int32_t Q = static_cast<int32_t>(C->q - 1);
  auto lg = [&](uint32_t w) { return C->log_tab[w]; };
  auto coeff_at = [&](int a, int b, int c) -> uint32_t {
    for (const auto &t : terms)
      if (t.a == a && t.b == b && t.c == c) return t.w;
    return 0;
  };

  long long sum = 0;
  std::vector<LogTerm> ts;

  // chart x = 1: torus y,z != 0.  Exponents enter the log domain reduced mod
  // q-1 so the additive updates stay within one conditional subtraction.
  for (const auto &t : terms) ts.push_back({lg(t.w), t.b % Q, t.c % Q});
  sum += torus_sum(*C, ts);
  // chart x = 1, z = 0, y != 0
  ts.clear();
  for (const auto &t : terms)
    if (t.c == 0) ts.push_back({lg(t.w), t.b % Q, 0});
  sum += ts.empty() ? 0 : line_sum(*C, ts);
  // chart x = 1, y = 0, z != 0
  ts.clear();
  for (const auto &t : terms)
    if (t.b == 0) ts.push_back({lg(t.w), t.c % Q, 0});
  sum += ts.empty() ? 0 : line_sum(*C, ts);
  // the points (1:0:0), (0:1:0), (0:0:1)
  sum += C->chi(coeff_at(6, 0, 0));
  sum += C->chi(coeff_at(0, 6, 0));
  sum += C->chi(coeff_at(0, 0, 6));
  // chart y = 1, x = 0, z != 0
  ts.clear();
  for (const auto &t : terms)
    if (t.a == 0) ts.push_back({lg(t.w), t.c % Q, 0});
  sum += ts.empty() ? 0 : line_sum(*C, ts);
  return sum;
}

} // namespace detail
} // namespace picard
