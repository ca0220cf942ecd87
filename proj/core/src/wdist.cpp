// Copyright 2026 the qtx authors
// SPDX-License-Identifier: Apache-2.0

#include "qtx/wdist.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace qtx {

namespace {

size_t metric_weight(WeightMetric metric, const Vec& v) {
  return metric == WeightMetric::Symplectic ? swt(v) : wgt(v);
}

// Weight of the empty minimum: the full length, counting coordinate
// pairs once under the symplectic metric.
size_t convention_n(WeightMetric metric, const LinearCode& C) {
  return metric == WeightMetric::Symplectic ? C.n() / 2 : C.n();
}

double bits_of(const LinearCode& C) {
  return static_cast<double>(C.dim()) * std::log2(static_cast<double>(C.field().size()));
}

void validate_query(const WeightQuery& q) {
  if (q.code.field().tw == nullptr)
    throw std::invalid_argument("wdist: query has no code");
  if (q.metric == WeightMetric::Symplectic && q.code.n() % 2 != 0)
    throw std::invalid_argument("wdist: symplectic metric needs even length");
  if (q.exclude && !is_subspace(*q.exclude, q.code))
    throw std::invalid_argument("wdist: excluded set is not a subcode");
  if (q.threads < 1 || q.threads > 256)
    throw std::invalid_argument("wdist: thread count");
}

// Rows pre-scaled by every nonzero constant when the field is small;
// characteristic 2 adds digit-packed codes with plain xor.
struct RowOps {
  const Mat* G = nullptr;
  Field F;
  bool char2 = false;
  std::vector<std::vector<Vec>> scaled;

  explicit RowOps(const Mat& g) : G(&g), F(g.field()) {
    char2 = F.p() == 2;
    if (F.size() <= 64) {
      scaled.resize(g.rows());
      for (size_t i = 0; i < g.rows(); ++i) {
        scaled[i].reserve(F.size() - 1);
        for (u64 c = 1; c < F.size(); ++c) {
          Vec r = g.row(i);
          for (u64& x : r) x = F.mul(c, x);
          scaled[i].push_back(std::move(r));
        }
      }
    }
  }

  // dst = a + c * row_i with c != 0; dst must not alias a.
  void add_row(Vec& dst, const Vec& a, size_t i, u64 c) const {
    const size_t n = a.size();
    if (!scaled.empty()) {
      const Vec& s = scaled[i][c - 1];
      if (char2) {
        for (size_t t = 0; t < n; ++t) dst[t] = a[t] ^ s[t];
      } else {
        for (size_t t = 0; t < n; ++t) dst[t] = F.add(a[t], s[t]);
      }
    } else {
      for (size_t t = 0; t < n; ++t) dst[t] = F.add(a[t], F.mul(c, (*G)(i, t)));
    }
  }
};

// Every projective representative: first nonzero coefficient is 1,
// later rows take all values.  Thread tid handles leads congruent to
// tid mod nthreads.
template <class Visit>
void walk_all(const RowOps& ops, int tid, int nthreads, Visit&& visit) {
  const Mat& G = *ops.G;
  const size_t k = G.rows(), n = G.cols();
  const u64 q = G.field().size();
  if (k == 0) return;
  std::vector<Vec> buf(k, Vec(n, 0));

  auto rec = [&](auto&& self, size_t row, const Vec& cur) -> void {
    if (row == k) {
      visit(cur);
      return;
    }
    self(self, row + 1, cur);
    for (u64 c = 1; c < q; ++c) {
      ops.add_row(buf[row], cur, row, c);
      self(self, row + 1, buf[row]);
    }
  };

  for (size_t lead = 0; lead < k; ++lead) {
    if (lead % static_cast<size_t>(nthreads) != static_cast<size_t>(tid)) continue;
    Vec start = G.row(lead);
    rec(rec, lead + 1, start);
  }
}

// Projective representatives with exactly `j` nonzero coefficients.
template <class Visit>
void walk_weight(const RowOps& ops, size_t j, int tid, int nthreads, Visit&& visit) {
  const Mat& G = *ops.G;
  const size_t k = G.rows(), n = G.cols();
  const u64 q = G.field().size();
  if (j == 0 || j > k) return;
  std::vector<Vec> buf(j, Vec(n, 0));

  auto rec = [&](auto&& self, size_t d, size_t start, const Vec& cur) -> void {
    for (size_t i = start; i + (j - d) <= k; ++i) {
      if (d == 0) {
        if (i % static_cast<size_t>(nthreads) != static_cast<size_t>(tid)) continue;
        buf[0] = G.row(i);
        if (j == 1)
          visit(buf[0]);
        else
          self(self, 1, i + 1, buf[0]);
      } else {
        for (u64 c = 1; c < q; ++c) {
          ops.add_row(buf[d], cur, i, c);
          if (d + 1 == j)
            visit(buf[d]);
          else
            self(self, d + 1, i + 1, buf[d]);
        }
      }
    }
  };
  rec(rec, 0, 0, buf[0]);
}

template <class Work>
void run_workers(int threads, Work&& work) {
  if (threads <= 1) {
    work(0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
  for (std::thread& th : pool) th.join();
}

// Tracks the least metric weight seen outside the excluded subcode;
// membership is only tested for candidates below the current record.
struct MinAcc {
  WeightMetric metric;
  const LinearCode* exclude;
  std::atomic<size_t>* best;

  void operator()(const Vec& v) const {
    size_t w = metric_weight(metric, v);
    size_t b = best->load(std::memory_order_relaxed);
    if (w >= b) return;
    if (exclude != nullptr && exclude->contains(v)) return;
    while (w < b && !best->compare_exchange_weak(b, w, std::memory_order_relaxed)) {
    }
  }
};

// One disjoint information window: a row-equivalent basis reduced with
// the window's column groups first.  `pivots[r]` is the pivot column of
// row r, so coefficients of a codeword are read off directly.
struct Window {
  Mat G;
  std::vector<size_t> pivots;
  size_t def = 0;   // dim minus the rank landed inside the window
  size_t done = 0;  // coefficient weights enumerated so far
};

std::vector<size_t> rref_ordered(Mat& A, const std::vector<size_t>& order) {
  const Field& F = A.field();
  const size_t rows = A.rows(), cols = A.cols();
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c : order) {
    if (r == rows) break;
    size_t sel = rows;
    for (size_t i = r; i < rows; ++i) {
      if (A(i, c) != 0) {
        sel = i;
        break;
      }
    }
    if (sel == rows) continue;
    if (sel != r)
      for (size_t t = 0; t < cols; ++t) std::swap(A(sel, t), A(r, t));
    u64 inv = F.inv(A(r, c));
    if (inv != 1)
      for (size_t t = 0; t < cols; ++t) A(r, t) = F.mul(inv, A(r, t));
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || A(i, c) == 0) continue;
      u64 f = A(i, c);
      for (size_t t = 0; t < cols; ++t) A(i, t) = F.sub(A(i, t), F.mul(f, A(r, t)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t group_of(WeightMetric metric, size_t n, size_t col) {
  return metric == WeightMetric::Symplectic ? col % (n / 2) : col;
}

std::vector<Window> build_windows(const LinearCode& C, WeightMetric metric) {
  const Mat& G0 = C.gen();
  const size_t n = G0.cols(), k = G0.rows();
  const size_t groups = metric == WeightMetric::Symplectic ? n / 2 : n;
  std::vector<char> used(groups, 0);
  std::vector<Window> ws;
  for (;;) {
    std::vector<size_t> order;
    order.reserve(n);
    for (int pass = 0; pass < 2; ++pass) {
      for (size_t g = 0; g < groups; ++g) {
        if ((used[g] != 0) != (pass == 1)) continue;
        order.push_back(g);
        if (metric == WeightMetric::Symplectic) order.push_back(n / 2 + g);
      }
    }
    Mat G = G0;
    std::vector<size_t> piv = rref_ordered(G, order);
    size_t fresh = 0;
    for (size_t c : piv)
      if (!used[group_of(metric, n, c)]) ++fresh;
    if (fresh == 0) break;
    for (size_t c : piv) {
      size_t g = group_of(metric, n, c);
      if (!used[g]) used[g] = 1;
    }
    ws.push_back(Window{std::move(G), std::move(piv), k - fresh, 0});
  }
  return ws;
}

// Any codeword not yet enumerated on the window has more than `done`
// nonzero coefficients, of which at most `def` sit on rows pivoted
// outside the window; the rest are visible at distinct pivot columns,
// at most `denom` per column group.
size_t contribution(const Window& w, size_t denom) {
  size_t raw = w.done + 1 > w.def ? w.done + 1 - w.def : 0;
  return (raw + denom - 1) / denom;
}

}  // namespace

WeightResult min_weight_enum(const WeightQuery& q) {
  validate_query(q);
  const LinearCode& C = q.code;
  const size_t nconv = convention_n(q.metric, C);
  if (C.dim() == 0) return {nconv, true};
  if (bits_of(C) > 28.0 + 1e-9)
    throw std::invalid_argument("min_weight_enum: budget exceeded");
  if (q.exclude && q.exclude->dim() == C.dim()) return {nconv, true};

  RowOps ops(C.gen());
  std::atomic<size_t> best{nconv};
  const LinearCode* B = q.exclude ? &*q.exclude : nullptr;
  run_workers(q.threads, [&](int tid) {
    walk_all(ops, tid, q.threads, MinAcc{q.metric, B, &best});
  });
  return {best.load(), true};
}

WeightResult min_weight_bz(const WeightQuery& q) {
  validate_query(q);
  const LinearCode& C = q.code;
  const size_t nconv = convention_n(q.metric, C);
  if (C.dim() == 0) return {nconv, true};
  if (q.exclude && q.exclude->dim() == C.dim()) return {nconv, true};
  if (bits_of(C) <= 8.0) return min_weight_enum(q);

  const size_t k = C.dim();
  const size_t denom = q.metric == WeightMetric::Symplectic ? 2 : 1;
  std::vector<Window> ws = build_windows(C, q.metric);
  std::vector<RowOps> ops;
  ops.reserve(ws.size());
  for (const Window& w : ws) ops.emplace_back(w.G);

  std::atomic<size_t> best{nconv};
  const LinearCode* B = q.exclude ? &*q.exclude : nullptr;
  auto lower = [&] {
    size_t s = 0;
    for (const Window& w : ws) s += contribution(w, denom);
    return s;
  };

  for (size_t j = 1; j <= k; ++j) {
    for (size_t s = 0; s < ws.size(); ++s) {
      size_t lb = lower();
      size_t b = best.load();
      if (lb >= b) return {b, true};
      if (q.threshold != 0 && lb > q.threshold && b > q.threshold) return {lb, false};
      // Rounds below a window's defect raise no bound; visit such
      // windows only during the cheap opening rounds.  When one becomes
      // useful again it must first catch up the rounds it sat out, or
      // its `done` count would overstate the coverage behind the bound.
      if (j > 2 && ws[s].def > j) continue;
      for (size_t jj = ws[s].done + 1; jj <= j; ++jj) {
        run_workers(q.threads, [&](int tid) {
          walk_weight(ops[s], jj, tid, q.threads, MinAcc{q.metric, B, &best});
        });
      }
      ws[s].done = j;
    }
  }
  // Window 0 has no defect, so finishing round k enumerated everything.
  return {best.load(), true};
}

WeightResult min_weight(const WeightQuery& q) {
  validate_query(q);
  if (q.code.dim() == 0 || bits_of(q.code) <= 24.0) return min_weight_enum(q);
  return min_weight_bz(q);
}

WeightResult min_symplectic_weight(const LinearCode& C, size_t threshold, int threads) {
  WeightQuery q;
  q.code = C;
  q.metric = WeightMetric::Symplectic;
  q.threshold = threshold;
  q.threads = threads;
  return min_weight_bz(q);
}

std::vector<u64> weight_enumerator_prefix(const LinearCode& C, size_t up_to,
                                          WeightMetric metric, int threads) {
  if (metric == WeightMetric::Symplectic && C.n() % 2 != 0)
    throw std::invalid_argument("wdist: symplectic metric needs even length");
  const size_t nconv = convention_n(metric, C);
  up_to = std::min(up_to, nconv);
  std::vector<u64> A(up_to + 1, 0);
  A[0] = 1;
  if (C.dim() == 0) return A;
  const u64 q = C.field().size();
  const size_t k = C.dim();

  std::vector<std::vector<u64>> local(std::max(1, threads),
                                      std::vector<u64>(up_to + 1, 0));

  if (bits_of(C) <= 28.0 + 1e-9) {
    RowOps ops(C.gen());
    run_workers(threads, [&](int tid) {
      std::vector<u64>& mine = local[tid];
      walk_all(ops, tid, threads, [&](const Vec& v) {
        size_t w = metric_weight(metric, v);
        if (w <= up_to) mine[w] += 1;
      });
    });
    for (const std::vector<u64>& m : local)
      for (size_t w = 1; w <= up_to; ++w) A[w] += (q - 1) * m[w];
    return A;
  }

  // Bounded-weight route: enumerate few-coefficient combinations on each
  // window until every codeword of weight <= up_to is certified seen,
  // counting each one at the first window that sees it.
  const size_t denom = metric == WeightMetric::Symplectic ? 2 : 1;
  std::vector<Window> ws = build_windows(C, metric);
  auto plan_sum = [&](size_t J) {
    size_t s = 0;
    for (const Window& w : ws) {
      size_t raw = J + 1 > w.def ? J + 1 - w.def : 0;
      s += (raw + denom - 1) / denom;
    }
    return s;
  };
  size_t J = 0;
  while (plan_sum(J) <= up_to && J < k) ++J;
  std::vector<size_t> rounds(ws.size(), 0);
  for (size_t s = 0; s < ws.size(); ++s)
    if (J + 1 > ws[s].def || s == 0) rounds[s] = J;

  for (size_t s = 0; s < ws.size(); ++s) {
    if (rounds[s] == 0) continue;
    RowOps ops(ws[s].G);
    for (size_t j = 1; j <= rounds[s]; ++j) {
      run_workers(threads, [&](int tid) {
        std::vector<u64>& mine = local[tid];
        walk_weight(ops, j, tid, threads, [&](const Vec& v) {
          size_t w = metric_weight(metric, v);
          if (w > up_to) return;
          for (size_t t = 0; t < s; ++t) {
            if (rounds[t] == 0) continue;
            size_t cw = 0;
            for (size_t r = 0; r < k; ++r)
              if (v[ws[t].pivots[r]] != 0) ++cw;
            if (cw <= rounds[t]) return;  // counted at an earlier window
          }
          mine[w] += 1;
        });
      });
    }
  }
  for (const std::vector<u64>& m : local)
    for (size_t w = 1; w <= up_to; ++w) A[w] += (q - 1) * m[w];
  return A;
}

std::vector<u64> weight_enumerator(const LinearCode& C, WeightMetric metric,
                                   int threads) {
  if (metric == WeightMetric::Symplectic && C.n() % 2 != 0)
    throw std::invalid_argument("wdist: symplectic metric needs even length");
  const size_t nconv = convention_n(metric, C);
  std::vector<u64> A(nconv + 1, 0);
  A[0] = 1;
  if (C.dim() == 0) return A;
  if (bits_of(C) > 32.0 + 1e-9)
    throw std::invalid_argument("weight_enumerator: budget exceeded");
  const u64 q = C.field().size();

  RowOps ops(C.gen());
  std::vector<std::vector<u64>> local(std::max(1, threads),
                                      std::vector<u64>(nconv + 1, 0));
  run_workers(threads, [&](int tid) {
    std::vector<u64>& mine = local[tid];
    walk_all(ops, tid, threads,
             [&](const Vec& v) { mine[metric_weight(metric, v)] += 1; });
  });
  for (const std::vector<u64>& m : local)
    for (size_t w = 1; w <= nconv; ++w) A[w] += (q - 1) * m[w];
  return A;
}

std::vector<u64> macwilliams_transform(const std::vector<u64>& W, u64 q,
                                       size_t dim) {
  if (W.empty()) throw std::invalid_argument("macwilliams_transform: empty input");
  if (q < 2) throw std::invalid_argument("macwilliams_transform: bad field size");
  using i128 = __int128;
  const size_t n = W.size() - 1;

  std::vector<std::vector<i128>> binom(n + 1, std::vector<i128>(n + 1, 0));
  for (size_t i = 0; i <= n; ++i) {
    binom[i][0] = 1;
    for (size_t j = 1; j <= i; ++j)
      binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
  }
  std::vector<i128> qm1(n + 1, 1);
  for (size_t j = 1; j <= n; ++j) qm1[j] = qm1[j - 1] * static_cast<i128>(q - 1);

  // The alternating Krawtchouk sums stay below q^dim * max_j |K_j|
  // because the counts sum to exactly q^dim; keep that inside __int128.
  double qbits = std::log2(static_cast<double>(q));
  double kmax = 0;
  for (size_t j = 0; j <= n; ++j) {
    double lb = static_cast<double>(j) * std::log2(std::max<double>(1.0, q - 1.0));
    double lc = 0;
    for (size_t t = 0; t < j; ++t)
      lc += std::log2(static_cast<double>(n - t)) - std::log2(static_cast<double>(t + 1));
    kmax = std::max(kmax, lb + lc);
  }
  if (static_cast<double>(dim) * qbits + kmax + 2.0 > 126.0)
    throw std::invalid_argument("macwilliams_transform: input too large");

  i128 qk = 1;
  for (size_t t = 0; t < dim; ++t) qk *= static_cast<i128>(q);
  i128 total = 0;
  for (u64 a : W) total += static_cast<i128>(a);
  if (total != qk)
    throw std::invalid_argument("macwilliams_transform: counts do not sum to q^dim");

  std::vector<u64> out(n + 1, 0);
  for (size_t j = 0; j <= n; ++j) {
    i128 acc = 0;
    for (size_t i = 0; i <= n; ++i) {
      if (W[i] == 0) continue;
      i128 K = 0;
      for (size_t s = 0; s <= std::min(i, j); ++s) {
        if (j - s > n - i) continue;
        i128 term = qm1[j - s] * binom[i][s] * binom[n - i][j - s];
        K += (s % 2 == 0) ? term : -term;
      }
      acc += static_cast<i128>(W[i]) * K;
    }
    if (acc < 0 || acc % qk != 0)
      throw std::logic_error("macwilliams_transform: non-integral coefficient");
    i128 val = acc / qk;
    if (val > static_cast<i128>(~0ull >> 1))
      throw std::logic_error("macwilliams_transform: coefficient overflow");
    out[j] = static_cast<u64>(val);
  }
  return out;
}

}  // namespace qtx
