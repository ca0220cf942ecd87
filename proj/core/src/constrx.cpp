// Copyright 2026 the qtx authors
// SPDX-License-Identifier: Apache-2.0

#include "qtx/constrx.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "qtx/orthobasis.hpp"

namespace qtx {

namespace {

size_t field_m(const Field& F) {
  u64 p = F.p(), s = F.size();
  size_t m = 0;
  while (s > 1) {
    s /= p;
    ++m;
  }
  return m;
}

bool is_zero_mat(const Mat& A) {
  for (size_t i = 0; i < A.rows(); ++i)
    for (size_t j = 0; j < A.cols(); ++j)
      if (A(i, j) != 0) return false;
  return true;
}

Mat scaled_eye(Field F, size_t e, u64 v) {
  Mat I(F, e, e);
  for (size_t i = 0; i < e; ++i) I(i, i) = v;
  return I;
}

WeightResult run_weight(const LinearCode& code, std::optional<LinearCode> excl,
                        WeightMetric metric, const DistanceOptions& opt) {
  WeightQuery q;
  q.code = code;
  q.metric = metric;
  q.exclude = std::move(excl);
  q.threshold = opt.threshold;
  q.threads = opt.threads;
  return min_weight(q);
}

// Pure means no stabilizer element lighter than the code distance, so a
// threshold run answers the question without a full search.
Purity stabilizer_purity(const LinearCode& S, WeightMetric metric, size_t dq, int threads) {
  if (dq <= 1 || S.dim() == 0) return Purity::Pure;
  WeightQuery q;
  q.code = S;
  q.metric = metric;
  q.threshold = dq - 1;
  q.threads = threads;
  WeightResult r = min_weight(q);
  return (r.exact && r.value < dq) ? Purity::Impure : Purity::Pure;
}

// Basis of a complement of sub inside sup, deterministic or sampled.
Mat complement_in(const LinearCode& sub, const LinearCode& sup, std::mt19937_64* rng) {
  if (!is_subspace(sub, sup)) throw std::logic_error("complement_in: not a subspace");
  if (rng == nullptr) return complement_rows(sub.gen(), sup.gen());
  const Field F = sup.field();
  std::uniform_int_distribution<u64> coeff(0, F.size() - 1);
  size_t want = sup.dim() - sub.dim();
  Mat acc = sub.gen();
  Mat out(F, 0, sup.n());
  size_t r = rank(acc);
  for (size_t guard = 0; out.rows() < want; ++guard) {
    if (guard > 2048) throw std::logic_error("complement_in: sampling stalled");
    Vec v(sup.n(), 0);
    for (size_t i = 0; i < sup.dim(); ++i) {
      u64 c = coeff(*rng);
      if (c == 0) continue;
      const Vec g = sup.gen().row(i);
      for (size_t j = 0; j < v.size(); ++j) v[j] = F.add(v[j], F.mul(c, g[j]));
    }
    Mat trial = acc;
    trial.append_row(v);
    if (rank(trial) != r + 1) continue;
    acc = std::move(trial);
    ++r;
    out.append_row(v);
  }
  return out;
}

// Least symplectic weight over the words of A outside excl (zero always
// excluded), by F_p enumeration of the expansion span.  Empty search
// space yields the convention length/2; a span too large for the bit cap
// yields nullopt.
std::optional<size_t> additive_min_swt(const AdditiveCode& A, const LinearCode* excl,
                                       double bits_cap) {
  const LinearCode& E = A.expansion;
  const Field F = E.field();
  const u64 p = F.p();
  double bits = static_cast<double>(E.dim()) * std::log2(static_cast<double>(p));
  if (bits > bits_cap) return std::nullopt;
  size_t best = A.length() / 2;
  const Mat& G = E.gen();
  Vec cur(E.n(), 0);
  auto add_row = [&](size_t i) {
    const Vec g = G.row(i);
    for (size_t j = 0; j < cur.size(); ++j) cur[j] = F.add(cur[j], g[j]);
  };
  auto visit = [&]() {
    if (excl != nullptr && excl->contains(cur)) return;
    best = std::min(best, swt(psi_compress(A.B, cur)));
  };
  // Projective over F_p: the leading coefficient is pinned to one, since
  // prime-field scaling fixes supports on both sides of the compression.
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == G.rows()) {
      visit();
      return;
    }
    for (u64 c = 0; c < p; ++c) {
      self(self, i + 1);
      add_row(i);  // p additions in total, restoring the prefix sum
    }
  };
  for (size_t lead = 0; lead < G.rows(); ++lead) {
    add_row(lead);
    rec(rec, lead + 1);
    for (u64 c = 1; c < p; ++c) add_row(lead);  // clear the lead row
  }
  return best;
}

void trivial_window(QuantumParams& P) {
  P.d_lower = 1;
  P.d_upper = P.n;
  P.purity = Purity::Unknown;
}

}  // namespace

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::Hermitian: return "hermitian";
    case Regime::Symplectic: return "symplectic";
    case Regime::CSS: return "css";
    case Regime::TraceSymplectic: return "trace-symplectic";
  }
  return "?";
}

const char* purity_name(Purity p) {
  switch (p) {
    case Purity::Pure: return "pure";
    case Purity::Impure: return "impure";
    case Purity::Unknown: return "unknown";
  }
  return "?";
}

long long QuantumParams::k() const {
  if (!k_integral()) throw std::logic_error("QuantumParams: fractional q-ary dimension");
  return klogp / static_cast<long long>(m);
}

void QuantumParams::validate() const {
  if (n == 0) throw std::logic_error("QuantumParams: zero length");
  if (m == 0 || q == 0) throw std::logic_error("QuantumParams: missing field data");
  if (klogp < 0 || klogp > static_cast<long long>(m * n))
    throw std::logic_error("QuantumParams: dimension out of range");
  if (d_lower < 1 || d_upper < d_lower || d_upper > n)
    throw std::logic_error("QuantumParams: bad distance window");
}

bool QuantumParams::singleton_red_flag() const {
  long long rhs =
      (static_cast<long long>(n) - 2 * (static_cast<long long>(d_lower) - 1)) *
      static_cast<long long>(m);
  return klogp > rhs;
}

std::string QuantumParams::to_string() const {
  std::ostringstream os;
  os << "[[" << n << ", ";
  if (k_integral())
    os << k();
  else
    os << klogp << "/" << m;
  os << ", ";
  if (d_lower == d_upper)
    os << d_lower;
  else
    os << d_lower << ".." << d_upper;
  os << "]]_" << q;
  return os.str();
}

QuantumParams hermitian_construction(const LinearCode& C, const DistanceOptions& opt) {
  const Field F = C.field();
  const u64 q = hermitian_q(F);
  if (C.n() == 0) throw std::invalid_argument("hermitian_construction: empty code");
  if (!is_zero_mat(gram_matrix(C.gen(), IPKind::Hermitian)))
    throw std::invalid_argument("hermitian_construction: C is not Hermitian self-orthogonal");
  const size_t n = C.n(), k = C.dim();

  QuantumParams P;
  P.regime = Regime::Hermitian;
  P.n = n;
  P.q = q;
  P.m = field_m(F) / 2;
  P.klogp = (static_cast<long long>(n) - 2 * static_cast<long long>(k)) *
            static_cast<long long>(P.m);
  P.provenance = "hermitian construction";
  if (!opt.compute) {
    trivial_window(P);
    P.validate();
    return P;
  }

  const LinearCode D = dual(C, IPKind::Hermitian);
  if (D == C) {
    WeightResult r = run_weight(C, std::nullopt, WeightMetric::Hamming, opt);
    P.d_lower = r.value;
    P.d_upper = r.exact ? r.value : n;
    P.purity = Purity::Pure;
  } else {
    WeightResult r = run_weight(D, C, WeightMetric::Hamming, opt);
    P.d_lower = r.value;
    if (r.exact) {
      P.d_upper = r.value;
      P.purity = stabilizer_purity(C, WeightMetric::Hamming, r.value, opt.threads);
    } else {
      P.d_upper = n;
      P.purity = Purity::Unknown;
    }
  }
  P.validate();
  return P;
}

QuantumParams symplectic_construction(const LinearCode& C, const DistanceOptions& opt) {
  const Field F = C.field();
  if (C.n() == 0 || C.n() % 2 != 0)
    throw std::invalid_argument("symplectic_construction: length must be even and positive");
  if (!is_zero_mat(gram_matrix(C.gen(), IPKind::Symplectic)))
    throw std::invalid_argument("symplectic_construction: C is not symplectic self-orthogonal");
  const size_t n = C.n() / 2, k = C.dim();

  QuantumParams P;
  P.regime = Regime::Symplectic;
  P.n = n;
  P.q = F.size();
  P.m = field_m(F);
  P.klogp = (static_cast<long long>(n) - static_cast<long long>(k)) *
            static_cast<long long>(P.m);
  P.provenance = "symplectic construction";
  if (!opt.compute) {
    trivial_window(P);
    P.validate();
    return P;
  }

  const LinearCode D = dual(C, IPKind::Symplectic);
  if (D == C) {
    WeightResult r = run_weight(C, std::nullopt, WeightMetric::Symplectic, opt);
    P.d_lower = r.value;
    P.d_upper = r.exact ? r.value : n;
    P.purity = Purity::Pure;
  } else {
    WeightResult r = run_weight(D, C, WeightMetric::Symplectic, opt);
    P.d_lower = r.value;
    if (r.exact) {
      P.d_upper = r.value;
      P.purity = stabilizer_purity(C, WeightMetric::Symplectic, r.value, opt.threads);
    } else {
      P.d_upper = n;
      P.purity = Purity::Unknown;
    }
  }
  P.validate();
  return P;
}

QuantumParams css_construction(const LinearCode& C1, const LinearCode& C2,
                               const DistanceOptions& opt) {
  const Field F = C1.field();
  if (!(C2.field() == F)) throw std::invalid_argument("css_construction: mismatched fields");
  if (C1.n() != C2.n() || C1.n() == 0)
    throw std::invalid_argument("css_construction: mismatched lengths");
  const size_t n = C1.n(), k1 = C1.dim(), k2 = C2.dim();
  const LinearCode D1 = dual(C1, IPKind::Euclidean);
  const LinearCode D2 = dual(C2, IPKind::Euclidean);
  if (!is_subspace(D2, C1))
    throw std::invalid_argument("css_construction: C2 dual is not contained in C1");

  QuantumParams P;
  P.regime = Regime::CSS;
  P.n = n;
  P.q = F.size();
  P.m = field_m(F);
  P.klogp = (static_cast<long long>(k1 + k2) - static_cast<long long>(n)) *
            static_cast<long long>(P.m);
  P.provenance = "css construction";
  if (!opt.compute) {
    trivial_window(P);
    P.validate();
    return P;
  }

  if (D2 == C1) {
    WeightResult r1 = run_weight(C1, std::nullopt, WeightMetric::Hamming, opt);
    WeightResult r2 = run_weight(C2, std::nullopt, WeightMetric::Hamming, opt);
    P.d_lower = std::min(r1.value, r2.value);
    P.d_upper = (r1.exact && r2.exact) ? P.d_lower : n;
    P.purity = Purity::Pure;
  } else {
    WeightResult t1 = run_weight(C1, D2, WeightMetric::Hamming, opt);
    WeightResult t2 = run_weight(C2, D1, WeightMetric::Hamming, opt);
    P.d_lower = std::min(t1.value, t2.value);
    if (t1.exact && t2.exact) {
      P.d_upper = P.d_lower;
      Purity p1 = stabilizer_purity(C1, WeightMetric::Hamming, P.d_lower, opt.threads);
      Purity p2 = stabilizer_purity(C2, WeightMetric::Hamming, P.d_lower, opt.threads);
      P.purity = (p1 == Purity::Pure && p2 == Purity::Pure) ? Purity::Pure : Purity::Impure;
    } else {
      P.d_upper = n;
      P.purity = Purity::Unknown;
    }
  }
  P.validate();
  return P;
}

QuantumParams trace_symplectic_construction(const AdditiveCode& C, const DistanceOptions& opt) {
  if (C.length() == 0)
    throw std::invalid_argument("trace_symplectic_construction: empty code");
  const LinearCode& E = C.expansion;
  if (!is_zero_mat(gram_matrix(E.gen(), IPKind::Symplectic)))
    throw std::invalid_argument(
        "trace_symplectic_construction: C is not trace-symplectic self-orthogonal");
  const size_t m = C.m(), nhalf = C.length() / 2, kp = E.dim();

  QuantumParams P;
  P.regime = Regime::TraceSymplectic;
  P.n = nhalf;
  P.q = C.B.F.size();
  P.m = m;
  P.klogp = static_cast<long long>(m * nhalf) - static_cast<long long>(kp);
  P.provenance = "trace-symplectic construction";
  if (!opt.compute) {
    trivial_window(P);
    P.validate();
    return P;
  }

  const AdditiveCode D = additive_dual(C);
  const bool self_dual = D.expansion == E;
  auto w = additive_min_swt(D, self_dual ? nullptr : &E, opt.additive_bits);
  if (!w.has_value()) {
    trivial_window(P);
  } else {
    P.d_lower = P.d_upper = *w;
    if (self_dual) {
      P.purity = Purity::Pure;
    } else {
      auto wc = additive_min_swt(C, nullptr, opt.additive_bits);
      P.purity = (wc.has_value() && *wc < *w) ? Purity::Impure : Purity::Pure;
    }
  }
  P.validate();
  return P;
}

Extension extend_hermitian(const LinearCode& C, const DistanceOptions& opt,
                           std::mt19937_64* rng) {
  const Field F = C.field();
  const u64 q = hermitian_q(F);
  if (C.n() == 0) throw std::invalid_argument("extend_hermitian: empty code");
  const size_t n = C.n(), k = C.dim();

  const LinearCode D = dual(C, IPKind::Hermitian);
  const LinearCode H = intersect_codes(C, D);
  const size_t s = H.dim(), e = k - s;

  ExtensionWitness W;
  W.regime = Regime::Hermitian;
  W.e = e;
  W.M = H.gen();
  Mat V = rng ? hull_complement(C, IPKind::Hermitian, *rng)
              : hull_complement(C, IPKind::Hermitian);
  W.B = hermitian_orthonormalize(V).basis;
  W.A = rng ? hull_complement(D, IPKind::Hermitian, *rng)
            : hull_complement(D, IPKind::Hermitian);
  W.beta = solve_norm(F, F.neg(1));

  const Mat top = hstack(W.A, Mat::zero(F, W.A.rows(), e));
  const Mat mid = hstack(W.M, Mat::zero(F, s, e));
  const Mat bot = hstack(W.B, scaled_eye(F, e, W.beta));
  W.G = vstack(vstack(top, mid), bot);
  W.Cprime = LinearCode::from_span(F, vstack(mid, bot));

  if (!is_zero_mat(gram_matrix(W.Cprime.gen(), IPKind::Hermitian)))
    throw std::logic_error("extend_hermitian: extension is not self-orthogonal");
  if (W.Cprime.dim() != k)
    throw std::logic_error("extend_hermitian: extension dimension drifted");
  if (!(gram_matrix(W.B, IPKind::Hermitian) == Mat::eye(F, e)))
    throw std::logic_error("extend_hermitian: complement basis is not orthonormal");
  if (rank(W.G) != n + e - k ||
      !(LinearCode::from_span(F, W.G) == dual(W.Cprime, IPKind::Hermitian)))
    throw std::logic_error("extend_hermitian: dual generator mismatch");

  QuantumParams P;
  P.regime = Regime::Hermitian;
  P.n = n + e;
  P.q = q;
  P.m = field_m(F) / 2;
  P.klogp = (static_cast<long long>(n + e) - 2 * static_cast<long long>(k)) *
            static_cast<long long>(P.m);
  {
    std::ostringstream os;
    os << "hermitian extension, e=" << e;
    P.provenance = os.str();
  }

  if (!opt.compute) {
    trivial_window(P);
  } else if (P.klogp == 0) {
    WeightResult r = run_weight(W.Cprime, std::nullopt, WeightMetric::Hamming, opt);
    P.d_lower = r.value;
    P.d_upper = r.exact ? r.value : n + e;
    P.purity = Purity::Pure;
    if (r.exact) W.d_pure = r.value;
  } else {
    const LinearCode S = sum_codes(C, D);
    WeightResult w1 = run_weight(D, H, WeightMetric::Hamming, opt);
    WeightResult w2 = run_weight(S, C, WeightMetric::Hamming, opt);
    P.d_lower = std::min(w1.value, w2.value + 1);
    P.d_upper = w1.exact ? w1.value : n + e;
    P.purity = Purity::Unknown;
    if (w1.exact && w2.exact) {
      WeightResult wh = run_weight(H, std::nullopt, WeightMetric::Hamming, opt);
      WeightResult wc = run_weight(C, std::nullopt, WeightMetric::Hamming, opt);
      if (wh.exact && wc.exact)
        W.d_pure = std::min(std::min(w1.value, wh.value),
                            std::min(w2.value, wc.value) + 1);
      if (P.d_lower == P.d_upper)
        P.purity = stabilizer_purity(W.Cprime, WeightMetric::Hamming, P.d_lower, opt.threads);
    }
  }
  P.validate();
  return Extension{std::move(W), std::move(P)};
}

Extension extend_symplectic(const LinearCode& C, const DistanceOptions& opt,
                            std::mt19937_64* rng) {
  const Field F = C.field();
  if (C.n() == 0 || C.n() % 2 != 0)
    throw std::invalid_argument("extend_symplectic: length must be even and positive");
  const size_t n = C.n() / 2, k = C.dim();

  const LinearCode D = dual(C, IPKind::Symplectic);
  const LinearCode H = intersect_codes(C, D);
  const size_t s = H.dim();
  if ((k - s) % 2 != 0) throw std::logic_error("extend_symplectic: odd hull codimension");
  const size_t e = (k - s) / 2;

  ExtensionWitness W;
  W.regime = Regime::Symplectic;
  W.e = e;
  W.M = H.gen();
  Mat V = rng ? hull_complement(C, IPKind::Symplectic, *rng)
              : hull_complement(C, IPKind::Symplectic);
  W.B = symplectic_pair_basis(V).basis;
  W.A = rng ? hull_complement(D, IPKind::Symplectic, *rng)
            : hull_complement(D, IPKind::Symplectic);

  Mat even(F, 0, 2 * n), odd(F, 0, 2 * n);
  for (size_t i = 0; i < e; ++i) {
    even.append_row(W.B.row(2 * i));
    odd.append_row(W.B.row(2 * i + 1));
  }
  W.B11 = take_cols(even, 0, n);
  W.B12 = take_cols(even, n, 2 * n);
  W.B21 = take_cols(odd, 0, n);
  W.B22 = take_cols(odd, n, 2 * n);

  // Columns (n | e | n | e).
  auto wide = [&](const Mat& X, const Mat& E1, const Mat& E2) {
    return hstack(hstack(take_cols(X, 0, n), E1), hstack(take_cols(X, n, 2 * n), E2));
  };
  const Mat top = wide(W.A, Mat::zero(F, W.A.rows(), e), Mat::zero(F, W.A.rows(), e));
  const Mat mid = wide(W.M, Mat::zero(F, s, e), Mat::zero(F, s, e));
  const Mat be = wide(even, Mat::eye(F, e), Mat::zero(F, e, e));
  const Mat bo = wide(odd, Mat::zero(F, e, e), scaled_eye(F, e, F.neg(1)));
  W.G = vstack(vstack(top, mid), vstack(be, bo));
  W.Cprime = LinearCode::from_span(F, vstack(mid, vstack(be, bo)));

  if (!is_zero_mat(gram_matrix(W.Cprime.gen(), IPKind::Symplectic)))
    throw std::logic_error("extend_symplectic: extension is not self-orthogonal");
  if (W.Cprime.dim() != k)
    throw std::logic_error("extend_symplectic: extension dimension drifted");
  if (rank(W.G) != 2 * (n + e) - k ||
      !(LinearCode::from_span(F, W.G) == dual(W.Cprime, IPKind::Symplectic)))
    throw std::logic_error("extend_symplectic: dual generator mismatch");

  QuantumParams P;
  P.regime = Regime::Symplectic;
  P.n = n + e;
  P.q = F.size();
  P.m = field_m(F);
  P.klogp = (static_cast<long long>(n + e) - static_cast<long long>(k)) *
            static_cast<long long>(P.m);
  {
    std::ostringstream os;
    os << "symplectic extension, e=" << e;
    P.provenance = os.str();
  }

  if (!opt.compute) {
    trivial_window(P);
  } else if (P.klogp == 0) {
    WeightResult r = run_weight(W.Cprime, std::nullopt, WeightMetric::Symplectic, opt);
    P.d_lower = r.value;
    P.d_upper = r.exact ? r.value : n + e;
    P.purity = Purity::Pure;
    if (r.exact) W.d_pure = r.value;
  } else {
    const LinearCode S = sum_codes(C, D);
    WeightResult w1 = run_weight(D, H, WeightMetric::Symplectic, opt);
    WeightResult w2 = run_weight(S, C, WeightMetric::Symplectic, opt);
    P.d_lower = std::min(w1.value, w2.value + 1);
    P.d_upper = w1.exact ? w1.value : n + e;
    P.purity = Purity::Unknown;
    if (w1.exact && w2.exact) {
      WeightResult wh = run_weight(H, std::nullopt, WeightMetric::Symplectic, opt);
      WeightResult wc = run_weight(C, std::nullopt, WeightMetric::Symplectic, opt);
      if (wh.exact && wc.exact)
        W.d_pure = std::min(std::min(w1.value, wh.value),
                            std::min(w2.value, wc.value) + 1);
      if (P.d_lower == P.d_upper)
        P.purity =
            stabilizer_purity(W.Cprime, WeightMetric::Symplectic, P.d_lower, opt.threads);
    }
  }
  P.validate();
  return Extension{std::move(W), std::move(P)};
}

Extension extend_css(const LinearCode& C1, const LinearCode& C2, const DistanceOptions& opt,
                     std::mt19937_64* rng) {
  const Field F = C1.field();
  if (!(C2.field() == F)) throw std::invalid_argument("extend_css: mismatched fields");
  if (C1.n() != C2.n() || C1.n() == 0)
    throw std::invalid_argument("extend_css: mismatched lengths");
  const size_t n = C1.n(), k1 = C1.dim(), k2 = C2.dim();

  const LinearCode D1 = dual(C1, IPKind::Euclidean);
  const LinearCode D2 = dual(C2, IPKind::Euclidean);
  const LinearCode C12 = intersect_codes(C1, D2);
  const LinearCode C21 = intersect_codes(C2, D1);
  const long long e1 = static_cast<long long>(n - k2) - static_cast<long long>(C12.dim());
  const long long e2 = static_cast<long long>(n - k1) - static_cast<long long>(C21.dim());
  if (e1 != e2) throw std::invalid_argument("extend_css: defect mismatch");
  const size_t e = static_cast<size_t>(e1);

  ExtensionWitness W;
  W.regime = Regime::CSS;
  W.e = e;
  W.M12 = C12.gen();
  W.M21 = C21.gen();
  W.A = complement_in(C12, C1, rng);
  W.A2 = complement_in(C21, C2, rng);
  W.B12 = complement_in(C12, D2, rng);
  W.B21 = complement_in(C21, D1, rng);
  W.E = mat_mul(W.B12, transpose(W.B21));
  if (rank(W.E) != e) throw std::logic_error("extend_css: pairing matrix is singular");

  Mat negE(F, e, e);
  for (size_t i = 0; i < e; ++i)
    for (size_t j = 0; j < e; ++j) negE(i, j) = F.neg(W.E(i, j));

  // Columns (n | e | n | e).
  auto wide = [&](const Mat& P1, const Mat& P2, const Mat& P3, const Mat& P4) {
    return hstack(hstack(P1, P2), hstack(P3, P4));
  };
  auto zn = [&](size_t r) { return Mat::zero(F, r, n); };
  auto ze = [&](size_t r) { return Mat::zero(F, r, e); };
  const Mat r1 = wide(W.A, ze(W.A.rows()), zn(W.A.rows()), ze(W.A.rows()));
  const Mat r2 = wide(zn(W.A2.rows()), ze(W.A2.rows()), W.A2, ze(W.A2.rows()));
  const Mat r3 = wide(W.M12, ze(W.M12.rows()), zn(W.M12.rows()), ze(W.M12.rows()));
  const Mat r4 = wide(zn(W.M21.rows()), ze(W.M21.rows()), W.M21, ze(W.M21.rows()));
  const Mat r5 = wide(W.B12, negE, zn(e), ze(e));
  const Mat r6 = wide(zn(e), ze(e), W.B21, Mat::eye(F, e));
  W.G = vstack(vstack(r1, r2), vstack(vstack(r3, r4), vstack(r5, r6)));
  W.Cprime = LinearCode::from_span(F, vstack(vstack(r3, r4), vstack(r5, r6)));

  if (!is_zero_mat(gram_matrix(W.Cprime.gen(), IPKind::Symplectic)))
    throw std::logic_error("extend_css: extension is not self-orthogonal");
  if (W.Cprime.dim() != 2 * n - k1 - k2)
    throw std::logic_error("extend_css: extension dimension drifted");
  if (rank(W.G) != k1 + k2 + 2 * e ||
      !(LinearCode::from_span(F, W.G) == dual(W.Cprime, IPKind::Symplectic)))
    throw std::logic_error("extend_css: dual generator mismatch");

  QuantumParams P;
  P.regime = Regime::CSS;
  P.n = n + e;
  P.q = F.size();
  P.m = field_m(F);
  P.klogp = (static_cast<long long>(k1 + k2 + e) - static_cast<long long>(n)) *
            static_cast<long long>(P.m);
  {
    std::ostringstream os;
    os << "css extension, e=" << e;
    P.provenance = os.str();
  }

  if (!opt.compute) {
    trivial_window(P);
  } else if (P.klogp == 0) {
    WeightResult r = run_weight(W.Cprime, std::nullopt, WeightMetric::Symplectic, opt);
    P.d_lower = r.value;
    P.d_upper = r.exact ? r.value : n + e;
    P.purity = Purity::Pure;
    if (r.exact) W.d_pure = r.value;
  } else {
    WeightResult t1 = run_weight(C1, C12, WeightMetric::Hamming, opt);
    WeightResult t2 = run_weight(C2, C21, WeightMetric::Hamming, opt);
    const LinearCode S1 = sum_codes(C1, D2);
    const LinearCode S2 = sum_codes(C2, D1);
    WeightResult t3 = run_weight(S1, D2, WeightMetric::Hamming, opt);
    WeightResult t4 = run_weight(S2, D1, WeightMetric::Hamming, opt);
    P.d_lower = std::min(std::min(t1.value, t2.value),
                         std::min(t3.value, t4.value) + 1);
    P.d_upper = (t1.exact && t2.exact) ? std::min(t1.value, t2.value) : n + e;
    P.purity = Purity::Unknown;
    if (t1.exact && t2.exact && t3.exact && t4.exact) {
      WeightResult u1 = run_weight(C12, std::nullopt, WeightMetric::Hamming, opt);
      WeightResult u2 = run_weight(C21, std::nullopt, WeightMetric::Hamming, opt);
      WeightResult u3 = run_weight(D2, std::nullopt, WeightMetric::Hamming, opt);
      WeightResult u4 = run_weight(D1, std::nullopt, WeightMetric::Hamming, opt);
      if (u1.exact && u2.exact && u3.exact && u4.exact)
        W.d_pure = std::min(std::min(std::min(t1.value, u1.value), std::min(t2.value, u2.value)),
                            std::min(std::min(t3.value, u3.value), std::min(t4.value, u4.value)) + 1);
      if (P.d_lower == P.d_upper)
        P.purity =
            stabilizer_purity(W.Cprime, WeightMetric::Symplectic, P.d_lower, opt.threads);
    }
  }
  P.validate();
  return Extension{std::move(W), std::move(P)};
}

Extension extend_trace_symplectic(const AdditiveCode& C, const DistanceOptions& opt,
                                  std::mt19937_64* rng) {
  if (C.length() == 0) throw std::invalid_argument("extend_trace_symplectic: empty code");
  const size_t m = C.m(), nhalf = C.length() / 2;
  const LinearCode& Ex = C.expansion;
  const Field Fp = Ex.field();
  const size_t N = m * nhalf, kp = Ex.dim();

  DistanceOptions inner_opt = opt;
  inner_opt.compute = false;
  Extension inner = extend_symplectic(Ex, inner_opt, rng);
  const size_t e = inner.witness.e;
  const size_t t = (m - e % m) % m;
  const size_t half = N + e;

  // Direct product with t copies of the self-dual pair (1 | 0), placed
  // as extra columns at the end of each half, lifts the padded length to
  // a multiple of 2m without changing the code space size.
  auto pad_split = [&](const Mat& X) {
    Mat out(Fp, X.rows(), 2 * (half + t));
    for (size_t i = 0; i < X.rows(); ++i)
      for (size_t j = 0; j < half; ++j) {
        out(i, j) = X(i, j);
        out(i, half + t + j) = X(i, half + j);
      }
    return out;
  };
  Mat units(Fp, t, 2 * (half + t));
  for (size_t i = 0; i < t; ++i) units(i, half + i) = 1;

  ExtensionWitness W = std::move(inner.witness);
  W.regime = Regime::TraceSymplectic;
  Mat padded_rows = vstack(pad_split(W.Cprime.gen()), units);
  W.Cprime = LinearCode::from_span(Fp, padded_rows);
  W.G = vstack(pad_split(W.G), units);

  if ((half + t) % m != 0) throw std::logic_error("extend_trace_symplectic: padding arithmetic");
  if (W.Cprime.dim() != kp + t)
    throw std::logic_error("extend_trace_symplectic: padding dropped rank");
  if (!(LinearCode::from_span(Fp, W.G) == dual(W.Cprime, IPKind::Symplectic)))
    throw std::logic_error("extend_trace_symplectic: dual generator mismatch");
  AdditiveCode Cp = additive_from_expansion(C.B, W.Cprime);

  QuantumParams P;
  P.regime = Regime::TraceSymplectic;
  P.q = C.B.F.size();
  P.m = m;
  P.n = nhalf + (e + m - 1) / m;
  P.klogp = static_cast<long long>(m * nhalf) -
            (static_cast<long long>(kp) - static_cast<long long>(e));
  {
    std::ostringstream os;
    os << "trace-symplectic extension, e=" << e;
    P.provenance = os.str();
  }

  if (!opt.compute) {
    trivial_window(P);
  } else if (P.klogp == 0) {
    auto w = additive_min_swt(Cp, nullptr, opt.additive_bits);
    if (!w.has_value()) {
      trivial_window(P);
    } else {
      P.d_lower = P.d_upper = *w;
      P.purity = Purity::Pure;
      W.d_pure = *w;
    }
  } else {
    const AdditiveCode D = additive_dual(C);
    const AdditiveCode H = additive_hull(C);
    const AdditiveCode S = additive_sum(C, D);
    auto w1 = additive_min_swt(D, &H.expansion, opt.additive_bits);
    auto w2 = additive_min_swt(S, &Ex, opt.additive_bits);
    if (!w1.has_value() || !w2.has_value()) {
      trivial_window(P);
    } else {
      P.d_lower = std::min(*w1, *w2 + 1);
      P.d_upper = *w1;
      P.purity = Purity::Unknown;
      auto wh = additive_min_swt(H, nullptr, opt.additive_bits);
      auto wc = additive_min_swt(C, nullptr, opt.additive_bits);
      if (wh.has_value() && wc.has_value())
        W.d_pure = std::min(std::min(*w1, *wh), std::min(*w2, *wc) + 1);
      if (P.d_lower == P.d_upper) {
        auto wcp = additive_min_swt(Cp, nullptr, opt.additive_bits);
        if (wcp.has_value())
          P.purity = (*wcp < P.d_lower) ? Purity::Impure : Purity::Pure;
      }
    }
  }
  P.validate();
  return Extension{std::move(W), std::move(P)};
}

std::vector<QuantumParams> propagate(const QuantumParams& p) {
  p.validate();
  if (!p.k_integral())
    throw std::invalid_argument("propagate: fractional q-ary dimension");
  const long long k = p.k();
  const long long mm = static_cast<long long>(p.m);
  std::vector<QuantumParams> out;
  auto push = [&](QuantumParams r, const char* rule) {
    r.provenance = p.provenance.empty() ? rule : p.provenance + "; " + rule;
    r.validate();
    out.push_back(std::move(r));
  };

  if (k > 1 || (k == 1 && p.purity == Purity::Pure)) {
    QuantumParams r = p;
    r.klogp -= mm;
    r.d_upper = r.n;
    r.purity = Purity::Unknown;
    push(std::move(r), "subcode");
  }
  if (k > 0) {
    QuantumParams r = p;
    r.n += 1;
    r.d_upper = r.n;
    r.purity = Purity::Unknown;
    push(std::move(r), "lengthen");
  }
  if (p.n >= 2 && p.d_lower >= 2 && k <= static_cast<long long>(p.n) - 1) {
    QuantumParams r = p;
    r.n -= 1;
    r.d_lower -= 1;
    r.d_upper = r.n;
    r.purity = Purity::Unknown;
    push(std::move(r), "puncture");
  }
  if (p.purity == Purity::Pure && p.d_lower == p.d_upper && p.d_lower >= 2 && p.n >= 2 &&
      k + 1 <= static_cast<long long>(p.n) - 1) {
    QuantumParams r = p;
    r.n -= 1;
    r.klogp += mm;
    r.d_lower -= 1;
    r.d_upper = r.d_lower;
    r.purity = Purity::Pure;
    push(std::move(r), "pure trade");
  }
  return out;
}

namespace {

// a covers b: same parameter point or better in every tracked respect.
// Purity counts: a pure claim is strictly more informative, so a
// non-pure entry never covers a pure one.
bool supersedes(const QuantumParams& a, const QuantumParams& b) {
  if (a.q != b.q || a.n != b.n) return false;
  if (a.klogp < b.klogp || a.d_lower < b.d_lower) return false;
  if (b.purity == Purity::Pure && a.purity != Purity::Pure) return false;
  return true;
}

}  // namespace

bool dominates(const QuantumParams& a, const QuantumParams& b) {
  return supersedes(a, b) && (a.klogp > b.klogp || a.d_lower > b.d_lower);
}

std::vector<QuantumParams> propagate_closure(const QuantumParams& p, int depth) {
  std::vector<QuantumParams> all{p};
  std::vector<QuantumParams> frontier{p};
  for (int step = 0; step < depth && !frontier.empty(); ++step) {
    std::vector<QuantumParams> next;
    for (const QuantumParams& f : frontier) {
      for (QuantumParams& r : propagate(f)) {
        bool covered = false;
        for (const QuantumParams& x : all)
          if (supersedes(x, r)) {
            covered = true;
            break;
          }
        if (covered) continue;
        all.erase(std::remove_if(all.begin(), all.end(),
                                 [&](const QuantumParams& x) { return supersedes(r, x); }),
                  all.end());
        all.push_back(r);
        next.push_back(std::move(r));
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const QuantumParams& a, const QuantumParams& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.klogp != b.klogp) return a.klogp > b.klogp;
    return a.d_lower > b.d_lower;
  });
  return all;
}

}  // namespace qtx
