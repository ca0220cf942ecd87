// Copyright 2026 the qtx authors
// SPDX-License-Identifier: Apache-2.0

#include "qtx/codes.hpp"

#include <stdexcept>

namespace qtx {

namespace {

void check_same_length(const Vec& u, const Vec& v, const char* who) {
  if (u.size() != v.size())
    throw std::invalid_argument(std::string(who) + ": length mismatch");
}

// Digits of a quadratic-extension element over the level below.
std::pair<u64, u64> quad_digits(const Field& Fq2, u64 x) {
  const u64 q = Fq2.tw->size(Fq2.lvl - 1);
  return {x % q, x / q};
}

struct PhiBasis {
  Field Fq;
  u64 alpha, beta;
  // Inverse of the column matrix (digits(alpha) | digits(beta)) over F_q.
  u64 i00, i01, i10, i11;
};

PhiBasis resolve_phi_basis(const Field& Fq2, u64 alpha, u64 beta) {
  if (Fq2.lvl < 1 || Fq2.tw->degree(Fq2.lvl) != 2)
    throw std::invalid_argument("phi: field is not a quadratic extension of the level below");
  if (alpha == 0 && beta == 0) {
    alpha = 1;
    beta = Fq2.generator();
  }
  const Field Fq = Fq2.tw->field(Fq2.lvl - 1);
  auto [a0, a1] = quad_digits(Fq2, alpha);
  auto [b0, b1] = quad_digits(Fq2, beta);
  const u64 det = Fq.sub(Fq.mul(a0, b1), Fq.mul(b0, a1));
  if (det == 0) throw std::invalid_argument("phi: {alpha, beta} is not a basis");
  const u64 dinv = Fq.inv(det);
  PhiBasis B;
  B.Fq = Fq;
  B.alpha = alpha;
  B.beta = beta;
  B.i00 = Fq.mul(dinv, b1);
  B.i01 = Fq.mul(dinv, Fq.neg(b0));
  B.i10 = Fq.mul(dinv, Fq.neg(a1));
  B.i11 = Fq.mul(dinv, a0);
  return B;
}

}  // namespace

size_t wgt(const Vec& v) {
  size_t w = 0;
  for (u64 x : v) w += x != 0;
  return w;
}

size_t swt(const Vec& v) {
  if (v.size() % 2 != 0) throw std::invalid_argument("swt: odd length");
  const size_t n = v.size() / 2;
  size_t w = 0;
  for (size_t i = 0; i < n; ++i) w += (v[i] != 0 || v[n + i] != 0);
  return w;
}

u64 ip_euclidean(const Field& F, const Vec& u, const Vec& v) {
  check_same_length(u, v, "ip_euclidean");
  u64 s = 0;
  for (size_t i = 0; i < u.size(); ++i) s = F.add(s, F.mul(u[i], v[i]));
  return s;
}

u64 hermitian_q(const Field& F) {
  const u64 N = F.size();
  u64 q = 1;
  while (q * q < N) ++q;
  if (q * q != N)
    throw std::invalid_argument("hermitian_q: field size is not a perfect square");
  return q;
}

u64 ip_hermitian(const Field& F, const Vec& u, const Vec& v) {
  check_same_length(u, v, "ip_hermitian");
  const u64 q = hermitian_q(F);
  u64 s = 0;
  for (size_t i = 0; i < u.size(); ++i) s = F.add(s, F.mul(u[i], F.pow(v[i], q)));
  return s;
}

u64 ip_symplectic(const Field& F, const Vec& u, const Vec& v) {
  check_same_length(u, v, "ip_symplectic");
  if (u.size() % 2 != 0) throw std::invalid_argument("ip_symplectic: odd length");
  const size_t n = u.size() / 2;
  u64 s = 0;
  for (size_t i = 0; i < n; ++i) {
    s = F.add(s, F.mul(u[i], v[n + i]));
    s = F.sub(s, F.mul(u[n + i], v[i]));
  }
  return s;
}

u64 ip_trace_symplectic(const Field& F, const Vec& u, const Vec& v) {
  return F.tw->trace_to(F.lvl, 0, ip_symplectic(F, u, v));
}

u64 inner_product(const Field& F, const Vec& u, const Vec& v, IPKind kind) {
  switch (kind) {
    case IPKind::Euclidean: return ip_euclidean(F, u, v);
    case IPKind::Hermitian: return ip_hermitian(F, u, v);
    case IPKind::Symplectic: return ip_symplectic(F, u, v);
    case IPKind::TraceSymplectic: return ip_trace_symplectic(F, u, v);
  }
  throw std::logic_error("inner_product: bad kind");
}

Mat gram_matrix(const Mat& A, IPKind kind) {
  const Field& F = A.field();
  Mat G(F, A.rows(), A.rows());
  for (size_t i = 0; i < A.rows(); ++i) {
    Vec u = A.row(i);
    for (size_t j = 0; j < A.rows(); ++j)
      G(i, j) = inner_product(F, u, A.row(j), kind);
  }
  return G;
}

Vec tau_swap(const Field& F, const Vec& v) {
  if (v.size() % 2 != 0) throw std::invalid_argument("tau_swap: odd length");
  const size_t n = v.size() / 2;
  Vec out(v.size());
  for (size_t i = 0; i < n; ++i) {
    out[i] = v[n + i];
    out[n + i] = F.neg(v[i]);
  }
  return out;
}

Vec phi_compress(const Field& Fq2, const Vec& ab, u64 alpha, u64 beta) {
  PhiBasis B = resolve_phi_basis(Fq2, alpha, beta);
  if (ab.size() % 2 != 0) throw std::invalid_argument("phi_compress: odd length");
  for (u64 x : ab)
    if (x >= B.Fq.size())
      throw std::invalid_argument("phi_compress: entries must lie in F_q");
  const size_t n = ab.size() / 2;
  Vec out(n);
  for (size_t i = 0; i < n; ++i)
    out[i] = Fq2.add(Fq2.mul(B.alpha, ab[i]), Fq2.mul(B.beta, ab[n + i]));
  return out;
}

Vec phi_expand(const Field& Fq2, const Vec& v, u64 alpha, u64 beta) {
  PhiBasis B = resolve_phi_basis(Fq2, alpha, beta);
  const size_t n = v.size();
  Vec out(2 * n);
  for (size_t i = 0; i < n; ++i) {
    auto [v0, v1] = quad_digits(Fq2, v[i]);
    out[i] = B.Fq.add(B.Fq.mul(B.i00, v0), B.Fq.mul(B.i01, v1));
    out[n + i] = B.Fq.add(B.Fq.mul(B.i10, v0), B.Fq.mul(B.i11, v1));
  }
  return out;
}

u64 trace_alternating(const Field& Fq2, const Vec& u, const Vec& v,
                      u64 alpha, u64 beta) {
  PhiBasis B = resolve_phi_basis(Fq2, alpha, beta);
  const u64 q = Fq2.tw->size(Fq2.lvl - 1);
  const u64 denom =
      Fq2.sub(Fq2.mul(B.alpha, Fq2.pow(B.beta, q)), Fq2.mul(Fq2.pow(B.alpha, q), B.beta));
  const u64 s = Fq2.sub(ip_hermitian(Fq2, u, v), ip_hermitian(Fq2, v, u));
  const u64 arg = Fq2.mul(s, Fq2.inv(denom));
  if (arg >= q) throw std::logic_error("trace_alternating: argument not in F_q");
  return Fq2.tw->trace_to(Fq2.lvl - 1, 0, arg);
}

PsiBasis make_psi_basis(const Field& F, std::vector<u64> basis) {
  PsiBasis B;
  B.F = F;
  B.Fp = F.tw->field(0);
  u64 m = 1;
  for (int i = 1; i <= F.lvl; ++i) m *= F.tw->degree(i);
  if (basis.empty())
    for (u64 j = 0; j < m; ++j) basis.push_back(F.pow(F.generator(), j));
  if (basis.size() != m) throw std::invalid_argument("make_psi_basis: wrong basis size");
  B.basis = std::move(basis);

  // Trace Gram matrix of the basis over F_p; its inverse columns give the
  // trace-dual basis.
  Mat T(B.Fp, m, m);
  for (u64 i = 0; i < m; ++i)
    for (u64 j = 0; j < m; ++j)
      T(i, j) = F.tw->trace_to(F.lvl, 0, F.mul(B.basis[i], B.basis[j]));
  Mat TI = hstack(T, Mat::eye(B.Fp, m));
  std::vector<size_t> piv = rref(TI);
  if (piv.size() != m || TI.rows() != m)
    throw std::invalid_argument("make_psi_basis: degenerate basis");
  B.dual.assign(m, 0);
  for (u64 j = 0; j < m; ++j) {
    u64 d = 0;
    for (u64 k = 0; k < m; ++k) d = F.add(d, F.mul(TI(k, m + j), B.basis[k]));
    B.dual[j] = d;
  }
  return B;
}

std::vector<u64> basis_coords(const PsiBasis& B, u64 x) {
  std::vector<u64> c(B.basis.size());
  for (size_t j = 0; j < B.basis.size(); ++j)
    c[j] = B.F.tw->trace_to(B.F.lvl, 0, B.F.mul(x, B.dual[j]));
  return c;
}

std::vector<u64> dual_basis_coords(const PsiBasis& B, u64 x) {
  std::vector<u64> c(B.basis.size());
  for (size_t j = 0; j < B.basis.size(); ++j)
    c[j] = B.F.tw->trace_to(B.F.lvl, 0, B.F.mul(x, B.basis[j]));
  return c;
}

Vec psi_expand(const PsiBasis& B, const Vec& v) {
  if (v.size() % 2 != 0) throw std::invalid_argument("psi_expand: odd length");
  const size_t n = v.size() / 2;
  const size_t m = B.basis.size();
  Vec out(2 * n * m);
  for (size_t i = 0; i < n; ++i) {
    auto a = basis_coords(B, v[i]);
    auto b = dual_basis_coords(B, v[n + i]);
    for (size_t j = 0; j < m; ++j) {
      out[i * m + j] = a[j];
      out[n * m + i * m + j] = b[j];
    }
  }
  return out;
}

Vec psi_compress(const PsiBasis& B, const Vec& v) {
  const size_t m = B.basis.size();
  if (v.size() % (2 * m) != 0) throw std::invalid_argument("psi_compress: bad length");
  const size_t n = v.size() / (2 * m);
  Vec out(2 * n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) {
      out[i] = B.F.add(out[i], B.F.mul(v[i * m + j], B.basis[j]));
      out[n + i] = B.F.add(out[n + i], B.F.mul(v[n * m + i * m + j], B.dual[j]));
    }
  return out;
}

// --- LinearCode ---

LinearCode LinearCode::from_span(Field F, Mat rows) {
  LinearCode C;
  C.F_ = F;
  C.n_ = rows.cols();
  C.piv_ = rref(rows);
  C.gen_ = std::move(rows);
  return C;
}

LinearCode LinearCode::zero(Field F, size_t n) {
  return from_span(F, Mat(F, 0, n));
}

LinearCode LinearCode::full(Field F, size_t n) {
  return from_span(F, Mat::eye(F, n));
}

bool LinearCode::contains(const Vec& v) const {
  return in_row_space(gen_, piv_, v);
}

std::vector<Vec> LinearCode::enumerate() const {
  const u64 q = F_.size();
  const size_t k = dim();
  if (k > 62 || (k > 0 && ipow_checked(q, static_cast<unsigned>(k)) > (u64(1) << 24)))
    throw std::invalid_argument("LinearCode::enumerate: code too large");
  const u64 total = ipow_checked(q, static_cast<unsigned>(k));
  std::vector<Vec> out;
  out.reserve(total);
  for (u64 idx = 0; idx < total; ++idx) {
    Vec v(n_, 0);
    u64 w = idx;
    for (size_t i = 0; i < k; ++i) {
      const u64 c = w % q;
      w /= q;
      if (c == 0) continue;
      for (size_t j = 0; j < n_; ++j) v[j] = F_.add(v[j], F_.mul(c, gen_(i, j)));
    }
    out.push_back(std::move(v));
  }
  return out;
}

LinearCode dual(const LinearCode& C, IPKind kind) {
  const Field& F = C.field();
  switch (kind) {
    case IPKind::Euclidean:
      return LinearCode::from_span(F, right_kernel(C.gen()));
    case IPKind::Hermitian:
      return LinearCode::from_span(F, right_kernel(pow_entries(C.gen(), hermitian_q(F))));
    case IPKind::Symplectic: {
      if (C.n() % 2 != 0) throw std::invalid_argument("dual: symplectic needs even length");
      Mat D = right_kernel(C.gen());
      Mat T(F, 0, C.n());
      for (size_t i = 0; i < D.rows(); ++i) T.append_row(tau_swap(F, D.row(i)));
      return LinearCode::from_span(F, T);
    }
    case IPKind::TraceSymplectic:
      throw std::invalid_argument(
          "dual: the trace-symplectic dual is additive, not field-linear; use the "
          "Psi_B expansion and a symplectic dual over the prime field");
  }
  throw std::logic_error("dual: bad kind");
}

LinearCode hull(const LinearCode& C, IPKind kind) {
  return intersect_codes(C, dual(C, kind));
}

LinearCode sum_codes(const LinearCode& A, const LinearCode& B) {
  if (A.n() != B.n()) throw std::invalid_argument("sum_codes: length mismatch");
  return LinearCode::from_span(A.field(), vstack(A.gen(), B.gen()));
}

LinearCode intersect_codes(const LinearCode& A, const LinearCode& B) {
  if (A.n() != B.n()) throw std::invalid_argument("intersect_codes: length mismatch");
  LinearCode da = dual(A, IPKind::Euclidean);
  LinearCode db = dual(B, IPKind::Euclidean);
  return dual(sum_codes(da, db), IPKind::Euclidean);
}

bool is_subspace(const LinearCode& inner, const LinearCode& outer) {
  if (inner.n() != outer.n()) return false;
  for (size_t i = 0; i < inner.dim(); ++i)
    if (!outer.contains(inner.gen().row(i))) return false;
  return true;
}

Mat fp_span_rows(const LinearCode& C) {
  const Field& F = C.field();
  u64 deg = 1;
  for (int i = 1; i <= F.lvl; ++i) deg *= F.tw->degree(i);
  Mat out(F, 0, C.n());
  for (size_t i = 0; i < C.dim(); ++i) {
    for (u64 j = 0; j < deg; ++j) {
      const u64 c = F.pow(F.generator(), j);
      Vec v = C.gen().row(i);
      for (auto& x : v) x = F.mul(c, x);
      out.append_row(v);
    }
  }
  return out;
}

LinearCode phi_compress_code(const Field& Fq2, const LinearCode& C,
                             u64 alpha, u64 beta) {
  Mat rows(Fq2, 0, C.n() / 2);
  for (size_t i = 0; i < C.dim(); ++i)
    rows.append_row(phi_compress(Fq2, C.gen().row(i), alpha, beta));
  return LinearCode::from_span(Fq2, rows);
}

LinearCode phi_expand_code(const LinearCode& C, u64 alpha, u64 beta) {
  const Field& Fq2 = C.field();
  const Field Fq = Fq2.tw->field(Fq2.lvl - 1);
  Mat rows(Fq, 0, 2 * C.n());
  // F_q-generators of C as an F_q-space: each basis row scaled by 1 and w.
  for (size_t i = 0; i < C.dim(); ++i) {
    for (u64 s : {u64(1), Fq2.generator()}) {
      Vec v = C.gen().row(i);
      for (auto& x : v) x = Fq2.mul(s, x);
      rows.append_row(phi_expand(Fq2, v, alpha, beta));
    }
  }
  return LinearCode::from_span(Fq, rows);
}

LinearCode random_code(Field F, size_t n, size_t k, std::mt19937_64& rng) {
  if (k > n) throw std::invalid_argument("random_code: k > n");
  for (int tries = 0; tries < 64; ++tries) {
    LinearCode C = LinearCode::from_span(F, random_mat(F, k, n, rng));
    if (C.dim() == k) return C;
  }
  throw std::runtime_error("random_code: failed to hit the requested dimension");
}

AdditiveCode additive_from_expansion(PsiBasis B, LinearCode expansion) {
  size_t m = B.basis.size();
  if (m == 0) throw std::invalid_argument("additive code: empty basis");
  if (!(expansion.field() == B.Fp))
    throw std::invalid_argument("additive code: expansion is not over the basis prime field");
  if (expansion.n() % (2 * m) != 0)
    throw std::invalid_argument("additive code: expansion length is not a multiple of 2m");
  AdditiveCode A;
  A.B = std::move(B);
  A.expansion = std::move(expansion);
  return A;
}

AdditiveCode additive_from_rows(const PsiBasis& B, const Mat& rows) {
  if (rows.cols() % 2 != 0) throw std::invalid_argument("additive code: odd length");
  Mat ex(B.Fp, 0, rows.cols() * B.basis.size());
  for (size_t i = 0; i < rows.rows(); ++i) ex.append_row(psi_expand(B, rows.row(i)));
  return additive_from_expansion(B, LinearCode::from_span(B.Fp, ex));
}

AdditiveCode additive_dual(const AdditiveCode& C) {
  return additive_from_expansion(C.B, dual(C.expansion, IPKind::Symplectic));
}

AdditiveCode additive_hull(const AdditiveCode& C) {
  return additive_from_expansion(C.B, hull(C.expansion, IPKind::Symplectic));
}

AdditiveCode additive_sum(const AdditiveCode& A, const AdditiveCode& B) {
  if (!(A.B.F == B.B.F) || A.B.basis != B.B.basis)
    throw std::invalid_argument("additive_sum: mismatched bases");
  return additive_from_expansion(A.B, sum_codes(A.expansion, B.expansion));
}

bool additive_contains(const AdditiveCode& C, const Vec& v) {
  return C.expansion.contains(psi_expand(C.B, v));
}

std::vector<Vec> additive_enumerate(const AdditiveCode& C) {
  std::vector<Vec> out;
  for (const Vec& w : C.expansion.enumerate()) out.push_back(psi_compress(C.B, w));
  return out;
}

}  // namespace qtx
