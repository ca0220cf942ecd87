// Linear codes over a tower level: the four inner products, duals, hulls,
// sums and intersections, and the identification maps between vectors
// over F_{q^2}, F_q x F_q, and prime-field expansions.
//
// Conventions, fixed once for the whole library:
//   <u,v>_E = sum u_i v_i
//   <u,v>_H = sum u_i v_i^q                     (q^2 = |F|)
//   <(a|b),(a'|b')>_S = a.b' - b.a'             (split halves)
//   <c,d>_T = tr_{F->F_p}(<c,d>_S)
//   <u,v>_a = tr_{F_q->F_p}((u.v^q - u^q.v) / (alpha beta^q - alpha^q beta))
//   Phi(a|b) = alpha a + beta b, canonical basis {1, w}
//   tau(u1|u2) = (u2|-u1)
//
// Copyright 2026 the qtx authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "qtx/mat.hpp"

namespace qtx {

using Vec = std::vector<u64>;

enum class IPKind { Euclidean, Hermitian, Symplectic, TraceSymplectic };

size_t wgt(const Vec& v);
size_t swt(const Vec& v);  // split halves; even length required

u64 ip_euclidean(const Field& F, const Vec& u, const Vec& v);
u64 ip_hermitian(const Field& F, const Vec& u, const Vec& v);
u64 ip_symplectic(const Field& F, const Vec& u, const Vec& v);
// Value lies in the prime field.
u64 ip_trace_symplectic(const Field& F, const Vec& u, const Vec& v);
u64 inner_product(const Field& F, const Vec& u, const Vec& v, IPKind kind);

// sqrt(|F|), throwing unless |F| is a perfect square.
u64 hermitian_q(const Field& F);

// Gram matrix of the rows of A; trace-symplectic entries lie in the
// prime field.
Mat gram_matrix(const Mat& A, IPKind kind);

Vec tau_swap(const Field& F, const Vec& v);

// Phi : F_q^{2n} -> F_{q^2}^n, (a|b) -> alpha a + beta b.  The field handle
// is always the quadratic extension, whose level must sit directly above
// F_q.  Passing alpha = beta = 0 selects the canonical basis {1, w}.
Vec phi_compress(const Field& Fq2, const Vec& ab, u64 alpha = 0, u64 beta = 0);
Vec phi_expand(const Field& Fq2, const Vec& v, u64 alpha = 0, u64 beta = 0);

// Trace-alternating form on F_{q^2}^n; prime-field value.
u64 trace_alternating(const Field& Fq2, const Vec& u, const Vec& v,
                      u64 alpha = 0, u64 beta = 0);

// Psi_B : F_{p^m}^{2n} -> F_p^{2mn}; the first half is expanded in the
// basis, the second half in its trace-dual basis.
struct PsiBasis {
  Field F;                 // F_{p^m}
  Field Fp;                // prime level
  std::vector<u64> basis;  // m elements
  std::vector<u64> dual;   // trace-dual basis
};
// Empty basis selects the canonical polynomial basis {1, w, ..., w^{m-1}}.
PsiBasis make_psi_basis(const Field& F, std::vector<u64> basis = {});
Vec psi_expand(const PsiBasis& B, const Vec& v);
Vec psi_compress(const PsiBasis& B, const Vec& v);
// Coordinates of one element in the given basis / in the dual basis.
std::vector<u64> basis_coords(const PsiBasis& B, u64 x);
std::vector<u64> dual_basis_coords(const PsiBasis& B, u64 x);

// A linear code stored through its canonical generator matrix (RREF with
// first-nonzero pivoting), so two equal row spaces compare equal.
class LinearCode {
 public:
  LinearCode() = default;
  static LinearCode from_span(Field F, Mat rows);
  static LinearCode zero(Field F, size_t n);
  static LinearCode full(Field F, size_t n);

  const Field& field() const { return F_; }
  size_t n() const { return n_; }
  size_t dim() const { return gen_.rows(); }
  const Mat& gen() const { return gen_; }
  const std::vector<size_t>& pivots() const { return piv_; }

  bool contains(const Vec& v) const;
  bool operator==(const LinearCode& o) const { return n_ == o.n_ && gen_ == o.gen_; }

  // All q^k codewords, for small codes only (tests and exhaustive oracles).
  std::vector<Vec> enumerate() const;

 private:
  Field F_;
  size_t n_ = 0;
  Mat gen_;
  std::vector<size_t> piv_;
};

LinearCode dual(const LinearCode& C, IPKind kind);
LinearCode hull(const LinearCode& C, IPKind kind);
LinearCode sum_codes(const LinearCode& A, const LinearCode& B);
// Intersection computed as the Euclidean dual of the sum of Euclidean duals.
LinearCode intersect_codes(const LinearCode& A, const LinearCode& B);

bool is_subspace(const LinearCode& inner, const LinearCode& outer);

// Generator rows of the code seen as an F_p-linear space: every basis row
// scaled by 1, w, ..., w^{deg-1}.
Mat fp_span_rows(const LinearCode& C);

// Phi image of an F_q-linear code in F_q^{2n} (an F_{q^2}-linear code only
// when the input is Phi-closed; rank checked by the caller if needed), and
// the expansion of an F_{q^2}-linear code.
LinearCode phi_compress_code(const Field& Fq2, const LinearCode& C,
                             u64 alpha = 0, u64 beta = 0);
LinearCode phi_expand_code(const LinearCode& C, u64 alpha = 0, u64 beta = 0);

LinearCode random_code(Field F, size_t n, size_t k, std::mt19937_64& rng);

// An additive (F_p-linear) code over F = F_{p^m}, stored as the F_p row
// space of its Psi_B expansion.  Lengths are even: the code is treated as
// a symplectic object whose halves expand through the basis and through
// its trace-dual respectively, so trace-symplectic duality over F turns
// into plain symplectic duality of the expansion.
struct AdditiveCode {
  PsiBasis B;
  LinearCode expansion;  // over F_p, of length m * length()

  size_t m() const { return B.basis.size(); }
  size_t length() const { return m() == 0 ? 0 : expansion.n() / m(); }
  size_t dim_p() const { return expansion.dim(); }
  bool operator==(const AdditiveCode& o) const { return expansion == o.expansion; }
};

// F_p span of rows given over F itself (even number of columns).
AdditiveCode additive_from_rows(const PsiBasis& B, const Mat& rows);
AdditiveCode additive_from_expansion(PsiBasis B, LinearCode expansion);
// Trace-symplectic dual, hull, and sum.
AdditiveCode additive_dual(const AdditiveCode& C);
AdditiveCode additive_hull(const AdditiveCode& C);
AdditiveCode additive_sum(const AdditiveCode& A, const AdditiveCode& B);
bool additive_contains(const AdditiveCode& C, const Vec& v);  // v over F
// All |C| codewords over F; small codes only.
std::vector<Vec> additive_enumerate(const AdditiveCode& C);

}  // namespace qtx
