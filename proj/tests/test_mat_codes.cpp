// Matrices, inner products, duals, hulls, and the expansion maps.
//
// Copyright 2026 the qtx authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "qtx/codes.hpp"

using namespace qtx;

TEST_CASE("rref, kernel, and complement basics") {
  Tower tw(2, {2});
  const Field F = tw.field(1);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Mat A = random_mat(F, 4, 7, rng);
    Mat K = right_kernel(A);
    CHECK(rank(A) + K.rows() == 7);
    Mat prod = mat_mul(A, transpose(K));
    for (size_t i = 0; i < prod.rows(); ++i)
      for (size_t j = 0; j < prod.cols(); ++j) CHECK(prod(i, j) == 0);

    Mat R1 = row_basis(A), R2 = row_basis(A);
    CHECK(R1 == R2);  // canonical form is stable
  }

  Mat base = Mat::from_rows(F, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  Mat cand = Mat::from_rows(F, {{1, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 3}});
  Mat ext = complement_rows(base, cand);
  CHECK(ext.rows() == 2);
  CHECK(ext.row(0) == std::vector<u64>{0, 0, 2, 0});
}

TEST_CASE("inner products match their definitions") {
  Tower tw(2, {2});
  const Field F4 = tw.field(1);
  Vec ones{1, 1, 1};
  CHECK(ip_hermitian(F4, ones, ones) == 1);  // 3 * 1 in characteristic 2
  Vec u{2, 0, 1, 3}, v{1, 1, 0, 2};
  CHECK(ip_symplectic(F4, u, u) == 0);
  CHECK(ip_euclidean(F4, u, Vec{0, 0, 0, 0}) == 0);
  CHECK(ip_symplectic(F4, u, v) == ip_euclidean(F4, u, tau_swap(F4, v)));

  Vec tt = tau_swap(F4, tau_swap(F4, u));
  for (size_t i = 0; i < u.size(); ++i) CHECK(tt[i] == F4.neg(u[i]));

  CHECK(swt(u) == 2);
  CHECK(wgt(u) == 3);
}

TEST_CASE("duals, hulls, sums, intersections") {
  Tower tw(2, {2});
  const Field F4 = tw.field(1);
  std::mt19937_64 rng(11);

  for (int trial = 0; trial < 25; ++trial) {
    LinearCode C = random_code(F4, 8, 3, rng);
    for (IPKind kind : {IPKind::Euclidean, IPKind::Hermitian, IPKind::Symplectic}) {
      LinearCode D = dual(C, kind);
      CHECK(D.dim() == 5);
      CHECK(dual(D, kind) == C);
      for (size_t i = 0; i < C.dim(); ++i)
        for (size_t j = 0; j < D.dim(); ++j)
          CHECK(inner_product(F4, C.gen().row(i), D.gen().row(j), kind) == 0);
      LinearCode H = hull(C, kind);
      CHECK(is_subspace(H, C));
      CHECK(is_subspace(H, D));
      CHECK(hull(D, kind) == intersect_codes(D, C));
    }
    LinearCode B = random_code(F4, 8, 4, rng);
    CHECK(sum_codes(C, B).dim() + intersect_codes(C, B).dim() == C.dim() + B.dim());
    CHECK(sum_codes(C, C) == C);
  }

  // Euclidean hull of the length-4 repetition code over F3 is trivial.
  Tower t3(3, {});
  LinearCode rep = LinearCode::from_span(t3.field(0),
                                         Mat::from_rows(t3.field(0), {{1, 1, 1, 1}}));
  CHECK(hull(rep, IPKind::Euclidean).dim() == 0);

  // dual of the full space is the zero code.
  LinearCode full = LinearCode::full(F4, 5);
  CHECK(dual(full, IPKind::Euclidean).dim() == 0);
  CHECK(dual(LinearCode::zero(F4, 5), IPKind::Hermitian).dim() == 5);
}

TEST_CASE("phi expansion: weights, round trips, orthogonality bridge") {
  Tower tw(2, {2});
  const Field F4 = tw.field(1);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<u64> dist(0, 3);

  for (int trial = 0; trial < 200; ++trial) {
    Vec v(6), w(6);
    for (auto& x : v) x = dist(rng);
    for (auto& x : w) x = dist(rng);
    Vec ab = phi_expand(F4, v);
    CHECK(phi_compress(F4, ab) == v);
    CHECK(swt(ab) == wgt(v));
    if (ip_hermitian(F4, v, w) == 0) CHECK(trace_alternating(F4, v, w) == 0);
    CHECK(trace_alternating(F4, v, v) == 0);
  }

  // Lemma: <c,d>_T = <Phi(c), Phi(d)>_a for c, d over F_q, any basis.
  // Exercised with F_{q^2}/F_q = F4/F2 and F16/F4 so the trace is nontrivial.
  Tower tw16(2, {2, 2});
  const Field F16 = tw16.field(2);
  const Field F4b = tw16.field(1);
  const Field F2 = tw.field(0);
  for (int trial = 0; trial < 200; ++trial) {
    Vec c2(8), d2(8), c4(8), d4(8);
    for (auto& x : c2) x = dist(rng) % 2;
    for (auto& x : d2) x = dist(rng) % 2;
    for (auto& x : c4) x = dist(rng);
    for (auto& x : d4) x = dist(rng);
    for (auto [al, be] : std::vector<std::pair<u64, u64>>{{0, 0}, {1, 2}, {2, 3}, {3, 1}}) {
      Vec pc = phi_compress(F4, c2, al, be), pd = phi_compress(F4, d2, al, be);
      CHECK(ip_trace_symplectic(F2, c2, d2) == trace_alternating(F4, pc, pd, al, be));
    }
    for (auto [al, be] : std::vector<std::pair<u64, u64>>{{0, 0}, {1, 4}, {2, 7}, {5, 1}}) {
      Vec pc = phi_compress(F16, c4, al, be), pd = phi_compress(F16, d4, al, be);
      CHECK(ip_trace_symplectic(F4b, c4, d4) == trace_alternating(F16, pc, pd, al, be));
    }
  }
}

TEST_CASE("psi expansion: dual basis, IP preservation, self-dual F4 basis") {
  Tower tw(2, {2});
  const Field F4 = tw.field(1);

  // {w, w^2} is a self-dual basis of F4 over F2.
  PsiBasis sd = make_psi_basis(F4, {2, 3});
  CHECK(sd.dual == std::vector<u64>{2, 3});

  PsiBasis poly = make_psi_basis(F4);
  for (size_t i = 0; i < poly.basis.size(); ++i)
    for (size_t j = 0; j < poly.basis.size(); ++j) {
      u64 tr = tw.trace_to(1, 0, F4.mul(poly.basis[i], poly.dual[j]));
      CHECK(tr == (i == j ? 1 : 0));
    }

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<u64> dist(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    Vec c(12), d(12);
    for (auto& x : c) x = dist(rng);
    for (auto& x : d) x = dist(rng);
    for (const PsiBasis& B : {sd, poly}) {
      Vec ec = psi_expand(B, c), ed = psi_expand(B, d);
      CHECK(psi_compress(B, ec) == c);
      CHECK(ip_trace_symplectic(F4, c, d) == ip_symplectic(tw.field(0), ec, ed));
    }
  }

  // m = 1: the map is the identity.
  Tower t3(3, {});
  PsiBasis triv = make_psi_basis(t3.field(0));
  Vec v{1, 2, 0, 2};
  CHECK(psi_expand(triv, v) == v);
}

TEST_CASE("duality bridge: symplectic dual of the expansion") {
  Tower tw(2, {2});
  const Field F4 = tw.field(1);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    LinearCode D = random_code(F4, 6, 3, rng);
    LinearCode C = phi_expand_code(D);
    CHECK(C.dim() == 6);
    CHECK(dual(C, IPKind::Symplectic) == phi_expand_code(dual(D, IPKind::Hermitian)));
  }
  // tau carries the Euclidean dual to the symplectic dual.
  Tower t2(2, {});
  const Field F2 = t2.field(0);
  for (int trial = 0; trial < 10; ++trial) {
    LinearCode C = random_code(F2, 8, 3, rng);
    LinearCode DS = dual(C, IPKind::Symplectic);
    LinearCode DE = dual(C, IPKind::Euclidean);
    Mat T(F2, 0, 8);
    for (size_t i = 0; i < DE.dim(); ++i) T.append_row(tau_swap(F2, DE.gen().row(i)));
    CHECK(DS == LinearCode::from_span(F2, T));
  }
}
