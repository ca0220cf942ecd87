// Copyright 2026 the qtx authors
// SPDX-License-Identifier: Apache-2.0

#include "qtx/orthobasis.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qtx {

namespace {

// x + c*z
Vec add_scaled(const Field& F, const Vec& x, u64 c, const Vec& z) {
  Vec out = x;
  for (size_t i = 0; i < out.size(); ++i) out[i] = F.add(out[i], F.mul(c, z[i]));
  return out;
}

// x - c*z
Vec sub_scaled(const Field& F, const Vec& x, u64 c, const Vec& z) {
  Vec out = x;
  for (size_t i = 0; i < out.size(); ++i) out[i] = F.sub(out[i], F.mul(c, z[i]));
  return out;
}

Vec scaled(const Field& F, u64 c, const Vec& x) {
  Vec out = x;
  for (u64& v : out) v = F.mul(c, v);
  return out;
}

std::vector<Vec> basis_rows(const Mat& V, const char* who) {
  if (rank(V) != V.rows())
    throw std::invalid_argument(std::string(who) + ": rows are not independent");
  std::vector<Vec> rows;
  rows.reserve(V.rows());
  for (size_t i = 0; i < V.rows(); ++i) rows.push_back(V.row(i));
  return rows;
}

}  // namespace

u64 solve_norm(const Field& F, u64 s) {
  u64 q = hermitian_q(F);
  if (s == 0 || F.pow(s, q) != s)
    throw std::invalid_argument("solve_norm: s outside F_q^*");
  for (u64 a = 1; a < F.size(); ++a)
    if (F.pow(a, q + 1) == s) return a;
  throw std::logic_error("solve_norm: no preimage found");
}

OrthoBasis hermitian_orthonormalize(const Mat& V) {
  const Field& F = V.field();
  u64 q = hermitian_q(F);
  std::vector<Vec> work = basis_rows(V, "hermitian_orthonormalize");

  Mat out(F, 0, V.cols());
  while (!work.empty()) {
    // A vector of nonzero self-product, taken directly when one exists.
    size_t pick = work.size();
    for (size_t i = 0; i < work.size(); ++i) {
      if (ip_hermitian(F, work[i], work[i]) != 0) {
        pick = i;
        break;
      }
    }

    Vec y;
    if (pick < work.size()) {
      y = std::move(work[pick]);
      work.erase(work.begin() + pick);
    } else {
      // Every self-product vanishes; mix the first row with the first
      // row it pairs with.  a^q c + a c^q has at most q roots, so the
      // scan below terminates.  No partner at all means the first row
      // lies in the intersection with the dual.
      size_t partner = work.size();
      u64 c = 0;
      for (size_t i = 1; i < work.size(); ++i) {
        c = ip_hermitian(F, work[0], work[i]);
        if (c != 0) {
          partner = i;
          break;
        }
      }
      if (partner == work.size())
        throw HullWitnessError("hermitian_orthonormalize: nontrivial hull", work[0]);
      u64 a = 0;
      while (F.add(F.mul(F.pow(a, q), c), F.mul(a, F.pow(c, q))) == 0) ++a;
      y = add_scaled(F, work[0], a, work[partner]);
      work.erase(work.begin());
    }

    u64 alpha = solve_norm(F, ip_hermitian(F, y, y));
    Vec z = scaled(F, F.inv(alpha), y);
    out.append_row(z);
    for (Vec& w : work) w = sub_scaled(F, w, ip_hermitian(F, w, z), z);
  }
  return {OrthoKind::Hermitian, out, LinearCode::from_span(F, V)};
}

OrthoBasis symplectic_pair_basis(const Mat& V) {
  const Field& F = V.field();
  if (V.cols() % 2 != 0)
    throw std::invalid_argument("symplectic_pair_basis: odd ambient length");
  std::vector<Vec> work = basis_rows(V, "symplectic_pair_basis");
  if (work.size() % 2 != 0)
    throw std::logic_error("symplectic_pair_basis: odd dimension");

  Mat out(F, 0, V.cols());
  while (!work.empty()) {
    Vec z0 = std::move(work.front());
    work.erase(work.begin());

    size_t partner = work.size();
    u64 beta = 0;
    for (size_t i = 0; i < work.size(); ++i) {
      beta = ip_symplectic(F, z0, work[i]);
      if (beta != 0) {
        partner = i;
        break;
      }
    }
    if (partner == work.size())
      throw HullWitnessError("symplectic_pair_basis: nontrivial hull", z0);
    Vec z1 = scaled(F, F.inv(beta), work[partner]);
    work.erase(work.begin() + partner);

    out.append_row(z0);
    out.append_row(z1);
    for (Vec& w : work) {
      u64 c1 = ip_symplectic(F, w, z1);
      u64 c0 = ip_symplectic(F, w, z0);
      w = add_scaled(F, sub_scaled(F, w, c1, z0), c0, z1);
    }
  }
  return {OrthoKind::SymplecticPairs, out, LinearCode::from_span(F, V)};
}

Mat hull_complement(const LinearCode& C, IPKind kind) {
  LinearCode H = hull(C, kind);
  return complement_rows(H.gen(), C.gen());
}

Mat hull_complement(const LinearCode& C, IPKind kind, std::mt19937_64& rng) {
  const Field& F = C.field();
  LinearCode H = hull(C, kind);
  size_t want = C.dim() - H.dim();

  Mat picked = H.gen();
  Mat out(F, 0, C.n());
  std::uniform_int_distribution<u64> dist(0, F.size() - 1);
  size_t tries = 0;
  while (out.rows() < want) {
    if (++tries > 4096 + 512 * want)
      throw std::logic_error("hull_complement: sampling stalled");
    Vec v(C.n(), 0);
    for (size_t i = 0; i < C.dim(); ++i) {
      u64 c = dist(rng);
      if (c != 0) v = add_scaled(F, v, c, C.gen().row(i));
    }
    Mat trial = picked;
    trial.append_row(v);
    if (rank(trial) > picked.rows()) {
      picked.append_row(v);
      out.append_row(v);
    }
  }
  return out;
}

}  // namespace qtx
