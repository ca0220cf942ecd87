// Quasi-twisted code structure: polynomial generator tuples over
// R = F[x]/(x^m - lambda), expansion to a generator matrix, CRT
// decomposition into constituent codes over extension fields,
// reconstruction through the trace formula, and per-slot
// self-orthogonality and hull accounting for the Hermitian, symplectic,
// and (lambda, lambda^{-1}) regimes.
//
// Copyright 2026 the qtx authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <random>
#include <vector>

#include "qtx/codes.hpp"

namespace qtx {

enum class QTRegime { Hermitian, Symplectic, LambdaPair };

// A QT code presented by generator tuples over R; `ell` is the tuple
// length (the code's index).  Hermitian and symplectic specs expand to
// length m*ell; the symplectic regime needs ell even, with components
// t < ell/2 forming the left half of each row and the rest the right
// half.  A (lambda, lambda^{-1}) spec expands to length 2*m*ell with
// `generators` describing the lambda block and `generators2` the
// lambda^{-1} block.
struct QTCodeSpec {
  Field base;
  u64 m = 0;
  u64 ell = 0;
  u64 lambda = 1;
  std::vector<std::vector<Poly>> generators;
  std::vector<std::vector<Poly>> generators2;
};

// One CRT slot.  Solo slots hold the constituent at root rho(u_i) in
// `gen`.  Pair slots hold C' at rho(v_j) in `gen` and C'' at
// rho(v_j)^{-q} (Hermitian) or rho(v_j)^{-1} (symplectic) in `gen2`.
// In the LambdaPair regime every factor is its own slot with `gen`
// evaluated from the lambda block at rho(u_i) and `gen2` from the
// lambda^{-1} block at rho(u_i)^{-1}.  Matrices are in reduced row
// echelon form over the splitting field with entries in the slot
// subfield of order `subfield_order`.
struct ConstituentSlot {
  bool is_pair = false;  // pair under the factor classification
  u64 root_exp = 0;      // u_i resp. v_j
  u64 degree = 1;        // extension degree of the slot subfield over base
  u64 subfield_order = 0;
  Mat gen;
  Mat gen2;
};

struct ConstituentSet {
  QTRegime regime = QTRegime::Hermitian;
  u64 m = 0;
  u64 ell = 0;
  u64 lambda = 1;
  Field base;   // the caller's alphabet field handle
  Field split;  // splitting field (inside `tower` when one was built)
  std::shared_ptr<const Tower> tower;  // owns `split` when non-null
  FactorClassification cls;
  std::vector<ConstituentSlot> slots;  // solo ascending u, then pairs ascending v
};

// Expanded length of a spec under a regime.
u64 qt_length(const QTCodeSpec& spec, QTRegime regime);

// Flat coordinate of array cell (g, t); single-block regimes only, the
// LambdaPair block offset is m*ell.
size_t qt_coordinate(u64 m, u64 ell, QTRegime regime, u64 g, u64 t);

// Row space of all constashifts x^g f_b of the generator tuples, laid
// out per qt_coordinate.
LinearCode expand_generator_matrix(const QTCodeSpec& spec, QTRegime regime);

// Classification plus empty slots for the given shape; slot matrices
// start with zero rows.
ConstituentSet constituent_frame(const Field& base, u64 m, u64 ell, u64 lambda,
                                 QTRegime regime);

// Evaluate the generators at every slot root.
ConstituentSet decompose(const QTCodeSpec& spec, QTRegime regime);

// Rebuild a generator spec from constituents via the trace formula; one
// generator tuple per slot matrix row.
QTCodeSpec compose(const ConstituentSet& S);

// Gram matrix of the slot's orthogonality condition; the slot satisfies
// its self-orthogonality criterion iff this is the zero matrix.  Solo
// slots pair `gen` with itself under the slot inner product (Hermitian
// over G_i; Euclidean-symplectic for degree-1 symplectic slots,
// Hermitian-symplectic otherwise); pair and LambdaPair slots pair `gen`
// against `gen2`.
Mat slot_gram(const ConstituentSet& S, size_t slot);

struct SlotCheck {
  bool ok = true;
  u64 gram_rank = 0;
};
struct SOReport {
  bool ok = true;
  std::vector<SlotCheck> slots;
};
SOReport check_self_orthogonal(const ConstituentSet& S);

struct SlotHull {
  u64 dim_gen = 0;
  u64 dim_gen2 = 0;
  u64 hull_dim = 0;   // solo: dim(C_i cap C_i^perp); pair: d'_j + d''_j
  u64 defect = 0;     // dim_gen + dim_gen2 - hull_dim
  u64 pair_rank = 0;  // pair slots: rank of the cross Gram, k_j = 2 * pair_rank
};
struct HullProfile {
  u64 k = 0;         // dimension of the expanded code from the slot dimensions
  u64 hull_dim = 0;  // ambient hull dimension from the slot totals
  u64 defect = 0;    // k - hull_dim; equals e (Hermitian) or 2e (symplectic)
  u64 e = 0;         // extension defect
  std::vector<SlotHull> slots;
};
HullProfile hull_profile(const ConstituentSet& S);

u64 dimension_from_constituents(const ConstituentSet& S);

// Relative trace from the order-`sub_order` subfield of `split` onto the
// base field of order Q: sum of a^(Q^j) over 0 <= j < log_Q(sub_order).
u64 subfield_trace(const Field& split, u64 base_order, u64 sub_order, u64 a);

// Uniform element of the order-`sub_order` subfield of `split`.
u64 random_subfield_element(const Field& split, u64 sub_order, std::mt19937_64& rng);

}  // namespace qtx
