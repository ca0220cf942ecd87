// Gram-Schmidt type orthogonalization over finite fields: Hermitian
// orthonormal bases for subspaces of F_{q^2}^n with trivial Hermitian
// hull, symplectic pair bases for subspaces of F_q^{2n} with trivial
// symplectic hull, and complements of the hull inside a code.
//
// Copyright 2026 the qtx authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <random>
#include <stdexcept>
#include <string>

#include "qtx/codes.hpp"

namespace qtx {

enum class OrthoKind { Hermitian, SymplecticPairs };

// Rows of `basis` span the same space as the input and satisfy the exact
// Gram pattern of the kind: the identity matrix in the Hermitian case,
// and in the symplectic case <z_{2i}, z_{2i+1}> = 1 and
// <z_{2i+1}, z_{2i}> = -1 with every other product zero.
struct OrthoBasis {
  OrthoKind kind = OrthoKind::Hermitian;
  Mat basis;
  LinearCode source;
};

// Thrown when the input meets its own dual; `witness` is a nonzero
// vector of the intersection.
class HullWitnessError : public std::runtime_error {
 public:
  HullWitnessError(const std::string& what, Vec witness_vec)
      : std::runtime_error(what), witness(std::move(witness_vec)) {}
  Vec witness;
};

// Smallest alpha in code order with alpha^(q+1) = s, for s nonzero in
// the index-two subfield F_q of F = F_{q^2}.
u64 solve_norm(const Field& F, u64 s);

// The rows of V must be linearly independent.  Rows are consumed in
// order and field elements scanned in ascending code order, so equal
// inputs produce equal bases, and an input that is already orthonormal
// passes through unchanged.
OrthoBasis hermitian_orthonormalize(const Mat& V);

// V sits in F_q^{2n} with split-half coordinates and must have even
// rank; odd rank signals a caller bug.  Output rows pair up as
// (z_0, z_1), (z_2, z_3), ...
OrthoBasis symplectic_pair_basis(const Mat& V);

// Basis of a complement of hull(C, kind) inside C.  Any such complement
// meets its own dual trivially, so it always orthogonalizes.  The first
// overload completes the hull basis with rows of C's canonical generator
// matrix; the second draws random codewords instead, to let a
// construction be re-run with a different complement.
Mat hull_complement(const LinearCode& C, IPKind kind);
Mat hull_complement(const LinearCode& C, IPKind kind, std::mt19937_64& rng);

}  // namespace qtx
