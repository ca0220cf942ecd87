// Dense matrices over a tower level, with the elimination routines the
// rest of the library is built on.  Pivoting is deterministic: columns are
// scanned left to right and the first row with a nonzero entry wins, so
// every derived basis (duals, hulls, complements) is reproducible.
//
// Copyright 2026 the qtx authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "qtx/galois.hpp"

namespace qtx {

class Mat {
 public:
  Mat() = default;
  Mat(Field F, size_t rows, size_t cols) : F_(F), r_(rows), c_(cols), a_(rows * cols, 0) {}

  static Mat from_rows(Field F, const std::vector<std::vector<u64>>& rows);
  static Mat eye(Field F, size_t n);
  static Mat zero(Field F, size_t rows, size_t cols) { return Mat(F, rows, cols); }

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  const Field& field() const { return F_; }
  bool empty() const { return r_ == 0; }

  u64& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  u64 operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

  std::vector<u64> row(size_t i) const;
  void set_row(size_t i, const std::vector<u64>& v);
  void append_row(const std::vector<u64>& v);

  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

 private:
  Field F_;
  size_t r_ = 0, c_ = 0;
  std::vector<u64> a_;
};

Mat transpose(const Mat& A);
Mat mat_mul(const Mat& A, const Mat& B);
// Entrywise e-th power (Frobenius images for e a power of p).
Mat pow_entries(const Mat& A, u64 e);
Mat vstack(const Mat& A, const Mat& B);
Mat hstack(const Mat& A, const Mat& B);
Mat take_cols(const Mat& A, size_t lo, size_t hi);  // columns [lo, hi)

// In-place reduced row echelon form; returns the pivot column indices.
// Zero rows are moved to the bottom and dropped.
std::vector<size_t> rref(Mat& A);
size_t rank(Mat A);

// Basis of the row space: RREF with zero rows removed.
Mat row_basis(Mat A);

// Right kernel { y : A y^T = 0 }, one basis vector per row, in the
// standard free-column order.
Mat right_kernel(const Mat& A);

// Left kernel { x : x A = 0 }.
Mat left_kernel(const Mat& A);

// Membership and joint-space helpers.  `reduced` must be an RREF matrix
// together with its pivot columns.
bool in_row_space(const Mat& reduced, const std::vector<size_t>& pivots,
                  std::vector<u64> v);

// Rows of `candidates` (in order) that extend the row space of `base`;
// stops after `want` rows when want > 0.
Mat complement_rows(const Mat& base, const Mat& candidates, size_t want = 0);

Mat random_mat(Field F, size_t rows, size_t cols, std::mt19937_64& rng);

}  // namespace qtx
