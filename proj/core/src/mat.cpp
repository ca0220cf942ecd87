// Copyright 2026 the qtx authors
// SPDX-License-Identifier: Apache-2.0

#include "qtx/mat.hpp"

#include <stdexcept>

namespace qtx {

Mat Mat::from_rows(Field F, const std::vector<std::vector<u64>>& rows) {
  if (rows.empty()) return Mat(F, 0, 0);
  Mat M(F, rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) M.set_row(i, rows[i]);
  return M;
}

Mat Mat::eye(Field F, size_t n) {
  Mat M(F, n, n);
  for (size_t i = 0; i < n; ++i) M(i, i) = 1;
  return M;
}

std::vector<u64> Mat::row(size_t i) const {
  return std::vector<u64>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_);
}

void Mat::set_row(size_t i, const std::vector<u64>& v) {
  if (v.size() != c_) throw std::invalid_argument("Mat::set_row: length mismatch");
  std::copy(v.begin(), v.end(), a_.begin() + i * c_);
}

void Mat::append_row(const std::vector<u64>& v) {
  if (r_ == 0 && c_ == 0) c_ = v.size();
  if (v.size() != c_) throw std::invalid_argument("Mat::append_row: length mismatch");
  a_.insert(a_.end(), v.begin(), v.end());
  ++r_;
}

Mat transpose(const Mat& A) {
  Mat T(A.field(), A.cols(), A.rows());
  for (size_t i = 0; i < A.rows(); ++i)
    for (size_t j = 0; j < A.cols(); ++j) T(j, i) = A(i, j);
  return T;
}

Mat mat_mul(const Mat& A, const Mat& B) {
  if (A.cols() != B.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
  const Field& F = A.field();
  Mat C(F, A.rows(), B.cols());
  for (size_t i = 0; i < A.rows(); ++i)
    for (size_t k = 0; k < A.cols(); ++k) {
      const u64 aik = A(i, k);
      if (aik == 0) continue;
      for (size_t j = 0; j < B.cols(); ++j)
        C(i, j) = F.add(C(i, j), F.mul(aik, B(k, j)));
    }
  return C;
}

Mat pow_entries(const Mat& A, u64 e) {
  const Field& F = A.field();
  Mat B(F, A.rows(), A.cols());
  for (size_t i = 0; i < A.rows(); ++i)
    for (size_t j = 0; j < A.cols(); ++j) B(i, j) = F.pow(A(i, j), e);
  return B;
}

Mat vstack(const Mat& A, const Mat& B) {
  if (A.empty()) return B;
  if (B.empty()) return A;
  if (A.cols() != B.cols()) throw std::invalid_argument("vstack: width mismatch");
  Mat C(A.field(), A.rows() + B.rows(), A.cols());
  for (size_t i = 0; i < A.rows(); ++i)
    for (size_t j = 0; j < A.cols(); ++j) C(i, j) = A(i, j);
  for (size_t i = 0; i < B.rows(); ++i)
    for (size_t j = 0; j < B.cols(); ++j) C(A.rows() + i, j) = B(i, j);
  return C;
}

Mat hstack(const Mat& A, const Mat& B) {
  if (A.rows() != B.rows()) throw std::invalid_argument("hstack: height mismatch");
  Mat C(A.field(), A.rows(), A.cols() + B.cols());
  for (size_t i = 0; i < A.rows(); ++i) {
    for (size_t j = 0; j < A.cols(); ++j) C(i, j) = A(i, j);
    for (size_t j = 0; j < B.cols(); ++j) C(i, A.cols() + j) = B(i, j);
  }
  return C;
}

Mat take_cols(const Mat& A, size_t lo, size_t hi) {
  if (lo > hi || hi > A.cols()) throw std::invalid_argument("take_cols: bad range");
  Mat C(A.field(), A.rows(), hi - lo);
  for (size_t i = 0; i < A.rows(); ++i)
    for (size_t j = lo; j < hi; ++j) C(i, j - lo) = A(i, j);
  return C;
}

std::vector<size_t> rref(Mat& A) {
  const Field& F = A.field();
  std::vector<size_t> pivots;
  size_t prow = 0;
  for (size_t col = 0; col < A.cols() && prow < A.rows(); ++col) {
    size_t sel = prow;
    while (sel < A.rows() && A(sel, col) == 0) ++sel;
    if (sel == A.rows()) continue;
    if (sel != prow)
      for (size_t j = 0; j < A.cols(); ++j) std::swap(A(sel, j), A(prow, j));
    const u64 inv = F.inv(A(prow, col));
    for (size_t j = col; j < A.cols(); ++j) A(prow, j) = F.mul(inv, A(prow, j));
    for (size_t i = 0; i < A.rows(); ++i) {
      if (i == prow || A(i, col) == 0) continue;
      const u64 f = A(i, col);
      for (size_t j = col; j < A.cols(); ++j)
        A(i, j) = F.sub(A(i, j), F.mul(f, A(prow, j)));
    }
    pivots.push_back(col);
    ++prow;
  }
  // Drop all-zero rows (everything below prow).
  Mat B(F, prow, A.cols());
  for (size_t i = 0; i < prow; ++i)
    for (size_t j = 0; j < A.cols(); ++j) B(i, j) = A(i, j);
  A = std::move(B);
  return pivots;
}

size_t rank(Mat A) {
  rref(A);
  return A.rows();
}

Mat row_basis(Mat A) {
  rref(A);
  return A;
}

Mat right_kernel(const Mat& A) {
  const Field& F = A.field();
  Mat R = A;
  std::vector<size_t> pivots = rref(R);
  std::vector<char> is_pivot(A.cols(), 0);
  for (size_t c : pivots) is_pivot[c] = 1;
  Mat K(F, 0, A.cols());
  for (size_t fc = 0; fc < A.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<u64> v(A.cols(), 0);
    v[fc] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(R(i, fc));
    K.append_row(v);
  }
  return K;
}

Mat left_kernel(const Mat& A) { return right_kernel(transpose(A)); }

bool in_row_space(const Mat& reduced, const std::vector<size_t>& pivots,
                  std::vector<u64> v) {
  const Field& F = reduced.field();
  if (v.size() != reduced.cols()) throw std::invalid_argument("in_row_space: length mismatch");
  for (size_t i = 0; i < pivots.size(); ++i) {
    const u64 c = v[pivots[i]];
    if (c == 0) continue;
    for (size_t j = 0; j < v.size(); ++j) v[j] = F.sub(v[j], F.mul(c, reduced(i, j)));
  }
  for (u64 x : v)
    if (x != 0) return false;
  return true;
}

Mat complement_rows(const Mat& base, const Mat& candidates, size_t want) {
  Mat work = base;
  size_t r = rank(work);
  Mat out(candidates.field(), 0, candidates.cols());
  for (size_t i = 0; i < candidates.rows(); ++i) {
    if (want > 0 && out.rows() == want) break;
    Mat trial = work;
    trial.append_row(candidates.row(i));
    if (rank(trial) > r) {
      work.append_row(candidates.row(i));
      ++r;
      out.append_row(candidates.row(i));
    }
  }
  return out;
}

Mat random_mat(Field F, size_t rows, size_t cols, std::mt19937_64& rng) {
  Mat M(F, rows, cols);
  std::uniform_int_distribution<u64> dist(0, F.size() - 1);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) M(i, j) = dist(rng);
  return M;
}

}  // namespace qtx
