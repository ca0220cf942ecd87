// Minimum Hamming and symplectic weights, with optional excluded
// subcode and early-exit threshold: an exhaustive projective-class
// oracle, an accelerated search over disjoint information windows with
// an accumulating lower bound, exact weight-enumerator prefixes, and
// the MacWilliams transform.
//
// Copyright 2026 the qtx authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "qtx/codes.hpp"

namespace qtx {

enum class WeightMetric { Hamming, Symplectic };

// The minimum runs over nonzero words of `code`, or of code \ exclude
// when `exclude` is set (it must be a subcode).  A zero search space
// yields n by convention (n/2 coordinate pairs for the symplectic
// metric).  `threshold` = 0 asks for the exact minimum; a positive
// threshold t allows the accelerated search to stop early with the
// contract: value <= t is exact, value > t certifies minimum > t.
struct WeightQuery {
  LinearCode code;
  WeightMetric metric = WeightMetric::Hamming;
  std::optional<LinearCode> exclude;
  size_t threshold = 0;
  int threads = 1;
};

struct WeightResult {
  size_t value = 0;
  bool exact = true;
};

// Exhaustive oracle over projective representatives; requires
// dim * log2(|F|) <= 28 and always returns the exact minimum.
WeightResult min_weight_enum(const WeightQuery& q);

// Accelerated minimum weight over disjoint information windows; exact
// unless cut short by the threshold.  Small codes fall back to the
// exhaustive scan.
WeightResult min_weight_bz(const WeightQuery& q);

// Routes to the oracle below its budget and to the accelerated search
// above it.
WeightResult min_weight(const WeightQuery& q);

WeightResult min_symplectic_weight(const LinearCode& C, size_t threshold = 0,
                                   int threads = 1);

// Exact counts A_0..A_w.  Below the enumeration budget this walks the
// whole code; above it, codewords of weight <= w are generated through
// bounded-weight enumeration on the information windows.
std::vector<u64> weight_enumerator_prefix(const LinearCode& C, size_t up_to,
                                          WeightMetric metric = WeightMetric::Hamming,
                                          int threads = 1);

// Full distribution A_0..A_n by projective enumeration; requires
// dim * log2(|F|) <= 32.
std::vector<u64> weight_enumerator(const LinearCode& C,
                                   WeightMetric metric = WeightMetric::Hamming,
                                   int threads = 1);

// Hamming distribution of any dual with a weight-preserving conjugation
// (Euclidean and Hermitian both qualify), from the primal distribution.
std::vector<u64> macwilliams_transform(const std::vector<u64>& W, u64 q,
                                       size_t dim);

}  // namespace qtx
