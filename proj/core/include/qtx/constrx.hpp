// Copyright 2026 the qtx authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qtx/codes.hpp"
#include "qtx/mat.hpp"
#include "qtx/wdist.hpp"

namespace qtx {

// Stabilizer codes from self-orthogonal classical codes, and extensions
// of nearly self-orthogonal codes into self-orthogonal ones a few columns
// longer.  Four regimes are supported, named after the inner product that
// defines self-orthogonality on the classical side:
//
//   Hermitian        C in F_{q^2}^n,        C subset of C^perpH
//   Symplectic       C in F_q^{2n},         C subset of C^perpS
//   CSS              C1, C2 in F_q^n,       C2^perpE subset of C1
//   TraceSymplectic  C additive in F_q^{2n}, C subset of C^perpT
//
// Dimensions of quantum codes are tracked as log_p of the code space
// cardinality (klogp), so the fractional q-ary dimensions that additive
// codes produce stay exact.  Distances are tracked as a window
// [d_lower, d_upper]; the two agree exactly when the distance is known.

enum class Regime { Hermitian, Symplectic, CSS, TraceSymplectic };
enum class Purity { Pure, Impure, Unknown };

const char* regime_name(Regime r);
const char* purity_name(Purity p);

struct QuantumParams {
  size_t n = 0;          // number of subsystems
  long long klogp = 0;   // log_p |code space|
  u64 q = 0;             // subsystem alphabet, q = p^m
  size_t m = 1;          // degree of F_q over its prime field
  size_t d_lower = 1;
  size_t d_upper = 0;
  Purity purity = Purity::Unknown;
  Regime regime = Regime::Hermitian;
  std::string provenance;

  bool k_integral() const { return klogp % static_cast<long long>(m) == 0; }
  long long k() const;     // q-ary dimension; throws when fractional
  double k_value() const { return static_cast<double>(klogp) / static_cast<double>(m); }
  void validate() const;
  // k > n - 2(d_lower - 1) violates the Singleton bound; a flagged value
  // signals a bookkeeping bug upstream, not a remarkable code.
  bool singleton_red_flag() const;
  std::string to_string() const;
};

struct DistanceOptions {
  bool compute = true;   // skip all weight searches when false
  size_t threshold = 0;  // early-exit threshold forwarded to weight queries
  int threads = 1;
  // Cap, in log2 of the enumerated span size, for the F_p enumerations
  // that additive (trace-symplectic) distances require.  Runs that would
  // exceed it degrade to the trivial window [1, n].
  double additive_bits = 24.0;
};

// Everything needed to audit an extension: the block rows of the
// generator matrix of the lengthened code and of its dual, with the
// bookkeeping constants.  Block shapes depend on the regime:
//
//   Hermitian        A  (n-k-s) x n   complement of the hull in C^perpH
//                    M  s x n         hull generators
//                    B  e x n         orthonormalized complement of the
//                                     hull in C, B B^* = I_e
//                    beta             scalar with beta^{q+1} = -1
//   Symplectic       A, M as above (symplectic versions, 2n columns);
//                    B11|B12 and B21|B22 the two halves of the
//                    symplectic pair basis of the hull complement in C
//   CSS              A complement of C1 cap C2^perpE in C1, A2 the same
//                    for C2; M12, M21 the two relative hulls; B12, B21
//                    complements of the relative hulls in C2^perpE and
//                    C1^perpE; E = B12 B21^T invertible
//
// Cprime is the self-orthogonal lengthened code (for CSS, the symplectic
// product code over 2(n+e) columns), and G generates its dual.
struct ExtensionWitness {
  Regime regime = Regime::Hermitian;
  size_t e = 0;
  Mat A, A2, M, B, B11, B12, B21, B22, M12, M21, E;
  u64 beta = 0;
  Mat G;
  LinearCode Cprime;
  // min over the pure-distance formula terms; 0 when not computed
  size_t d_pure = 0;
};

struct Extension {
  ExtensionWitness witness;
  QuantumParams params;
};

// Direct constructions from exactly self-orthogonal inputs.
QuantumParams hermitian_construction(const LinearCode& C, const DistanceOptions& opt = {});
QuantumParams symplectic_construction(const LinearCode& C, const DistanceOptions& opt = {});
QuantumParams css_construction(const LinearCode& C1, const LinearCode& C2,
                               const DistanceOptions& opt = {});
QuantumParams trace_symplectic_construction(const AdditiveCode& C,
                                            const DistanceOptions& opt = {});

// Extensions of nearly self-orthogonal inputs.  A caller-supplied rng
// randomizes the complement bases (the defect and the parameter window
// do not depend on the choice); omitted, a deterministic complement is
// used.  Exactly self-orthogonal inputs pass through with e = 0.
Extension extend_hermitian(const LinearCode& C, const DistanceOptions& opt = {},
                           std::mt19937_64* rng = nullptr);
Extension extend_symplectic(const LinearCode& C, const DistanceOptions& opt = {},
                            std::mt19937_64* rng = nullptr);
Extension extend_css(const LinearCode& C1, const LinearCode& C2,
                     const DistanceOptions& opt = {}, std::mt19937_64* rng = nullptr);
Extension extend_trace_symplectic(const AdditiveCode& C, const DistanceOptions& opt = {},
                                  std::mt19937_64* rng = nullptr);

// Secondary codes guaranteed to exist given p: subcode, lengthening,
// puncturing, and the pure-code trade of one column for one dimension.
std::vector<QuantumParams> propagate(const QuantumParams& p);
// Iterated propagation up to the given depth; redundant claims (covered
// by another entry at the same length) are pruned.
std::vector<QuantumParams> propagate_closure(const QuantumParams& p, int depth = 3);
// Strict dominance at equal length: same q and n, dimension and distance
// at least as good with one of the two strictly better.
bool dominates(const QuantumParams& a, const QuantumParams& b);

}  // namespace qtx
