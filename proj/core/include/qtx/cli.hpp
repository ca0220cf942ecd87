// Command surface: spec analysis, randomized constituent search, result
// propagation, comparison against known-parameter tables, and
// re-verification of stored artifacts.  The functions here do the work
// behind the command-line tool and return its exit codes: 0 on success,
// 2 on verification failure, 3 on parse or configuration errors.
//
// Copyright 2026 the qtx authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "qtx/io.hpp"

namespace qtx {

// Per-slot dimension range for the constituent sampler; pair slots apply
// the range to each of their two constituents.
struct SlotRange {
  u64 lo = 1;
  u64 hi = 1;
};

// Randomized search over quasi-twisted specs: draw self-orthogonal
// constituents slot by slot, perturb exactly one designated slot, and
// keep the extensions whose certified distance clears the bar.  Searches
// run under the Hermitian, symplectic, or CSS (lambda-pair) regime; the
// trace-symplectic regime is a compression of symplectic results, not a
// search space of its own.
struct SearchConfig {
  Regime regime = Regime::Hermitian;
  ParsedField field;
  u64 m = 0;
  u64 ell = 0;
  u64 lambda = 1;
  // One entry per slot in frame order, or a single entry for all slots.
  std::vector<SlotRange> slot_dims{SlotRange{}};
  size_t defect_slot = 0;
  u64 seed = 0;
  u64 budget = 0;  // iterations; 0 draws nothing
  // Keep a record when d_lower >= accept; with a comparison table, the
  // bar for tabulated (q, n, k) rises to the known distance plus one.
  size_t accept = 1;
  size_t threshold = 0;  // early-exit threshold for the weight runs
  int retries = 64;      // re-samples per slot draw before the iteration is skipped
  int threads = 1;
};

struct SearchStats {
  u64 iterations = 0;
  u64 sampling_shortfalls = 0;  // iterations skipped: no constituents in range
  u64 rejected = 0;             // extensions below the acceptance bar
};

// Deterministic for a fixed seed: iteration i draws from its own
// generator keyed by (seed, i), so the record set is independent of
// scheduling.  Throws std::invalid_argument for regime-incompatible
// lambda or infeasible dimension ranges.
std::vector<ResultRecord> run_search(const SearchConfig& cfg,
                                     const std::vector<KnownEntry>* table = nullptr,
                                     SearchStats* stats = nullptr);

// Expansion plus the regime's extension, as one step: Hermitian and
// symplectic specs extend their expanded code, a lambda-pair spec feeds
// the duals of its two blocks to the CSS extension, and a symplectic
// spec over a prime field compresses into F_{p^compress_m} before the
// trace-symplectic extension.  Compression with compress_m > 1 builds a
// fresh tower the returned witness refers into; tower_out must then be
// non-null and keeps it alive.
Extension extension_from_spec(const QTCodeSpec& spec, Regime regime,
                              u64 compress_m, const DistanceOptions& opt,
                              std::mt19937_64* rng = nullptr,
                              std::shared_ptr<const Tower>* tower_out = nullptr);

// Re-run a stored record's construction under its recorded threshold and
// compare parameter lines; a false result means the artifact does not
// reproduce.  line_out receives the freshly computed line when non-null.
bool reverify_record(const ResultRecord& r, int threads = 1,
                     std::string* line_out = nullptr);

struct AnalyzeOptions {
  std::string spec_path;
  Regime regime = Regime::Hermitian;
  // log2 budget for the enumerations behind additive distances; 0 turns
  // every distance computation off.
  double budget = 24.0;
  size_t threshold = 0;
  int threads = 1;
  std::string certificate_path;  // write a construction certificate here
};
int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err);

struct SearchOptions {
  SearchConfig config;
  std::string known_table_path;  // optional comparison table
  std::string out_path;          // empty writes records to `out`
};
int cmd_search(const SearchOptions& opt, std::ostream& out, std::ostream& err);

struct PropagateOptions {
  std::string records_path;
  int depth = 3;
  bool csv = false;  // emit q,n,k,d rows instead of the text table
};
int cmd_propagate(const PropagateOptions& opt, std::ostream& out, std::ostream& err);

struct CompareOptions {
  std::string records_path;
  std::string known_table_path;
};
int cmd_compare(const CompareOptions& opt, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::string path;  // certificate document or record stream
  int threads = 1;
};
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace qtx
