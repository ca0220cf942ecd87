// File formats: quasi-twisted spec documents, search result records,
// known-parameter tables, and construction certificates.  JSON handling
// stays inside the implementation; the public surface speaks library
// types only.
//
// Copyright 2026 the qtx authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtx/constrx.hpp"
#include "qtx/qt.hpp"

namespace qtx {

// Malformed input.  line/column are 1-based positions inside the
// offending document when known; 0 marks a structural error that has no
// useful position.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg, size_t line = 0, size_t column = 0);
  size_t line() const { return line_; }
  size_t column() const { return column_; }

 private:
  size_t line_;
  size_t column_;
};

// A field handle together with the tower that owns it.
struct ParsedField {
  std::shared_ptr<const Tower> tower;
  Field F;
};

// Tower document: {"p": 2, "degrees": [2], "moduli": [[1,1,1]], "level": 1}.
// Moduli are constant-first coefficient code lists, one per extension
// step; omitting them selects the canonical (Conway-first) chain.
// "level" defaults to the top of the tower.
ParsedField field_from_json(const std::string& text);
std::string field_to_json(const Field& F);

// A quasi-twisted spec document:
//
//   {"field": {...}, "m": 21, "ell": 2, "lambda": 3,
//    "generators": [[poly, poly], ...], "generators2": [...],
//    "compress_m": 2}
//
// Each generator row lists ell polynomials.  A polynomial is an array of
// coefficient codes (constant term first), a digit string such as
// "110201" over fields of size <= 10 (one code per character, constant
// first), or an expression like "x^3 + w^2 x^2 + w x + w^2".  lambda and
// array entries accept codes or element notation ("w^2", "-1").
// generators2 is the lambda^{-1} block and only valid for that regime;
// compress_m is the alphabet extension degree the trace-symplectic
// regime compresses into, 0 when absent.
struct ParsedSpec {
  std::shared_ptr<const Tower> tower;
  QTCodeSpec spec;
  u64 compress_m = 0;
};
ParsedSpec spec_from_json(const std::string& text);
std::string spec_to_json(const QTCodeSpec& spec, u64 compress_m = 0);

std::string params_to_json(const QuantumParams& p);
QuantumParams params_from_json(const std::string& text);

// One line of a search result stream.  wall_ms is advisory and stays out
// of the serialized form, so equal seeds reproduce byte-identical
// streams; threshold records the early-exit setting the distance window
// was computed under, which re-verification must reuse.
struct ResultRecord {
  QuantumParams params;
  QTCodeSpec spec;
  std::shared_ptr<const Tower> tower;  // owns spec.base after parsing
  u64 compress_m = 0;
  std::string witness;  // digest of the extension witness
  u64 seed = 0;
  u64 iteration = 0;
  size_t threshold = 0;
  double wall_ms = 0;
  bool exact = false;  // distance window closed (both weight runs exact)
};

std::string record_to_json_line(const ResultRecord& r);
ResultRecord record_from_json_line(const std::string& line, size_t lineno = 0);
// Newline-delimited JSON; blank lines are skipped on input.
std::vector<ResultRecord> read_records(std::istream& in);
void write_records(std::ostream& out, const std::vector<ResultRecord>& records);

// Known-parameter table: CSV rows q,n,k,d with an optional header line.
// Every malformed row is reported (row numbers included) in one error.
struct KnownEntry {
  u64 q = 0;
  u64 n = 0;
  u64 k = 0;
  u64 d = 0;
};
std::vector<KnownEntry> read_known_table(std::istream& in);
// Largest tabulated d for (q, n, k); 0 when no row matches.
u64 known_distance(const std::vector<KnownEntry>& table, u64 q, u64 n, u64 k);

// Hex FNV-1a digest of the witness blocks.
std::string witness_digest(const ExtensionWitness& w);

// Construction certificate: one JSON document carrying the witness
// blocks, beta, the lengthened code, the generator matrix of its dual,
// and the claimed parameter line.
std::string certificate_to_json(const Extension& ext, const std::string& origin = {});

struct CertificateCheck {
  bool ok = true;
  QuantumParams params;               // the claimed parameters
  std::vector<std::string> failures;  // empty when ok
};

// Re-derive what the certificate claims: C' satisfies the regime's
// zero-Gram condition, G spans its dual, the dimension bookkeeping
// reproduces the claimed parameter line, and beta has norm -1 where one
// is required.  Distance claims are range-checked, not recomputed.
CertificateCheck verify_certificate(const std::string& text);

}  // namespace qtx
