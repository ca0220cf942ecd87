// Copyright 2026 the qtx authors
// SPDX-License-Identifier: Apache-2.0

#include "qtx/io.hpp"

#include <cctype>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace qtx {

namespace {

using nlohmann::json;

std::pair<size_t, size_t> line_col(const std::string& text, size_t byte) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(e.what(), line, col);
  }
}

const json& need(const json& o, const char* key, const std::string& where) {
  if (!o.is_object()) throw ParseError(where + ": expected an object");
  auto it = o.find(key);
  if (it == o.end()) throw ParseError(where + ": missing \"" + key + "\"");
  return *it;
}

u64 need_u64(const json& o, const char* key, const std::string& where) {
  const json& v = need(o, key, where);
  if (!v.is_number_unsigned())
    throw ParseError(where + ": \"" + key + "\" must be a non-negative integer");
  return v.get<u64>();
}

u64 opt_u64(const json& o, const char* key, u64 dflt) {
  if (!o.is_object()) return dflt;
  auto it = o.find(key);
  if (it == o.end()) return dflt;
  if (!it->is_number_unsigned())
    throw ParseError(std::string("\"") + key + "\" must be a non-negative integer");
  return it->get<u64>();
}

u64 elem_from_json(const Field& F, const json& v, const std::string& where) {
  u64 code;
  if (v.is_number_unsigned()) {
    code = v.get<u64>();
  } else if (v.is_string()) {
    try {
      code = elem_parse(F, v.get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(where + ": " + e.what());
    }
  } else {
    throw ParseError(where + ": expected an element code or notation string");
  }
  if (code >= F.size())
    throw ParseError(where + ": code " + std::to_string(code) +
                     " out of range for a field of size " + std::to_string(F.size()));
  return code;
}

bool all_digits(const std::string& s) {
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return !s.empty();
}

Poly poly_from_json(const Field& F, const json& v, const std::string& where) {
  Poly f;
  if (v.is_array()) {
    for (size_t i = 0; i < v.size(); ++i)
      f.push_back(elem_from_json(F, v[i], where + "[" + std::to_string(i) + "]"));
  } else if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.size() > 1 && all_digits(s) && F.size() <= 10) {
      for (char c : s) {
        const u64 code = static_cast<u64>(c - '0');
        if (code >= F.size())
          throw ParseError(where + ": digit " + std::string(1, c) +
                           " out of range for a field of size " +
                           std::to_string(F.size()));
        f.push_back(code);
      }
    } else {
      try {
        f = poly_parse(F, s);
      } catch (const std::exception& e) {
        throw ParseError(where + ": " + e.what());
      }
    }
  } else if (v.is_number_unsigned()) {
    f = poly_constant(elem_from_json(F, v, where));
  } else {
    throw ParseError(where + ": expected a coefficient array, string, or code");
  }
  return poly_trim(std::move(f));
}

ParsedField field_from_obj(const json& o, const std::string& where) {
  const u64 p = need_u64(o, "p", where);
  std::vector<int> degrees;
  if (o.contains("degrees")) {
    const json& d = o["degrees"];
    if (!d.is_array()) throw ParseError(where + ": \"degrees\" must be an array");
    for (const json& x : d) {
      if (!x.is_number_unsigned() || x.get<u64>() == 0)
        throw ParseError(where + ": degrees must be positive integers");
      degrees.push_back(static_cast<int>(x.get<u64>()));
    }
  }
  std::vector<Poly> moduli;
  if (o.contains("moduli")) {
    const json& ms = o["moduli"];
    if (!ms.is_array()) throw ParseError(where + ": \"moduli\" must be an array");
    for (size_t i = 0; i < ms.size(); ++i) {
      const json& mo = ms[i];
      if (!mo.is_array())
        throw ParseError(where + ": each modulus is a coefficient array");
      Poly f;
      for (const json& c : mo) {
        if (!c.is_number_unsigned())
          throw ParseError(where + ": modulus coefficients are plain codes");
        f.push_back(c.get<u64>());
      }
      moduli.push_back(std::move(f));
    }
  }
  std::shared_ptr<const Tower> tw;
  try {
    tw = moduli.empty() ? std::make_shared<const Tower>(p, degrees)
                        : std::make_shared<const Tower>(p, degrees, moduli);
  } catch (const std::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
  const u64 lvl = opt_u64(o, "level", static_cast<u64>(tw->levels() - 1));
  if (lvl >= static_cast<u64>(tw->levels()))
    throw ParseError(where + ": level " + std::to_string(lvl) +
                     " outside a tower of " + std::to_string(tw->levels()) +
                     " levels");
  const Field F = tw->field(static_cast<int>(lvl));
  return ParsedField{std::move(tw), F};
}

json field_obj(const Field& F) {
  if (F.tw == nullptr) throw std::logic_error("io: field handle without a tower");
  const Tower& tw = *F.tw;
  json o;
  o["p"] = tw.p();
  json degrees = json::array();
  json moduli = json::array();
  for (int lvl = 1; lvl < tw.levels(); ++lvl) {
    degrees.push_back(tw.degree(lvl));
    moduli.push_back(tw.modulus(lvl));
  }
  o["degrees"] = std::move(degrees);
  o["moduli"] = std::move(moduli);
  if (F.lvl != tw.levels() - 1) o["level"] = F.lvl;
  return o;
}

json spec_obj(const QTCodeSpec& spec, u64 compress_m) {
  json o;
  o["field"] = field_obj(spec.base);
  o["m"] = spec.m;
  o["ell"] = spec.ell;
  o["lambda"] = spec.lambda;
  auto block = [](const std::vector<std::vector<Poly>>& gens) {
    json rows = json::array();
    for (const auto& tuple : gens) {
      json row = json::array();
      for (const Poly& f : tuple) row.push_back(f);
      rows.push_back(std::move(row));
    }
    return rows;
  };
  o["generators"] = block(spec.generators);
  if (!spec.generators2.empty()) o["generators2"] = block(spec.generators2);
  if (compress_m != 0) o["compress_m"] = compress_m;
  return o;
}

ParsedSpec spec_from_obj(const json& doc, const std::string& where) {
  ParsedField pf = field_from_obj(need(doc, "field", where), where + ".field");
  QTCodeSpec spec;
  spec.base = pf.F;
  spec.m = need_u64(doc, "m", where);
  spec.ell = need_u64(doc, "ell", where);
  if (spec.m == 0 || spec.ell == 0)
    throw ParseError(where + ": m and ell must be positive");
  spec.lambda = elem_from_json(pf.F, need(doc, "lambda", where), where + ".lambda");
  auto block = [&](const char* key) {
    std::vector<std::vector<Poly>> gens;
    const json& rows = need(doc, key, where);
    if (!rows.is_array())
      throw ParseError(where + ": \"" + key + "\" must be an array of rows");
    for (size_t i = 0; i < rows.size(); ++i) {
      const json& row = rows[i];
      const std::string at =
          where + "." + key + "[" + std::to_string(i) + "]";
      if (!row.is_array() || row.size() != spec.ell)
        throw ParseError(at + ": expected " + std::to_string(spec.ell) +
                         " polynomials");
      std::vector<Poly> tuple;
      for (size_t t = 0; t < row.size(); ++t) {
        Poly f = poly_from_json(pf.F, row[t], at + "[" + std::to_string(t) + "]");
        if (poly_deg(f) >= 0 && static_cast<u64>(poly_deg(f)) >= spec.m)
          throw ParseError(at + "[" + std::to_string(t) +
                           "]: degree must stay below m");
        tuple.push_back(std::move(f));
      }
      gens.push_back(std::move(tuple));
    }
    return gens;
  };
  spec.generators = block("generators");
  if (doc.contains("generators2")) spec.generators2 = block("generators2");
  ParsedSpec ps;
  ps.tower = std::move(pf.tower);
  ps.spec = std::move(spec);
  ps.compress_m = opt_u64(doc, "compress_m", 0);
  return ps;
}

const char* purity_key(Purity p) { return purity_name(p); }

Purity purity_from_name(const std::string& s, const std::string& where) {
  if (s == "pure") return Purity::Pure;
  if (s == "impure") return Purity::Impure;
  if (s == "unknown") return Purity::Unknown;
  throw ParseError(where + ": unknown purity \"" + s + "\"");
}

Regime regime_from_name(const std::string& s, const std::string& where) {
  if (s == "hermitian") return Regime::Hermitian;
  if (s == "symplectic") return Regime::Symplectic;
  if (s == "css") return Regime::CSS;
  if (s == "trace-symplectic") return Regime::TraceSymplectic;
  throw ParseError(where + ": unknown regime \"" + s + "\"");
}

json params_obj(const QuantumParams& p) {
  json o;
  o["n"] = p.n;
  o["klogp"] = p.klogp;
  o["q"] = p.q;
  o["m"] = p.m;
  o["d_lower"] = p.d_lower;
  o["d_upper"] = p.d_upper;
  o["purity"] = purity_key(p.purity);
  o["regime"] = regime_name(p.regime);
  if (!p.provenance.empty()) o["provenance"] = p.provenance;
  return o;
}

QuantumParams params_from_obj(const json& o, const std::string& where) {
  QuantumParams p;
  p.n = need_u64(o, "n", where);
  const json& kl = need(o, "klogp", where);
  if (!kl.is_number_integer())
    throw ParseError(where + ": \"klogp\" must be an integer");
  p.klogp = kl.get<long long>();
  p.q = need_u64(o, "q", where);
  p.m = need_u64(o, "m", where);
  p.d_lower = need_u64(o, "d_lower", where);
  p.d_upper = need_u64(o, "d_upper", where);
  const json& pu = need(o, "purity", where);
  if (!pu.is_string()) throw ParseError(where + ": \"purity\" must be a string");
  p.purity = purity_from_name(pu.get<std::string>(), where);
  const json& re = need(o, "regime", where);
  if (!re.is_string()) throw ParseError(where + ": \"regime\" must be a string");
  p.regime = regime_from_name(re.get<std::string>(), where);
  if (o.contains("provenance")) {
    if (!o["provenance"].is_string())
      throw ParseError(where + ": \"provenance\" must be a string");
    p.provenance = o["provenance"].get<std::string>();
  }
  return p;
}

json record_obj(const ResultRecord& r) {
  json o;
  o["params"] = params_obj(r.params);
  o["spec"] = spec_obj(r.spec, r.compress_m);
  o["witness"] = r.witness;
  o["seed"] = r.seed;
  o["iteration"] = r.iteration;
  o["threshold"] = r.threshold;
  o["exact"] = r.exact;
  return o;
}

ResultRecord record_from_obj(const json& o, const std::string& where) {
  ResultRecord r;
  r.params = params_from_obj(need(o, "params", where), where + ".params");
  ParsedSpec ps = spec_from_obj(need(o, "spec", where), where + ".spec");
  r.spec = std::move(ps.spec);
  r.tower = std::move(ps.tower);
  r.compress_m = ps.compress_m;
  const json& w = need(o, "witness", where);
  if (!w.is_string()) throw ParseError(where + ": \"witness\" must be a string");
  r.witness = w.get<std::string>();
  r.seed = need_u64(o, "seed", where);
  r.iteration = need_u64(o, "iteration", where);
  r.threshold = need_u64(o, "threshold", where);
  const json& ex = need(o, "exact", where);
  if (!ex.is_boolean()) throw ParseError(where + ": \"exact\" must be a boolean");
  r.exact = ex.get<bool>();
  return r;
}

json mat_obj(const Mat& A) {
  json rows = json::array();
  for (size_t i = 0; i < A.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < A.cols(); ++j) row.push_back(A(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_obj(const Field& F, const json& v, size_t cols,
                 const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array of rows");
  Mat A(F, 0, cols);
  for (size_t i = 0; i < v.size(); ++i) {
    const json& row = v[i];
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != cols)
      throw ParseError(at + ": expected " + std::to_string(cols) + " entries");
    std::vector<u64> r(cols);
    for (size_t j = 0; j < cols; ++j)
      r[j] = elem_from_json(F, row[j], at + "[" + std::to_string(j) + "]");
    A.append_row(r);
  }
  return A;
}

struct Fnv1a {
  u64 h = 1469598103934665603ull;
  void eat(u64 x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  void eat(const Mat& A) {
    eat(A.rows());
    eat(A.cols());
    for (size_t i = 0; i < A.rows(); ++i)
      for (size_t j = 0; j < A.cols(); ++j) eat(A(i, j));
  }
};

u64 log_p_size(const Field& F) {
  u64 s = F.p();
  u64 m = 1;
  while (s < F.size()) {
    s *= F.p();
    ++m;
  }
  return m;
}

}  // namespace

ParseError::ParseError(const std::string& msg, size_t line, size_t column)
    : std::runtime_error(line == 0 ? msg
                                   : msg + " (line " + std::to_string(line) +
                                         ", column " + std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

ParsedField field_from_json(const std::string& text) {
  return field_from_obj(parse_document(text), "field");
}

std::string field_to_json(const Field& F) { return field_obj(F).dump(2); }

ParsedSpec spec_from_json(const std::string& text) {
  return spec_from_obj(parse_document(text), "spec");
}

std::string spec_to_json(const QTCodeSpec& spec, u64 compress_m) {
  return spec_obj(spec, compress_m).dump(2);
}

std::string params_to_json(const QuantumParams& p) { return params_obj(p).dump(2); }

QuantumParams params_from_json(const std::string& text) {
  return params_from_obj(parse_document(text), "params");
}

std::string record_to_json_line(const ResultRecord& r) {
  return record_obj(r).dump();
}

ResultRecord record_from_json_line(const std::string& line, size_t lineno) {
  json doc;
  try {
    doc = json::parse(line);
  } catch (const json::parse_error& e) {
    const auto [l, c] = line_col(line, e.byte > 0 ? e.byte - 1 : 0);
    (void)l;
    throw ParseError(e.what(), lineno, c);
  }
  try {
    return record_from_obj(doc, "record");
  } catch (const ParseError& e) {
    if (e.line() != 0 || lineno == 0) throw;
    throw ParseError(e.what(), lineno, 1);
  }
}

std::vector<ResultRecord> read_records(std::istream& in) {
  std::vector<ResultRecord> out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(record_from_json_line(line, lineno));
  }
  return out;
}

void write_records(std::ostream& out, const std::vector<ResultRecord>& records) {
  for (const ResultRecord& r : records) out << record_to_json_line(r) << '\n';
}

std::vector<KnownEntry> read_known_table(std::istream& in) {
  std::vector<KnownEntry> table;
  std::vector<std::string> problems;
  size_t first_bad = 0;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream row(line);
    while (std::getline(row, cell, ',')) {
      const size_t a = cell.find_first_not_of(" \t\r");
      const size_t b = cell.find_last_not_of(" \t\r");
      cells.push_back(a == std::string::npos ? "" : cell.substr(a, b - a + 1));
    }
    auto numeric = [](const std::string& s) {
      return all_digits(s);
    };
    const bool header =
        lineno == 1 && !cells.empty() && !numeric(cells[0]);
    if (header) continue;
    if (cells.size() != 4 || !numeric(cells[0]) || !numeric(cells[1]) ||
        !numeric(cells[2]) || !numeric(cells[3])) {
      if (problems.empty()) first_bad = lineno;
      problems.push_back("row " + std::to_string(lineno) + ": \"" + line + "\"");
      continue;
    }
    KnownEntry e;
    e.q = std::stoull(cells[0]);
    e.n = std::stoull(cells[1]);
    e.k = std::stoull(cells[2]);
    e.d = std::stoull(cells[3]);
    if (e.q < 2 || e.n == 0 || e.k > e.n || e.d > e.n) {
      if (problems.empty()) first_bad = lineno;
      problems.push_back("row " + std::to_string(lineno) +
                         ": values out of range");
      continue;
    }
    table.push_back(e);
  }
  if (!problems.empty()) {
    std::string msg = "known table: " + std::to_string(problems.size()) +
                      " malformed row(s): ";
    for (size_t i = 0; i < problems.size(); ++i) {
      if (i) msg += "; ";
      msg += problems[i];
    }
    throw ParseError(msg, first_bad, 1);
  }
  return table;
}

u64 known_distance(const std::vector<KnownEntry>& table, u64 q, u64 n, u64 k) {
  u64 best = 0;
  for (const KnownEntry& e : table)
    if (e.q == q && e.n == n && e.k == k && e.d > best) best = e.d;
  return best;
}

std::string witness_digest(const ExtensionWitness& w) {
  Fnv1a f;
  f.eat(static_cast<u64>(w.regime));
  f.eat(w.e);
  f.eat(w.beta);
  f.eat(w.A);
  f.eat(w.A2);
  f.eat(w.M);
  f.eat(w.B);
  f.eat(w.B11);
  f.eat(w.B12);
  f.eat(w.B21);
  f.eat(w.B22);
  f.eat(w.M12);
  f.eat(w.M21);
  f.eat(w.E);
  f.eat(w.G);
  f.eat(w.Cprime.gen());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(f.h));
  return std::string(buf);
}

std::string certificate_to_json(const Extension& ext, const std::string& origin) {
  const ExtensionWitness& w = ext.witness;
  json o;
  o["type"] = "certificate";
  if (!origin.empty()) o["origin"] = origin;
  o["regime"] = regime_name(w.regime);
  o["field"] = field_obj(w.Cprime.field());
  o["length"] = w.Cprime.n();
  o["e"] = w.e;
  if (ext.params.regime == Regime::Hermitian) o["beta"] = w.beta;
  json blocks;
  auto put = [&](const char* key, const Mat& A) {
    if (A.rows() != 0 || A.cols() != 0) blocks[key] = mat_obj(A);
  };
  put("A", w.A);
  put("A2", w.A2);
  put("M", w.M);
  put("B", w.B);
  put("B11", w.B11);
  put("B12", w.B12);
  put("B21", w.B21);
  put("B22", w.B22);
  put("M12", w.M12);
  put("M21", w.M21);
  put("E", w.E);
  o["blocks"] = std::move(blocks);
  o["G"] = mat_obj(w.G);
  o["cprime"] = mat_obj(w.Cprime.gen());
  if (w.d_pure != 0) o["d_pure"] = w.d_pure;
  o["params"] = params_obj(ext.params);
  o["parameter_line"] = ext.params.to_string();
  return o.dump(2);
}

CertificateCheck verify_certificate(const std::string& text) {
  const json doc = parse_document(text);
  const std::string where = "certificate";
  const json& type = need(doc, "type", where);
  if (!type.is_string() || type.get<std::string>() != "certificate")
    throw ParseError(where + ": \"type\" must be \"certificate\"");

  CertificateCheck check;
  ParsedField pf = field_from_obj(need(doc, "field", where), where + ".field");
  const Field F = pf.F;
  check.params = params_from_obj(need(doc, "params", where), where + ".params");
  const QuantumParams& P = check.params;
  const json& re = need(doc, "regime", where);
  if (!re.is_string()) throw ParseError(where + ": \"regime\" must be a string");
  const Regime regime = regime_from_name(re.get<std::string>(), where);
  const size_t length = need_u64(doc, "length", where);
  const u64 e = need_u64(doc, "e", where);
  const Mat Gp = mat_from_obj(F, need(doc, "G", where), length, where + ".G");
  const Mat Cp = mat_from_obj(F, need(doc, "cprime", where), length, where + ".cprime");

  auto flag = [&](const std::string& msg) {
    check.ok = false;
    check.failures.push_back(msg);
  };

  if (regime != P.regime) flag("regime disagrees with the parameter block");
  try {
    P.validate();
  } catch (const std::exception& ex) {
    flag(std::string("parameter block: ") + ex.what());
  }

  const LinearCode Cprime =
      Cp.rows() == 0 ? LinearCode::zero(F, length) : LinearCode::from_span(F, Cp);
  const IPKind kind =
      regime == Regime::Hermitian ? IPKind::Hermitian : IPKind::Symplectic;

  const Mat gram = gram_matrix(Cprime.gen(), kind);
  bool gram_zero = true;
  for (size_t i = 0; i < gram.rows() && gram_zero; ++i)
    for (size_t j = 0; j < gram.cols(); ++j)
      if (gram(i, j) != 0) {
        gram_zero = false;
        break;
      }
  if (!gram_zero) flag("the stated code is not self-orthogonal");

  const LinearCode Gspan =
      Gp.rows() == 0 ? LinearCode::zero(F, length) : LinearCode::from_span(F, Gp);
  if (!(Gspan == dual(Cprime, kind)))
    flag("G does not span the dual of the stated code");

  const u64 lp = log_p_size(F);
  const long long klogp_expect =
      static_cast<long long>(length * lp) / 2 -
      static_cast<long long>(Cprime.dim() * lp);
  if (length * lp % 2 != 0 || P.klogp != klogp_expect)
    flag("dimension bookkeeping does not reproduce klogp");

  u64 qm = 1;
  for (size_t i = 0; i < P.m; ++i) qm *= F.p();
  if (P.q != qm) flag("alphabet is not p^m");

  size_t n_expect = 0;
  switch (regime) {
    case Regime::Hermitian:
      n_expect = length;
      break;
    case Regime::Symplectic:
    case Regime::CSS:
      n_expect = length / 2;
      break;
    case Regime::TraceSymplectic:
      n_expect = P.m == 0 ? 0 : length / (2 * P.m);
      break;
  }
  if (P.n != n_expect) flag("length bookkeeping does not reproduce n");

  if (regime == Regime::Hermitian && e > 0) {
    const u64 beta = need_u64(doc, "beta", where);
    const u64 q = hermitian_q(F);
    if (F.mul(beta, F.pow(beta, q)) != F.neg(1))
      flag("beta does not have norm -1");
  }

  const json& line = need(doc, "parameter_line", where);
  if (!line.is_string() || line.get<std::string>() != P.to_string())
    flag("parameter line disagrees with the parameter block");

  return check;
}

}  // namespace qtx
