// Copyright 2026 the qtx authors
// SPDX-License-Identifier: Apache-2.0

#include "qtx/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "json.hpp"
#include "qtx/qt.hpp"

using namespace qtx;

namespace {

std::string data_path(const std::string& name) {
  return std::string(QTX_TEST_DATA_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(static_cast<bool>(in));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempFile {
  std::string path;
  TempFile(std::string p, const std::string& content) : path(std::move(p)) {
    std::ofstream f(path, std::ios::binary);
    f << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

SearchConfig qubit_config() {
  SearchConfig cfg;
  cfg.regime = Regime::Hermitian;
  cfg.field = field_from_json(R"({"p": 2, "degrees": [2]})");
  cfg.m = 7;
  cfg.ell = 3;
  cfg.lambda = 1;
  cfg.slot_dims = {SlotRange{1, 1}, SlotRange{1, 1}};
  cfg.defect_slot = 0;
  cfg.seed = 11;
  cfg.budget = 8;
  cfg.accept = 1;
  return cfg;
}

ResultRecord qubit_record() {
  const ParsedSpec ps = spec_from_json(slurp(data_path("qc21_qubit.json")));
  ResultRecord r;
  r.spec = ps.spec;
  r.tower = ps.tower;
  r.params.n = 22;
  r.params.klogp = 6;
  r.params.q = 2;
  r.params.m = 1;
  r.params.d_lower = 6;
  r.params.d_upper = 6;
  r.params.purity = Purity::Impure;
  r.params.regime = Regime::Hermitian;
  r.witness = "0123456789abcdef";
  r.seed = 1;
  r.iteration = 0;
  r.exact = true;
  return r;
}

}  // namespace

TEST_CASE("search with zero budget emits an empty stream") {
  SearchConfig cfg = qubit_config();
  cfg.budget = 0;
  SearchStats st;
  CHECK(run_search(cfg, nullptr, &st).empty());
  CHECK(st.iterations == 0);

  SearchOptions so;
  so.config = cfg;
  std::ostringstream out, err;
  CHECK(cmd_search(so, out, err) == 0);
  CHECK(out.str().empty());
}

TEST_CASE("equal seeds reproduce byte-identical record streams") {
  SearchOptions so;
  so.config = qubit_config();
  std::ostringstream o1, e1, o2, e2;
  REQUIRE(cmd_search(so, o1, e1) == 0);
  REQUIRE(cmd_search(so, o2, e2) == 0);
  CHECK(o1.str() == o2.str());
  CHECK(!o1.str().empty());

  std::istringstream back(o1.str());
  const auto records = read_records(back);
  CHECK(!records.empty());
  for (const auto& r : records) CHECK(r.seed == so.config.seed);
}

TEST_CASE("hermitian search draws verifiable records") {
  SearchConfig cfg = qubit_config();
  cfg.budget = 12;
  SearchStats st;
  const auto records = run_search(cfg, nullptr, &st);
  CHECK(st.iterations == 12);
  REQUIRE(!records.empty());
  for (const auto& r : records) {
    r.params.validate();
    CHECK(!r.params.singleton_red_flag());
    CHECK(r.params.regime == Regime::Hermitian);
    CHECK(r.params.q == 2);
    CHECK(r.params.n >= 21);
    CHECK(r.witness.size() == 16);
    CHECK(r.exact == (r.params.d_lower == r.params.d_upper));
    std::string line;
    CHECK(reverify_record(r, 1, &line));
    CHECK(line == r.params.to_string());
  }
}

TEST_CASE("symplectic and css searches return self-consistent records") {
  SearchConfig s;
  s.regime = Regime::Symplectic;
  s.field = field_from_json(R"({"p": 2, "degrees": []})");
  s.m = 3;
  s.ell = 2;
  s.lambda = 1;
  s.slot_dims = {SlotRange{0, 1}};
  s.defect_slot = 0;
  s.seed = 5;
  s.budget = 10;
  const auto rs = run_search(s);
  REQUIRE(!rs.empty());
  for (const auto& r : rs) {
    CHECK(r.params.regime == Regime::Symplectic);
    CHECK(r.params.q == 2);
    CHECK(reverify_record(r));
  }

  SearchConfig c;
  c.regime = Regime::CSS;
  c.field = field_from_json(R"({"p": 2, "degrees": [2]})");
  c.m = 3;
  c.ell = 2;
  c.lambda = 2;  // w
  c.slot_dims = {SlotRange{0, 1}};
  c.defect_slot = 0;
  c.seed = 7;
  c.budget = 10;
  const auto rc = run_search(c);
  REQUIRE(!rc.empty());
  for (const auto& r : rc) {
    CHECK(r.params.regime == Regime::CSS);
    CHECK(r.params.q == 4);
    CHECK(reverify_record(r));
  }
}

TEST_CASE("infeasible configurations are rejected with a report") {
  SearchConfig cfg = qubit_config();
  cfg.slot_dims = {SlotRange{2, 2}, SlotRange{1, 1}};  // solo cap is ell/2 = 1
  CHECK_THROWS_AS(run_search(cfg), std::invalid_argument);

  cfg = qubit_config();
  cfg.slot_dims = {SlotRange{1, 1}, SlotRange{1, 1}, SlotRange{1, 1}};
  CHECK_THROWS_AS(run_search(cfg), std::invalid_argument);

  cfg = qubit_config();
  cfg.defect_slot = 9;
  CHECK_THROWS_AS(run_search(cfg), std::invalid_argument);

  cfg = qubit_config();
  cfg.slot_dims = {SlotRange{1, 0}};
  CHECK_THROWS_AS(run_search(cfg), std::invalid_argument);

  cfg = qubit_config();
  cfg.lambda = 0;
  CHECK_THROWS_AS(run_search(cfg), std::invalid_argument);

  SearchConfig f9;
  f9.regime = Regime::Hermitian;
  f9.field = field_from_json(R"({"p": 3, "degrees": [2]})");
  f9.m = 4;
  f9.ell = 2;
  f9.lambda = 3;  // generator of F9*, order 8 > q + 1
  f9.budget = 1;
  CHECK_THROWS_AS(run_search(f9), std::invalid_argument);

  SearchConfig sy = qubit_config();
  sy.regime = Regime::Symplectic;
  sy.field = field_from_json(R"({"p": 2, "degrees": []})");
  sy.lambda = 1;
  sy.ell = 3;  // symplectic needs even ell
  CHECK_THROWS_AS(run_search(sy), std::invalid_argument);

  SearchConfig cs = qubit_config();
  cs.regime = Regime::CSS;
  cs.lambda = 1;  // lambda pair needs lambda distinct from 1
  CHECK_THROWS_AS(run_search(cs), std::invalid_argument);

  SearchConfig ts = qubit_config();
  ts.regime = Regime::TraceSymplectic;
  CHECK_THROWS_AS(run_search(ts), std::invalid_argument);

  // the command surface reports the problem instead of emitting nothing
  SearchOptions so;
  so.config = qubit_config();
  so.config.slot_dims = {SlotRange{2, 2}, SlotRange{1, 1}};
  std::ostringstream out, err;
  CHECK(cmd_search(so, out, err) == 3);
  CHECK(out.str().empty());
  CHECK(err.str().find("slot 0") != std::string::npos);
}

TEST_CASE("analyze reports the length-21 pipeline") {
  AnalyzeOptions a;
  a.spec_path = data_path("qc21_qubit.json");
  a.regime = Regime::Hermitian;
  std::ostringstream out, err;
  REQUIRE(cmd_analyze(a, out, err) == 0);
  const std::string s = out.str();
  CHECK(s.find("regime hermitian") != std::string::npos);
  CHECK(s.find("expanded code: [21, 8") != std::string::npos);
  CHECK(s.find("self-orthogonal: no") != std::string::npos);
  CHECK(s.find("hull: dimension 7, defect 1, e = 1") != std::string::npos);
  CHECK(s.find("[[22, 6, 6]]_2") != std::string::npos);
  CHECK(s.find("impure") != std::string::npos);
}

TEST_CASE("analyze reports the zero spec with e = 0") {
  AnalyzeOptions a;
  a.spec_path = data_path("zero_f4.json");
  a.regime = Regime::Hermitian;
  std::ostringstream out, err;
  REQUIRE(cmd_analyze(a, out, err) == 0);
  const std::string s = out.str();
  CHECK(s.find("expanded code: [21, 0]_4") != std::string::npos);
  CHECK(s.find("hull: dimension 0, defect 0, e = 0") != std::string::npos);
  CHECK(s.find("[[21, 21, 1]]_2") != std::string::npos);
}

TEST_CASE("analyze handles the compressed symplectic spec structurally") {
  AnalyzeOptions a;
  a.spec_path = data_path("qc188_73.json");
  a.budget = 0;  // structure only, no distance work
  std::ostringstream out, err;
  REQUIRE(cmd_analyze(a, out, err) == 0);
  const std::string s = out.str();
  CHECK(s.find("regime trace-symplectic") != std::string::npos);
  CHECK(s.find("expanded code: [188, 73]_2") != std::string::npos);
  CHECK(s.find("hull: dimension 69, defect 4, e = 2") != std::string::npos);
  CHECK(s.find("[[48, 23/2, 1..48]]_4") != std::string::npos);
}

TEST_CASE("analyze writes a certificate that verify accepts") {
  AnalyzeOptions a;
  a.spec_path = data_path("qc21_qubit.json");
  a.certificate_path = "qtx_test_cli_cert.json";
  std::ostringstream out, err;
  REQUIRE(cmd_analyze(a, out, err) == 0);
  CHECK(out.str().find("certificate written") != std::string::npos);

  VerifyOptions v;
  v.path = a.certificate_path;
  std::ostringstream vo, ve;
  CHECK(cmd_verify(v, vo, ve) == 0);
  CHECK(vo.str().find("certificate ok") == 0);
  CHECK(vo.str().find("[[22, 6, 6]]_2") != std::string::npos);

  auto doc = nlohmann::json::parse(slurp(a.certificate_path));
  doc["parameter_line"] = "[[22, 6, 5]]_2";
  TempFile bad("qtx_test_cli_cert_bad.json", doc.dump(2));
  VerifyOptions vb;
  vb.path = bad.path;
  std::ostringstream bo, be;
  CHECK(cmd_verify(vb, bo, be) == 2);
  CHECK(bo.str().find("certificate failure") != std::string::npos);
  std::remove(a.certificate_path.c_str());
}

TEST_CASE("propagate expands records and prunes dominated claims") {
  ResultRecord good = qubit_record();
  ResultRecord worse = qubit_record();
  worse.params.d_lower = 5;
  worse.params.d_upper = 5;
  std::ostringstream lines;
  write_records(lines, {good, worse});
  TempFile rf("qtx_test_cli_prop.ndjson", lines.str());

  PropagateOptions po;
  po.records_path = rf.path;
  std::ostringstream out, err;
  REQUIRE(cmd_propagate(po, out, err) == 0);
  const std::string s = out.str();
  CHECK(s.find("[[22, 6, 6]]_2") != std::string::npos);
  CHECK(s.find("[[23, 6, 6]]_2") != std::string::npos);
  CHECK(s.find("[[22, 6, 5]]_2") == std::string::npos);

  PropagateOptions pc = po;
  pc.csv = true;
  std::ostringstream co, ce;
  REQUIRE(cmd_propagate(pc, co, ce) == 0);
  CHECK(co.str().rfind("q,n,k,d\n", 0) == 0);
  CHECK(co.str().find("2,23,6,6\n") != std::string::npos);

  TempFile ef("qtx_test_cli_prop_empty.ndjson", "");
  PropagateOptions pe;
  pe.records_path = ef.path;
  std::ostringstream eo, ee;
  CHECK(cmd_propagate(pe, eo, ee) == 0);
  CHECK(eo.str().empty());
}

TEST_CASE("compare classifies records against a known table") {
  std::ostringstream lines;
  write_records(lines, {qubit_record()});
  TempFile rf("qtx_test_cli_cmp.ndjson", lines.str());

  auto classify = [&](const std::string& table_text) {
    TempFile tf("qtx_test_cli_cmp_table.csv", table_text);
    CompareOptions co;
    co.records_path = rf.path;
    co.known_table_path = tf.path;
    std::ostringstream out, err;
    REQUIRE(cmd_compare(co, out, err) == 0);
    return out.str();
  };

  CHECK(classify("q,n,k,d\n2,22,6,5\n").find("new-record") == 0);
  CHECK(classify("q,n,k,d\n2,22,6,6\n").find("tie") == 0);
  CHECK(classify("q,n,k,d\n2,22,6,7\n").find("dominated") == 0);
  const std::string empty_table = classify("");
  CHECK(empty_table.find("new-record") == 0);
  CHECK(empty_table.find("best known: none") != std::string::npos);

  TempFile bad("qtx_test_cli_cmp_bad.csv", "q,n,k,d\n2,22\n");
  CompareOptions cb;
  cb.records_path = rf.path;
  cb.known_table_path = bad.path;
  std::ostringstream out, err;
  CHECK(cmd_compare(cb, out, err) == 3);
  CHECK(err.str().find("row 2") != std::string::npos);
}

TEST_CASE("verify reruns stored records and flags tampering") {
  SearchConfig cfg = qubit_config();
  const auto records = run_search(cfg);
  REQUIRE(!records.empty());
  std::ostringstream lines;
  write_records(lines, records);
  TempFile rf("qtx_test_cli_verify.ndjson", lines.str());

  VerifyOptions v;
  v.path = rf.path;
  std::ostringstream out, err;
  CHECK(cmd_verify(v, out, err) == 0);
  CHECK(out.str().find("ok") == 0);
  CHECK(out.str().find("mismatch") == std::string::npos);

  ResultRecord t = records[0];
  t.params.d_lower += 1;
  t.params.d_upper = std::max(t.params.d_upper, t.params.d_lower);
  TempFile tf("qtx_test_cli_verify_bad.ndjson", record_to_json_line(t) + "\n");
  VerifyOptions vb;
  vb.path = tf.path;
  std::ostringstream bo, be;
  CHECK(cmd_verify(vb, bo, be) == 2);
  CHECK(bo.str().find("mismatch") != std::string::npos);

  VerifyOptions missing;
  missing.path = "qtx_test_cli_no_such_file.ndjson";
  std::ostringstream mo, me;
  CHECK(cmd_verify(missing, mo, me) == 3);
}

TEST_CASE("search records clear a comparison table bar") {
  SearchConfig cfg = qubit_config();
  std::vector<KnownEntry> table;
  const auto base = run_search(cfg);
  REQUIRE(!base.empty());
  // pin the table at each found parameter point; nothing can beat it
  for (const auto& r : base)
    if (r.params.k_integral())
      table.push_back(KnownEntry{r.params.q, r.params.n,
                                 static_cast<u64>(r.params.k()), r.params.d_lower});
  SearchStats st;
  const auto blocked = run_search(cfg, &table, &st);
  for (const auto& r : blocked) {
    const u64 kn = known_distance(table, r.params.q, r.params.n,
                                  static_cast<u64>(r.params.k()));
    CHECK((kn == 0 || r.params.d_lower > kn));
  }
  CHECK(blocked.size() + st.rejected + st.sampling_shortfalls == st.iterations);
}
