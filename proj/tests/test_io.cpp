// Copyright 2026 the qtx authors
// SPDX-License-Identifier: Apache-2.0

#include "qtx/io.hpp"

#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qtx/orthobasis.hpp"

using namespace qtx;

TEST_CASE("field documents round-trip") {
  Tower tw(2, {2, 2});
  const Field F16 = tw.top();
  ParsedField pf = field_from_json(field_to_json(F16));
  CHECK(pf.F.size() == 16);
  CHECK(pf.tower->levels() == 3);
  CHECK(pf.tower->modulus(1) == tw.modulus(1));
  CHECK(pf.tower->modulus(2) == tw.modulus(2));

  const Field F4 = tw.field(1);
  ParsedField pm = field_from_json(field_to_json(F4));
  CHECK(pm.F.size() == 4);
  CHECK(pm.F.lvl == 1);
  CHECK(pm.tower->levels() == 3);

  ParsedField pp = field_from_json("{\"p\": 5}");
  CHECK(pp.F.size() == 5);
  CHECK(pp.tower->levels() == 1);

  ParsedField pc = field_from_json("{\"p\": 3, \"degrees\": [2]}");
  CHECK(pc.F.size() == 9);
  CHECK(pc.tower->modulus(1) == conway_polynomial(3, 2));
}

TEST_CASE("field documents reject bad input") {
  CHECK_THROWS_AS((void)field_from_json("{\"degrees\": [2]}"), ParseError);
  CHECK_THROWS_AS((void)field_from_json("{\"p\": 4}"), ParseError);
  CHECK_THROWS_AS((void)field_from_json("{\"p\": 2, \"level\": 1}"), ParseError);
  CHECK_THROWS_AS((void)field_from_json("{\"p\": 2, \"degrees\": [0]}"), ParseError);

  try {
    (void)field_from_json("{\n  \"p\": 2,\n  oops\n}");
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() >= 1);
  }
}

TEST_CASE("spec documents accept arrays, digit strings, and expressions") {
  const std::string text = R"({
    "field": {"p": 2, "degrees": [2]},
    "m": 4, "ell": 3, "lambda": "w^2",
    "generators": [[[3, 2, 3, 1], "3231", "x^3 + w^2 x^2 + w x + w^2"]]
  })";
  ParsedSpec ps = spec_from_json(text);
  CHECK(ps.spec.base.size() == 4);
  CHECK(ps.spec.m == 4);
  CHECK(ps.spec.ell == 3);
  CHECK(ps.spec.lambda == 3);
  CHECK(ps.compress_m == 0);
  REQUIRE(ps.spec.generators.size() == 1);
  const auto& row = ps.spec.generators[0];
  const Poly expect{3, 2, 3, 1};
  CHECK(row[0] == expect);
  CHECK(row[1] == expect);
  CHECK(row[2] == expect);
}

TEST_CASE("spec documents round-trip") {
  Tower tw(2, {2});
  QTCodeSpec spec;
  spec.base = tw.top();
  spec.m = 3;
  spec.ell = 2;
  spec.lambda = 2;
  spec.generators = {{Poly{1, 0, 2}, Poly{}}, {Poly{3}, Poly{0, 1}}};
  spec.generators2 = {{Poly{2, 2}, Poly{1}}};
  ParsedSpec ps = spec_from_json(spec_to_json(spec, 2));
  CHECK(ps.spec.m == spec.m);
  CHECK(ps.spec.ell == spec.ell);
  CHECK(ps.spec.lambda == spec.lambda);
  CHECK(ps.spec.generators == spec.generators);
  CHECK(ps.spec.generators2 == spec.generators2);
  CHECK(ps.compress_m == 2);
}

TEST_CASE("spec documents reject malformed content") {
  const std::string base = R"({"field": {"p": 2, "degrees": [2]}, "m": 3, "ell": 2,)";
  CHECK_THROWS_AS((void)spec_from_json(base + R"( "lambda": 9,
      "generators": [[[1], [1]]]})"),
                  ParseError);
  CHECK_THROWS_AS((void)spec_from_json(base + R"( "lambda": 1,
      "generators": [[[1]]]})"),
                  ParseError);
  CHECK_THROWS_AS((void)spec_from_json(base + R"( "lambda": 1,
      "generators": [[[1, 0, 0, 1], [1]]]})"),
                  ParseError);
  CHECK_THROWS_AS((void)spec_from_json(base + R"( "lambda": 1,
      "generators": [["14", [1]]]})"),
                  ParseError);
  CHECK_THROWS_AS((void)spec_from_json(R"({"field": {"p": 2, "degrees": [2]},
      "m": 0, "ell": 2, "lambda": 1, "generators": []})"),
                  ParseError);
}

TEST_CASE("parameter blocks round-trip") {
  QuantumParams p;
  p.n = 22;
  p.klogp = 6;
  p.q = 2;
  p.m = 1;
  p.d_lower = 6;
  p.d_upper = 6;
  p.purity = Purity::Impure;
  p.regime = Regime::Hermitian;
  p.provenance = "unit";
  QuantumParams r = params_from_json(params_to_json(p));
  CHECK(r.to_string() == p.to_string());
  CHECK(r.purity == p.purity);
  CHECK(r.regime == p.regime);
  CHECK(r.provenance == p.provenance);

  p.regime = Regime::TraceSymplectic;
  p.q = 4;
  p.m = 2;
  p.klogp = 23;
  p.n = 48;
  p.d_lower = 1;
  p.d_upper = 96;
  p.purity = Purity::Unknown;
  r = params_from_json(params_to_json(p));
  CHECK(r.to_string() == p.to_string());
  CHECK(r.regime == Regime::TraceSymplectic);
}

TEST_CASE("record streams round-trip byte for byte") {
  Tower tw(2, {2});
  ResultRecord rec;
  rec.params.n = 22;
  rec.params.klogp = 6;
  rec.params.q = 2;
  rec.params.m = 1;
  rec.params.d_lower = 6;
  rec.params.d_upper = 6;
  rec.params.regime = Regime::Hermitian;
  rec.spec.base = tw.top();
  rec.spec.m = 7;
  rec.spec.ell = 3;
  rec.spec.lambda = 1;
  rec.spec.generators = {{Poly{1}, Poly{0, 2}, Poly{3, 3}}};
  rec.witness = "0123456789abcdef";
  rec.seed = 42;
  rec.iteration = 7;
  rec.threshold = 5;
  rec.wall_ms = 123.456;  // advisory; must not reach the stream
  rec.exact = true;

  const std::string line = record_to_json_line(rec);
  CHECK(line.find("wall") == std::string::npos);
  ResultRecord back = record_from_json_line(line);
  CHECK(record_to_json_line(back) == line);
  CHECK(back.params.to_string() == rec.params.to_string());
  CHECK(back.spec.generators == rec.spec.generators);
  CHECK(back.seed == 42);
  CHECK(back.threshold == 5);
  CHECK(back.exact);

  std::stringstream ss;
  write_records(ss, {rec, rec});
  ss << "\n";  // trailing blank line is fine
  auto all = read_records(ss);
  CHECK(all.size() == 2);
  CHECK(record_to_json_line(all[1]) == line);
}

TEST_CASE("record streams report the offending line") {
  Tower tw(3, {});
  ResultRecord rec;
  rec.params.q = 3;
  rec.params.n = 4;
  rec.spec.base = tw.top();
  rec.spec.m = 2;
  rec.spec.ell = 2;
  rec.spec.lambda = 1;
  rec.spec.generators = {{Poly{1}, Poly{2}}};
  std::stringstream ss;
  ss << record_to_json_line(rec) << "\n";
  ss << "{\"seed\": }\n";
  try {
    (void)read_records(ss);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("known tables parse and flag bad rows") {
  std::stringstream good("q,n,k,d\n2,22,6,5\n2,22,6,6\n4,21,13,6\n");
  auto table = read_known_table(good);
  CHECK(table.size() == 3);
  CHECK(known_distance(table, 2, 22, 6) == 6);
  CHECK(known_distance(table, 4, 21, 13) == 6);
  CHECK(known_distance(table, 4, 21, 12) == 0);

  std::stringstream bad("2,22,6,5\nnot,a,row,here\n2,5\n2,4,5,1\n");
  try {
    (void)read_known_table(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("row 2") != std::string::npos);
    CHECK(msg.find("row 3") != std::string::npos);
    CHECK(msg.find("row 4") != std::string::npos);
    CHECK(e.line() == 2);
  }
}

TEST_CASE("certificates verify and catch tampering") {
  Tower tw(2, {2});
  const Field F = tw.top();
  std::mt19937_64 rng(2026);
  LinearCode C;
  Extension ext;
  for (;;) {
    C = random_code(F, 5, 3, rng);
    ext = extend_hermitian(C);
    if (ext.witness.e > 0) break;
  }
  const std::string cert = certificate_to_json(ext, "unit test");
  CertificateCheck chk = verify_certificate(cert);
  CHECK(chk.ok);
  CHECK(chk.failures.empty());
  CHECK(chk.params.to_string() == ext.params.to_string());

  nlohmann::json doc = nlohmann::json::parse(cert);

  {
    nlohmann::json bad = doc;
    bad["cprime"][0][0] = F.add(bad["cprime"][0][0].get<u64>(), 1);
    CertificateCheck c = verify_certificate(bad.dump());
    CHECK(!c.ok);
    CHECK(!c.failures.empty());
  }
  {
    nlohmann::json bad = doc;
    bad["params"]["klogp"] = bad["params"]["klogp"].get<long long>() + 2;
    CertificateCheck c = verify_certificate(bad.dump());
    CHECK(!c.ok);
  }
  {
    // over F4 every unit has norm 1 = -1, so only 0 is an invalid beta
    nlohmann::json bad = doc;
    bad["beta"] = 0;
    CertificateCheck c = verify_certificate(bad.dump());
    CHECK(!c.ok);
  }
  {
    nlohmann::json bad = doc;
    bad["parameter_line"] = "[[5, 0, 1]]_2";
    CertificateCheck c = verify_certificate(bad.dump());
    CHECK(!c.ok);
  }

  Tower tw9(3, {2});
  for (;;) {
    C = random_code(tw9.top(), 4, 2, rng);
    ext = extend_hermitian(C);
    if (ext.witness.e > 0) break;
  }
  nlohmann::json doc9 = nlohmann::json::parse(certificate_to_json(ext));
  CHECK(verify_certificate(doc9.dump()).ok);
  doc9["beta"] = 1;  // norm 1 over F9, never -1
  CHECK(!verify_certificate(doc9.dump()).ok);
}

TEST_CASE("certificates cover the symplectic and trace-symplectic shapes") {
  Tower tw2(2, {});
  std::mt19937_64 rng(11);
  LinearCode C = random_code(tw2.top(), 8, 3, rng);
  Extension ext = extend_symplectic(C);
  CHECK(verify_certificate(certificate_to_json(ext)).ok);

  Tower tw4(2, {2});
  PsiBasis B = make_psi_basis(tw4.top());
  Mat rows = Mat::from_rows(tw4.top(), {{1, 2, 0, 1}, {0, 1, 1, 0}});
  AdditiveCode A = additive_from_rows(B, rows);
  Extension ts = extend_trace_symplectic(A);
  CertificateCheck chk = verify_certificate(certificate_to_json(ts));
  CHECK(chk.ok);
  CHECK(chk.params.regime == Regime::TraceSymplectic);
}

TEST_CASE("witness digests separate different witnesses") {
  Tower tw(2, {2});
  std::mt19937_64 rng(5);
  Extension a = extend_hermitian(random_code(tw.top(), 5, 2, rng));
  Extension b = extend_hermitian(random_code(tw.top(), 5, 2, rng));
  CHECK(witness_digest(a.witness).size() == 16);
  if (!(a.witness.Cprime == b.witness.Cprime))
    CHECK(witness_digest(a.witness) != witness_digest(b.witness));
  CHECK(witness_digest(a.witness) == witness_digest(a.witness));
}
