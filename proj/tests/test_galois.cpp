// Tower construction, field arithmetic, and x^m - lambda root structure.
//
// Copyright 2026 the qtx authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "doctest.h"
#include "qtx/galois.hpp"

using namespace qtx;

TEST_CASE("conway moduli and canonical generators match the fixed notation") {
  // F4: w^2 = w + 1
  Tower t4(2, {2});
  CHECK(t4.modulus(1) == Poly{1, 1, 1});
  CHECK(t4.generator(1) == 2);
  CHECK(t4.mul(1, 2, 2) == t4.add(1, 2, 1));

  // F9: w^2 = w + 1
  Tower t9(3, {2});
  CHECK(t9.modulus(1) == Poly{2, 2, 1});
  CHECK(t9.generator(1) == 3);
  CHECK(t9.mul(1, 3, 3) == t9.add(1, 3, 1));

  // F25: w^2 = w + 3
  Tower t25(5, {2});
  CHECK(t25.modulus(1) == Poly{2, 4, 1});
  CHECK(t25.mul(1, 5, 5) == t25.add(1, 5, 3));

  // F49: w^2 = w + 4
  Tower t49(7, {2});
  CHECK(t49.modulus(1) == Poly{3, 6, 1});
  CHECK(t49.mul(1, 7, 7) == t49.add(1, 7, 4));

  // F16 over F4: w^4 = w + 1
  Tower t16(2, {2, 2});
  CHECK(t16.size(2) == 16);
  u64 g = t16.generator(2);
  CHECK(t16.element_order(2, g) == 15);
  CHECK(t16.pow(2, g, 4) == t16.add(2, g, 1));

  // F64 over F8: modulus x^2 + x + 1, generator of full order with
  // minimal polynomial x^6 + x^5 + x^3 + x^2 + 1 over F2.
  Tower t64(2, {3, 2});
  CHECK(t64.modulus(1) == Poly{1, 1, 0, 1});
  CHECK(t64.modulus(2) == Poly{1, 1, 1});
  u64 h = t64.generator(2);
  CHECK(h == 10);
  CHECK(t64.element_order(2, h) == 63);
  const Field F64 = t64.field(2);
  Poly mp{1};
  u64 y = h;
  for (int i = 0; i < 6; ++i) {
    mp = poly_mul(F64, mp, Poly{F64.neg(y), 1});
    y = F64.pow(y, 2);
  }
  CHECK(mp == Poly{1, 0, 1, 1, 0, 1, 1});

  // F64 over F4 (splitting field of cubics over F4): modulus x^3 + w.
  Tower t64b(2, {2, 3});
  CHECK(t64b.modulus(2) == Poly{2, 0, 0, 1});
  CHECK(t64b.element_order(2, t64b.generator(2)) == 63);
}

TEST_CASE("field axioms hold on every element pair of small levels") {
  for (auto [p, degs] : std::vector<std::pair<u64, std::vector<int>>>{
           {2, {2}}, {3, {2}}, {2, {2, 2}}, {5, {2}}, {2, {3}}}) {
    Tower tw(p, degs);
    const int lvl = tw.levels() - 1;
    const u64 n = tw.size(lvl);
    const Field F = tw.field(lvl);
    for (u64 a = 0; a < n; ++a) {
      if (a != 0) {
        CHECK(F.mul(a, F.inv(a)) == 1);
        CHECK(F.pow(a, n - 1) == 1);
      }
      for (u64 b = 0; b < n; ++b) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        CHECK(F.sub(F.add(a, b), b) == a);
        // Frobenius is additive.
        CHECK(F.pow(F.add(a, b), p) == F.add(F.pow(a, p), F.pow(b, p)));
        for (u64 c : {u64(1), n - 1})
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      }
    }
  }
}

TEST_CASE("trace and norm land in the subfield with the right identities") {
  Tower tw(2, {2, 2});  // F2 < F4 < F16
  for (u64 a = 0; a < 16; ++a) {
    u64 tr = tw.trace_to(2, 1, a);
    CHECK(tr < 4);
    // Relative trace to F4 is F4-linear and transitive down to F2.
    CHECK(tw.trace_to(1, 0, tr) == tw.trace_to(2, 0, a));
    if (a != 0) {
      u64 nm = tw.norm_to(2, 1, a);
      CHECK(nm < 4);
      CHECK(nm == tw.pow(2, a, 5));  // a^(q+1) with q = 4
    }
  }
  // F4 -> F2: tr(w) = w + w^2 = 1, and the norm of w is w^3 = 1.
  CHECK(tw.trace_to(1, 0, 2) == 1);
  CHECK(tw.norm_to(1, 0, 2) == 1);
}

TEST_CASE("a table-free level behaves like a field") {
  Tower tw(2, {23});
  const int lvl = 1;
  CHECK(tw.size(lvl) == (u64(1) << 23));
  CHECK_FALSE(tw.table_backed(lvl));
  CHECK(tw.element_order(lvl, tw.generator(lvl)) == (u64(1) << 23) - 1);
  const Field F = tw.field(lvl);
  u64 a = 1234567, b = 7654321;
  CHECK(F.mul(a, F.inv(a)) == 1);
  CHECK(F.pow(F.add(a, b), 2) == F.add(F.pow(a, 2), F.pow(b, 2)));
  CHECK(F.pow(a, F.size()) == a);  // absolute Frobenius iterate is identity
  u64 tr = tw.trace_to(1, 0, a);
  CHECK(tr < 2);
}

TEST_CASE("element and polynomial notation round-trips") {
  Tower tw(2, {2});
  const Field F4 = tw.field(1);
  CHECK(elem_str(F4, 0) == "0");
  CHECK(elem_str(F4, 1) == "1");
  CHECK(elem_str(F4, 2) == "w");
  CHECK(elem_str(F4, 3) == "w^2");
  CHECK(elem_parse(F4, "w^2") == 3);
  CHECK(elem_parse(F4, "-1") == 1);
  for (u64 a = 0; a < 4; ++a) CHECK(elem_parse(F4, elem_str(F4, a)) == a);

  Poly f = poly_parse(F4, "x^3 + w^2 x^2 + w x + w^2");
  CHECK(f == Poly{3, 2, 3, 1});
  CHECK(poly_str(F4, f) == "x^3 + w^2 x^2 + w x + w^2");
  CHECK(poly_parse(F4, poly_str(F4, f)) == f);
  CHECK(poly_parse(F4, "w*x^17 + w*x^16 + 1") == poly_parse(F4, "w x^17+w x^16+1"));
  CHECK(poly_parse(F4, "0").empty());

  Tower t3(3, {});
  const Field F3 = t3.field(0);
  CHECK(elem_str(F3, 2) == "2");
  CHECK(poly_parse(F3, "x^2 - x - 1") == Poly{2, 2, 1});
}

TEST_CASE("polynomial division, gcd, and irreducibility") {
  Tower tw(2, {2});
  const Field F = tw.field(1);
  Poly a = poly_parse(F, "x^5 + w x^2 + 1");
  Poly b = poly_parse(F, "x^2 + w");
  auto [q, r] = poly_divrem(F, a, b);
  CHECK(poly_add(F, poly_mul(F, q, b), r) == a);
  CHECK(poly_deg(r) < poly_deg(b));

  CHECK(poly_is_irreducible(F, poly_parse(F, "x^2 + x + w")));
  CHECK_FALSE(poly_is_irreducible(F, poly_parse(F, "x^2 + x + 1")));  // roots w, w^2
  CHECK_FALSE(poly_is_irreducible(F, poly_parse(F, "x^2 + 1")));      // (x+1)^2
  CHECK_FALSE(poly_is_irreducible(F, poly_parse(F, "x^2 + w^2")));    // (x+w)^2

  const Field F2 = tw.field(0);
  CHECK(poly_is_primitive(F2, Poly{1, 1, 0, 1}));
  CHECK(poly_is_irreducible(F2, Poly{1, 1, 1, 1, 1}));        // x^4+x^3+x^2+x+1
  CHECK_FALSE(poly_is_primitive(F2, Poly{1, 1, 1, 1, 1}));    // order-5 roots
}

TEST_CASE("x^7 - 1 over F4 factors into the two cubics and x + 1") {
  Tower tw(2, {2, 3});
  const Field F4 = tw.field(1);
  const Field F64 = tw.field(2);
  CHECK(consta_splitting_degree(F4, 7, 1) == 3);
  auto R = factor_x_m_minus_lambda(F4, F64, 7, 1);
  CHECK(R.t == 1);
  CHECK(R.orbits.size() == 3);

  std::vector<Poly> factors;
  for (const auto& o : R.orbits) factors.push_back(o.factor);
  std::vector<Poly> expected = {Poly{1, 1}, Poly{1, 1, 0, 1}, Poly{1, 0, 1, 1}};
  for (const auto& f : expected)
    CHECK(std::count(factors.begin(), factors.end(), f) == 1);

  // The factors multiply back to x^7 - 1 and each root really is a root.
  Poly prod{1};
  for (const auto& o : R.orbits) {
    prod = poly_mul(F4, prod, o.factor);
    for (u64 k : o.exps) {
      u64 rho = R.root(k, F64);
      CHECK(poly_eval(F64, o.factor, rho) == 0);
      CHECK(F64.pow(rho, 7) == 1);
    }
  }
  Poly x7m1 = poly_parse(F4, "x^7 + 1");
  CHECK(prod == x7m1);
}

TEST_CASE("x^5 - 1 over F2 splits as (x+1) times the full quartic") {
  Tower tw(2, {4});
  const Field F2base = tw.field(0);
  const Field split = tw.field(1);
  CHECK(consta_splitting_degree(F2base, 5, 1) == 4);
  auto R = factor_x_m_minus_lambda(F2base, split, 5, 1);
  REQUIRE(R.orbits.size() == 2);
  CHECK(R.orbits[0].min_exp == 0);
  CHECK(R.orbits[0].exps.size() == 4);
  CHECK(R.orbits[1].factor == Poly{1, 1});
  CHECK(R.orbits[0].factor == Poly{1, 1, 1, 1, 1});
}

TEST_CASE("x^21 - w^2 over F4 has seven cubic orbits") {
  Tower tw(2, {2, 3});
  const Field F4 = tw.field(1);
  const Field F64 = tw.field(2);
  const u64 lambda = 3;  // w^2
  CHECK(tw.element_order(1, lambda) == 3);
  CHECK(consta_splitting_degree(F4, 21, lambda) == 3);
  auto R = factor_x_m_minus_lambda(F4, F64, 21, lambda);
  CHECK(R.t == 3);
  CHECK(R.tm == 63);
  REQUIRE(R.orbits.size() == 7);
  for (const auto& o : R.orbits) {
    CHECK(o.exps.size() == 3);
    CHECK(poly_deg(o.factor) == 3);
  }
  // alpha^21 = w^2 and xi has exact order 21.
  CHECK(F64.pow(R.alpha, 21) == lambda);
  CHECK(tw.element_order(2, R.xi) == 21);
  // Product of all factors is x^21 - w^2 = x^21 + w^2.
  Poly prod{1};
  for (const auto& o : R.orbits) prod = poly_mul(F4, prod, o.factor);
  Poly expect = poly_parse(F4, "x^21 + w^2");
  CHECK(prod == expect);
}

TEST_CASE("solve_norm picks the smallest generator power") {
  Tower t4(2, {2});
  CHECK(solve_norm(t4.field(1), 2, 1) == 1);
  Tower t9(3, {2});
  CHECK(solve_norm(t9.field(1), 3, 2) == 3);  // beta = w with w^4 = -1
  Tower t16(2, {2, 2});
  const Field F16 = t16.field(2);
  for (u64 c = 1; c < 4; ++c) {
    u64 beta = solve_norm(F16, 4, c);
    CHECK(F16.pow(beta, 5) == c);
    bool earlier = false;
    u64 b = 1;
    while (b != beta) {
      if (F16.pow(b, 5) == c) earlier = true;
      b = F16.mul(b, F16.generator());
    }
    CHECK_FALSE(earlier);
  }
}

TEST_CASE("intmath basics") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64((u64(1) << 61) - 1));
  CHECK_FALSE(is_prime_u64(178481ull * 47));
  auto f = factorize((u64(1) << 23) - 1);
  CHECK(f.at(47) == 1);
  CHECK(f.at(178481) == 1);
  CHECK(divisors(12) == std::vector<u64>{1, 2, 3, 4, 6, 12});
  CHECK(mult_order(4 % 63, 63) == 3);
  CHECK(mult_order(2, 47) == 23);
  CHECK(ipow_checked(3, 4) == 81);
  CHECK_THROWS(ipow_checked(u64(1) << 33, 2));
}

TEST_CASE("reciprocal and conjugate polynomial maps") {
  Tower tw(2, {2});
  const Field F4 = tw.field(1);
  const Poly f = poly_parse(F4, "x^3 + w x + 1");
  CHECK(poly_reciprocal(f) == poly_parse(F4, "x^3 + w x^2 + 1"));
  CHECK(poly_reciprocal(poly_reciprocal(f)) == f);
  CHECK(poly_reciprocal(Poly{}) == Poly{});
  CHECK(poly_conjugate(F4, poly_parse(F4, "w x + w^2"), 2) == poly_parse(F4, "w^2 x + w"));
  CHECK(poly_conjugate(F4, poly_parse(F4, "x^3 + x + 1"), 2) == poly_parse(F4, "x^3 + x + 1"));
}

TEST_CASE("x^7 - 1 over F4 classifies as one solo factor plus one pair") {
  Tower tw(2, {2, 3});
  const Field F4 = tw.field(1);
  auto cls = factor_constashift_poly(F4, tw.field(2), 7, 1,
                                     FactorPairing::ConjugateReciprocal);
  CHECK(cls.conj_q == 2);
  REQUIRE(cls.s() == 1);
  REQUIRE(cls.r() == 1);
  CHECK(cls.g(0).factor == poly_parse(F4, "x + 1"));
  CHECK(cls.u(0) == 6);
  CHECK(cls.v(0) == 0);
  const Poly a = cls.h(0).factor;
  const Poly b = cls.h_pair(0).factor;
  const Poly c1 = poly_parse(F4, "x^3 + x + 1");
  const Poly c2 = poly_parse(F4, "x^3 + x^2 + 1");
  CHECK(((a == c1 && b == c2) || (a == c2 && b == c1)));
  // the partner factor is the conjugate-reciprocal image
  CHECK(poly_monic(F4, poly_conjugate(F4, poly_reciprocal(a), 2)) == b);
}

TEST_CASE("m = 1 gives a single solo factor over the base field") {
  Tower tw(2, {2});
  const Field F4 = tw.field(1);
  CHECK(consta_splitting_degree(F4, 1, 1) == 1);
  auto cls = factor_constashift_poly(F4, F4, 1, 1, FactorPairing::ConjugateReciprocal);
  CHECK(cls.s() == 1);
  CHECK(cls.r() == 0);
  CHECK(cls.g(0).factor == poly_parse(F4, "x + 1"));
}

TEST_CASE("x^5 - 1 over F2 keeps the quartic self-paired under reciprocation") {
  Tower tw(2, {4});
  const Field F2 = tw.field(0);
  auto cls = factor_constashift_poly(F2, tw.field(1), 5, 1, FactorPairing::Reciprocal);
  CHECK(cls.conj_q == 1);
  REQUIRE(cls.s() == 2);
  CHECK(cls.r() == 0);
  std::vector<Poly> factors{cls.g(0).factor, cls.g(1).factor};
  const Poly quartic = poly_parse(F2, "x^4 + x^3 + x^2 + x + 1");
  const Poly linear = poly_parse(F2, "x + 1");
  CHECK(((factors[0] == quartic && factors[1] == linear) ||
         (factors[0] == linear && factors[1] == quartic)));
}

TEST_CASE("x^21 - w^2 over F4 classifies as one solo orbit and three pairs") {
  Tower tw(2, {2, 3});
  const Field F4 = tw.field(1);
  auto cls = factor_constashift_poly(F4, tw.field(2), 21, 3,
                                     FactorPairing::ConjugateReciprocal);
  REQUIRE(cls.s() == 1);
  REQUIRE(cls.r() == 3);
  CHECK(cls.g(0).exps.size() == 3);
  for (size_t j = 0; j < 3; ++j) {
    CHECK(cls.h(j).exps.size() == 3);
    CHECK(poly_monic(F4, poly_conjugate(F4, poly_reciprocal(cls.h(j).factor), 2)) ==
          cls.h_pair(j).factor);
  }
}

TEST_CASE("root_of_unity returns canonical roots at the lowest level") {
  Tower tw(2, {2, 3});
  int lvl = -1;
  CHECK(root_of_unity(tw, 3, &lvl) == 2);  // w in F4
  CHECK(lvl == 1);
  const u64 r21 = root_of_unity(tw, 21, &lvl);
  CHECK(lvl == 2);
  CHECK(tw.element_order(2, r21) == 21);
  CHECK(root_of_unity(tw, 63) == tw.generator(2));
  CHECK(root_of_unity(tw, 1) == 1);
  CHECK_THROWS(root_of_unity(tw, 5));   // no level has 5 | size - 1
  CHECK_THROWS(root_of_unity(tw, 2));   // order divisible by the characteristic
}

TEST_CASE("extend_tower reproduces the chain and picks canonical moduli") {
  Tower tw(2, {2});
  const Field F4 = tw.field(1);
  auto ext = extend_tower(F4, 3);
  CHECK(ext->levels() == 3);
  CHECK(ext->size(2) == 64);
  CHECK(ext->modulus(1) == tw.modulus(1));
  CHECK(ext->modulus(2) == Poly{2, 0, 0, 1});  // x^3 + w
  CHECK(ext->generator(2) == 5);
  // base-level arithmetic is unchanged under the copy
  for (u64 a = 0; a < 4; ++a)
    for (u64 b = 0; b < 4; ++b) CHECK(ext->mul(1, a, b) == tw.mul(1, a, b));
  // extending a prime field picks the Conway modulus
  Tower t2(2, std::vector<int>{});
  auto ext2 = extend_tower(t2.field(0), 2);
  CHECK(ext2->modulus(1) == Poly{1, 1, 1});
}
