// Finite field towers, polynomial arithmetic, and the root structure of
// x^m - lambda over a chosen alphabet field.
//
// A Tower is a chain F_p = L_0 < L_1 < ... < L_r where each step is an
// explicit quotient L_{i+1} = L_i[x]/(f_i).  Elements of every level are
// stored as u64 codes: the code of an element is its coefficient vector
// over the level below, read as a little-endian base-|L_i| integer.  With
// that packing the embedding L_i -> L_{i+1} is the identity on codes, and
// an element of L_{i+1} lies in the embedded subfield exactly when its
// code is < |L_i|.
//
// Copyright 2026 the qtx authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qtx/intmath.hpp"

namespace qtx {

// Polynomial over one tower level: coefficient codes, constant term first,
// no trailing zeros (the zero polynomial is the empty vector).
using Poly = std::vector<u64>;

class Tower;

// Lightweight handle to one level of a Tower.  Copyable; the Tower must
// outlive it.
struct Field {
  const Tower* tw = nullptr;
  int lvl = 0;

  u64 size() const;
  u64 p() const;
  u64 zero() const { return 0; }
  u64 one() const { return 1; }
  u64 from_int(u64 v) const;

  u64 add(u64 a, u64 b) const;
  u64 sub(u64 a, u64 b) const;
  u64 neg(u64 a) const;
  u64 mul(u64 a, u64 b) const;
  u64 inv(u64 a) const;
  u64 pow(u64 a, u64 e) const;
  u64 generator() const;

  bool operator==(const Field& o) const { return tw == o.tw && lvl == o.lvl; }
};

class Tower {
 public:
  // Build the chain F_p -> ... with the given extension degrees.  The
  // modulus of the first extension over the prime field is taken from the
  // built-in Conway polynomial table when available; every other step uses
  // the lexicographically least monic irreducible polynomial, where
  // candidates are enumerated by reading the non-leading coefficients as
  // base-|L| digits of an ascending counter (leading digit = highest
  // non-monic coefficient).
  Tower(u64 p, const std::vector<int>& degrees);

  // Same chain shape with caller-supplied moduli (validated).
  Tower(u64 p, const std::vector<int>& degrees, const std::vector<Poly>& moduli);

  int levels() const { return static_cast<int>(lv_.size()); }
  u64 p() const { return p_; }
  u64 size(int lvl) const { return lv_.at(lvl).n; }
  int degree(int lvl) const;            // extension degree of lvl over lvl-1
  const Poly& modulus(int lvl) const;   // monic, over lvl-1, constant first
  Field field(int lvl) const { return Field{this, lvl}; }
  Field top() const { return Field{this, levels() - 1}; }

  u64 add(int lvl, u64 a, u64 b) const;
  u64 sub(int lvl, u64 a, u64 b) const;
  u64 neg(int lvl, u64 a) const;
  u64 mul(int lvl, u64 a, u64 b) const;
  u64 inv(int lvl, u64 a) const;
  u64 pow(int lvl, u64 a, u64 e) const;

  // Canonical primitive element: the smallest code >= 1 whose
  // multiplicative order is size-1.  For Conway moduli this is the class
  // of x.
  u64 generator(int lvl) const { return lv_.at(lvl).gen; }
  u64 element_order(int lvl, u64 a) const;

  // Discrete log base generator(lvl); only for table-backed levels.
  u64 dlog(int lvl, u64 a) const;
  bool table_backed(int lvl) const { return !lv_.at(lvl).exp_tab.empty(); }

  // True if the code, read at level lvl, lies in the embedded copy of
  // sub_lvl (sub_lvl <= lvl).
  bool in_level(int sub_lvl, u64 code) const { return code < size(sub_lvl); }

  // Relative trace / norm from lvl down to sub_lvl along the chain.
  u64 trace_to(int lvl, int sub_lvl, u64 a) const;
  u64 norm_to(int lvl, int sub_lvl, u64 a) const;

 private:
  struct Level {
    u64 n = 0;      // field size
    int deg = 1;    // extension degree over the previous level
    Poly mod;       // modulus over the previous level (empty at level 0)
    u64 gen = 0;
    std::vector<u32> exp_tab;  // gen^i for i in [0, n-1)
    std::vector<u32> log_tab;  // inverse of exp_tab; log_tab[0] unused
  };

  void push_level(int deg, Poly mod_or_empty);
  void finish_level(Level& L) const;  // find generator, build tables

  u64 raw_mul(int lvl, u64 a, u64 b) const;  // table-free multiplication
  u64 raw_pow(int lvl, u64 a, u64 e) const;

  u64 p_ = 0;
  std::vector<Level> lv_;
};

// Conway polynomial lookup (constant-first coefficients over F_p), or an
// empty Poly when (p, deg) is outside the built-in table.
Poly conway_polynomial(u64 p, int deg);

// --- polynomial arithmetic over a field handle ---

int poly_deg(const Poly& f);  // -1 for the zero polynomial
Poly poly_trim(Poly f);
Poly poly_x();                          // the monomial x
Poly poly_constant(u64 c);
Poly poly_add(const Field& F, const Poly& a, const Poly& b);
Poly poly_sub(const Field& F, const Poly& a, const Poly& b);
Poly poly_scale(const Field& F, u64 c, const Poly& a);
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);
std::pair<Poly, Poly> poly_divrem(const Field& F, Poly num, const Poly& den);
Poly poly_mod(const Field& F, Poly num, const Poly& den);
Poly poly_monic(const Field& F, Poly f);
Poly poly_gcd(const Field& F, Poly a, Poly b);  // monic
Poly poly_powmod(const Field& F, Poly base, u64 e, const Poly& mod);
u64 poly_eval(const Field& F, const Poly& f, u64 x);
bool poly_is_irreducible(const Field& F, const Poly& f);
// Irreducible and the class of x generates the quotient's unit group.
bool poly_is_primitive(const Field& F, const Poly& f);
// Coefficient reversal x^deg(f) * f(1/x); an involution whenever f(0) != 0.
Poly poly_reciprocal(const Poly& f);
// Entrywise q-th power of the coefficients.
Poly poly_conjugate(const Field& F, const Poly& f, u64 q);

// --- element and polynomial notation ---
//
// Prime-field elements print as decimal integers.  Extension elements
// print as "0", "1", "w", or "w^k" with w the canonical generator of the
// level, which requires a table-backed level; anything else falls back to
// the raw code in angle brackets.  elem_parse accepts all of these plus
// "-1" style negated integers.

std::string elem_str(const Field& F, u64 a);
u64 elem_parse(const Field& F, const std::string& s);
std::string poly_str(const Field& F, const Poly& f, const std::string& var = "x");
// Accepts sums of terms like "x^3", "w^2 x^2", "w*x", "2", "w^11"; '-' also
// separates terms and negates the coefficient that follows.
Poly poly_parse(const Field& F, const std::string& s);

// --- roots of x^m - lambda ---

// Degree over the alphabet field of the splitting field of x^m - lambda,
// i.e. the order of |F| modulo t*m where t = ord(lambda).
u64 consta_splitting_degree(const Field& base, u64 m, u64 lambda);

struct ConstaOrbit {
  std::vector<u64> exps;  // exponent orbit, in cycle order from min_exp
  u64 min_exp = 0;
  Poly factor;            // the corresponding monic irreducible over base
};

// Factorization of x^m - lambda over the alphabet field "base", presented
// through a fixed primitive tm-th root of unity in the splitting field.
// With alpha of order tm satisfying alpha^m = lambda and xi = alpha^t, the
// roots are rho_k = alpha * xi^k for k in Z_m, and the Frobenius a -> a^Q
// acts on exponents by k -> Q*k + (Q-1)/t (mod m).
struct ConstaFactorization {
  u64 m = 0;
  u64 lambda = 0;
  u64 t = 0;    // ord(lambda)
  u64 tm = 0;   // t*m
  u64 nu = 0;   // splitting degree
  u64 alpha = 0;
  u64 xi = 0;
  std::vector<ConstaOrbit> orbits;  // sorted by min_exp

  u64 root(u64 k, const Field& split) const;  // rho_k
  u64 frobenius_step(u64 k, u64 Q) const;     // exponent action of x -> x^Q
};

// Requires split to be the level directly above base with the degree from
// consta_splitting_degree (split == base when that degree is 1), and
// gcd(m, p) = 1.
ConstaFactorization factor_x_m_minus_lambda(const Field& base, const Field& split,
                                            u64 m, u64 lambda);

// --- pairing classification of the factors ---

enum class FactorPairing { ConjugateReciprocal, Reciprocal, None };

// The factor orbits of x^m - lambda grouped under the root involution
// beta -> beta^(-q): a factor either keeps its own root set (self-paired)
// or swaps it with a partner factor.  q = 1 gives the plain reciprocal
// involution; None records the factorization with every factor standing
// alone.
struct FactorClassification {
  Field base;
  Field split;
  FactorPairing pairing = FactorPairing::None;
  u64 conj_q = 1;  // q of the involution; 1 for Reciprocal and None
  ConstaFactorization fact;
  std::vector<size_t> self_paired;                // orbit indices, ascending min_exp
  std::vector<std::pair<size_t, size_t>> paired;  // (h, partner), ascending h min_exp

  size_t s() const { return self_paired.size(); }
  size_t r() const { return paired.size(); }
  const ConstaOrbit& g(size_t i) const { return fact.orbits[self_paired[i]]; }
  const ConstaOrbit& h(size_t j) const { return fact.orbits[paired[j].first]; }
  const ConstaOrbit& h_pair(size_t j) const { return fact.orbits[paired[j].second]; }
  u64 u(size_t i) const { return g(i).min_exp; }
  u64 v(size_t j) const { return h(j).min_exp; }

  // Exponent action of the involution: k -> -q*k - (q+1)/t (mod m).
  u64 partner_exp(u64 k) const;
};

// Factor x^m - lambda over base and classify the factors under the chosen
// involution.  ConjugateReciprocal requires |base| to be a square and
// lambda^(q+1) = 1; Reciprocal requires lambda = 1 or -1.  `split` is the
// splitting field as in factor_x_m_minus_lambda.
FactorClassification factor_constashift_poly(const Field& base, const Field& split,
                                             u64 m, u64 lambda, FactorPairing pairing);

// Canonical primitive root of unity of the given order: gen^((|L|-1)/order)
// at the lowest tower level L whose unit group has matching size.
u64 root_of_unity(const Tower& tw, u64 order, int* lvl_out = nullptr);

// Fresh tower reproducing base's chain up to its level, with one more level
// of the given degree on top (canonical modulus).
std::shared_ptr<Tower> extend_tower(const Field& base, int extra_degree);

// Smallest power of the canonical generator of F (a quadratic extension
// with |F| = q^2) whose (q+1)-st power equals c; c must lie in the q-line.
// Returns 0 for c = 0.
u64 solve_norm(const Field& F, u64 q, u64 c);

}  // namespace qtx
