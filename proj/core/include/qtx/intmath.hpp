// Integer helpers: modular arithmetic, primality, factorization.
//
// Copyright 2026 the qtx authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace qtx {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

inline u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = m > 1 ? 1 : 0;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

u64 gcd_u64(u64 a, u64 b);

// Deterministic Miller-Rabin over the full 64-bit range.
bool is_prime_u64(u64 n);

// Prime factorization (Pollard rho on composites), as prime -> exponent.
std::map<u64, int> factorize(u64 n);

// All positive divisors of n, sorted ascending.
std::vector<u64> divisors(u64 n);

// Multiplicative order of a modulo m; requires gcd(a, m) == 1.
u64 mult_order(u64 a, u64 m);

// Floor of log2, for n >= 1.
int ilog2(u64 n);

// Exact integer power with overflow check; throws std::overflow_error.
u64 ipow_checked(u64 base, unsigned exp);

}  // namespace qtx
