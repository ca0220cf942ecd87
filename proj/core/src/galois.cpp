// Copyright 2026 the qtx authors
// SPDX-License-Identifier: Apache-2.0

#include "qtx/galois.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <stdexcept>

namespace qtx {

namespace {

constexpr u64 kTableLimit = u64(1) << 20;

std::string lvl_tag(int lvl) { return "level " + std::to_string(lvl); }

}  // namespace

// --- Field forwarding ---

u64 Field::size() const { return tw->size(lvl); }
u64 Field::p() const { return tw->p(); }
u64 Field::from_int(u64 v) const { return v % tw->p(); }
u64 Field::add(u64 a, u64 b) const { return tw->add(lvl, a, b); }
u64 Field::sub(u64 a, u64 b) const { return tw->sub(lvl, a, b); }
u64 Field::neg(u64 a) const { return tw->neg(lvl, a); }
u64 Field::mul(u64 a, u64 b) const { return tw->mul(lvl, a, b); }
u64 Field::inv(u64 a) const { return tw->inv(lvl, a); }
u64 Field::pow(u64 a, u64 e) const { return tw->pow(lvl, a, e); }
u64 Field::generator() const { return tw->generator(lvl); }

// --- Conway polynomials ---

Poly conway_polynomial(u64 p, int deg) {
  static const std::map<std::pair<u64, int>, Poly> table = {
      {{2, 1}, {1, 1}},
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{3, 1}, {1, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{5, 1}, {3, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{7, 1}, {4, 1}},
      {{7, 2}, {3, 6, 1}},
  };
  auto it = table.find({p, deg});
  return it == table.end() ? Poly{} : it->second;
}

// --- Tower construction ---

Tower::Tower(u64 p, const std::vector<int>& degrees) : p_(p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("Tower: p must be prime");
  Level base;
  base.n = p;
  lv_.push_back(std::move(base));
  finish_level(lv_.back());
  for (int d : degrees) push_level(d, Poly{});
}

Tower::Tower(u64 p, const std::vector<int>& degrees, const std::vector<Poly>& moduli)
    : p_(p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("Tower: p must be prime");
  if (degrees.size() != moduli.size())
    throw std::invalid_argument("Tower: degrees/moduli size mismatch");
  Level base;
  base.n = p;
  lv_.push_back(std::move(base));
  finish_level(lv_.back());
  for (size_t i = 0; i < degrees.size(); ++i) push_level(degrees[i], moduli[i]);
}

void Tower::push_level(int deg, Poly mod) {
  if (deg < 1) throw std::invalid_argument("Tower: extension degree must be >= 1");
  const int below = levels() - 1;
  const u64 nb = lv_[below].n;
  u64 n = ipow_checked(nb, static_cast<unsigned>(deg));
  if (n > (u64(1) << 62)) throw std::invalid_argument("Tower: field too large");

  Field Fb = field(below);
  if (mod.empty()) {
    if (below == 0) mod = conway_polynomial(p_, deg);
    if (mod.empty()) {
      // Lexicographically least monic irreducible of this degree: read the
      // candidate counter's base-nb digits as the non-leading coefficients.
      for (u64 v = 0;; ++v) {
        if (v >= n) throw std::logic_error("Tower: no irreducible modulus found");
        Poly f(deg + 1, 0);
        u64 w = v;
        for (int j = 0; j < deg; ++j) {
          f[j] = w % nb;
          w /= nb;
        }
        f[deg] = 1;
        if (poly_is_irreducible(Fb, f)) {
          mod = std::move(f);
          break;
        }
      }
    } else {
      // A Conway polynomial is primitive by definition; verify the table
      // entry rather than trusting it.
      if (!poly_is_primitive(Fb, mod))
        throw std::logic_error("Tower: Conway table entry fails primitivity check");
    }
  }

  if (static_cast<int>(mod.size()) != deg + 1 || mod.back() != 1)
    throw std::invalid_argument("Tower: modulus must be monic of the stated degree");
  for (u64 c : mod)
    if (c >= nb) throw std::invalid_argument("Tower: modulus coefficient out of range");
  if (!poly_is_irreducible(Fb, mod))
    throw std::invalid_argument("Tower: modulus is reducible");

  Level L;
  L.n = n;
  L.deg = deg;
  L.mod = std::move(mod);
  lv_.push_back(std::move(L));
  finish_level(lv_.back());
}

void Tower::finish_level(Level& L) const {
  const int lvl = static_cast<int>(&L - lv_.data());
  const u64 n = L.n;
  auto fac = factorize(n - 1);
  for (u64 c = 1; c < n; ++c) {
    bool full = true;
    for (auto [P, e] : fac) {
      (void)e;
      if (raw_pow(lvl, c, (n - 1) / P) == 1) {
        full = false;
        break;
      }
    }
    if (full) {
      L.gen = c;
      break;
    }
  }
  if (L.gen == 0) throw std::logic_error("Tower: no primitive element at " + lvl_tag(lvl));

  if (n <= kTableLimit) {
    L.exp_tab.assign(n - 1, 0);
    L.log_tab.assign(n, 0xFFFFFFFFu);
    u64 x = 1;
    for (u64 i = 0; i + 1 < n; ++i) {
      L.exp_tab[i] = static_cast<u32>(x);
      L.log_tab[x] = static_cast<u32>(i);
      x = raw_mul(lvl, L.gen, x);
    }
    if (x != 1) throw std::logic_error("Tower: generator cycle mismatch at " + lvl_tag(lvl));
  }
}

int Tower::degree(int lvl) const {
  if (lvl < 1 || lvl >= levels()) throw std::invalid_argument("Tower::degree: bad level");
  return lv_[lvl].deg;
}

const Poly& Tower::modulus(int lvl) const {
  if (lvl < 1 || lvl >= levels()) throw std::invalid_argument("Tower::modulus: bad level");
  return lv_[lvl].mod;
}

// --- arithmetic ---

u64 Tower::add(int lvl, u64 a, u64 b) const {
  if (p_ == 2) return a ^ b;
  if (lvl == 0) return (a + b) % p_;
  const u64 base = lv_[lvl - 1].n;
  u64 res = 0, mult = 1;
  while (a || b) {
    res += add(lvl - 1, a % base, b % base) * mult;
    mult *= base;
    a /= base;
    b /= base;
  }
  return res;
}

u64 Tower::neg(int lvl, u64 a) const {
  if (p_ == 2) return a;
  if (lvl == 0) return a == 0 ? 0 : p_ - a;
  const u64 base = lv_[lvl - 1].n;
  u64 res = 0, mult = 1;
  while (a) {
    res += neg(lvl - 1, a % base) * mult;
    mult *= base;
    a /= base;
  }
  return res;
}

u64 Tower::sub(int lvl, u64 a, u64 b) const { return add(lvl, a, neg(lvl, b)); }

u64 Tower::raw_mul(int lvl, u64 a, u64 b) const {
  if (lvl == 0) return mulmod(a, b, p_);
  const int d = lv_[lvl].deg;
  const u64 base = lv_[lvl - 1].n;
  u64 ad[64], bd[64], c[127];
  for (int i = 0; i < d; ++i) {
    ad[i] = a % base;
    a /= base;
    bd[i] = b % base;
    b /= base;
  }
  std::fill(c, c + 2 * d - 1, 0);
  for (int i = 0; i < d; ++i) {
    if (ad[i] == 0) continue;
    for (int j = 0; j < d; ++j)
      c[i + j] = add(lvl - 1, c[i + j], mul(lvl - 1, ad[i], bd[j]));
  }
  const Poly& mod = lv_[lvl].mod;
  for (int i = 2 * d - 2; i >= d; --i) {
    if (c[i] == 0) continue;
    const u64 lead = c[i];
    c[i] = 0;
    for (int j = 0; j < d; ++j)
      c[i - d + j] = sub(lvl - 1, c[i - d + j], mul(lvl - 1, lead, mod[j]));
  }
  u64 res = 0;
  for (int j = d - 1; j >= 0; --j) res = res * base + c[j];
  return res;
}

u64 Tower::mul(int lvl, u64 a, u64 b) const {
  if (a == 0 || b == 0) return 0;
  const Level& L = lv_[lvl];
  if (!L.exp_tab.empty())
    return L.exp_tab[(u64(L.log_tab[a]) + L.log_tab[b]) % (L.n - 1)];
  return raw_mul(lvl, a, b);
}

u64 Tower::inv(int lvl, u64 a) const {
  if (a == 0) throw std::invalid_argument("Tower::inv: division by zero");
  const Level& L = lv_[lvl];
  if (!L.exp_tab.empty())
    return L.exp_tab[(L.n - 1 - L.log_tab[a]) % (L.n - 1)];
  return raw_pow(lvl, a, L.n - 2);
}

u64 Tower::raw_pow(int lvl, u64 a, u64 e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  u64 r = 1;
  while (e) {
    if (e & 1) r = raw_mul(lvl, r, a);
    a = raw_mul(lvl, a, a);
    e >>= 1;
  }
  return r;
}

u64 Tower::pow(int lvl, u64 a, u64 e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  const Level& L = lv_[lvl];
  if (!L.exp_tab.empty())
    return L.exp_tab[u64(L.log_tab[a]) * (e % (L.n - 1)) % (L.n - 1)];
  u64 r = 1;
  while (e) {
    if (e & 1) r = raw_mul(lvl, r, a);
    a = raw_mul(lvl, a, a);
    e >>= 1;
  }
  return r;
}

u64 Tower::element_order(int lvl, u64 a) const {
  if (a == 0) throw std::invalid_argument("Tower::element_order: zero element");
  u64 ord = lv_[lvl].n - 1;
  for (auto [P, e] : factorize(ord)) {
    (void)e;
    while (ord % P == 0 && pow(lvl, a, ord / P) == 1) ord /= P;
  }
  return ord;
}

u64 Tower::dlog(int lvl, u64 a) const {
  const Level& L = lv_[lvl];
  if (a == 0) throw std::invalid_argument("Tower::dlog: zero element");
  if (L.exp_tab.empty()) throw std::invalid_argument("Tower::dlog: level has no tables");
  return L.log_tab[a];
}

u64 Tower::trace_to(int lvl, int sub_lvl, u64 a) const {
  if (sub_lvl > lvl) throw std::invalid_argument("Tower::trace_to: bad levels");
  u64 e = 1;
  for (int i = sub_lvl + 1; i <= lvl; ++i) e *= lv_[i].deg;
  const u64 qs = lv_[sub_lvl].n;
  u64 acc = 0, y = a;
  for (u64 j = 0; j < e; ++j) {
    acc = add(lvl, acc, y);
    y = pow(lvl, y, qs);
  }
  if (acc >= qs) throw std::logic_error("Tower::trace_to: result not in subfield");
  return acc;
}

u64 Tower::norm_to(int lvl, int sub_lvl, u64 a) const {
  if (sub_lvl > lvl) throw std::invalid_argument("Tower::norm_to: bad levels");
  u64 e = 1;
  for (int i = sub_lvl + 1; i <= lvl; ++i) e *= lv_[i].deg;
  const u64 qs = lv_[sub_lvl].n;
  u64 acc = 1, y = a;
  for (u64 j = 0; j < e; ++j) {
    acc = mul(lvl, acc, y);
    y = pow(lvl, y, qs);
  }
  if (acc >= qs) throw std::logic_error("Tower::norm_to: result not in subfield");
  return acc;
}

// --- polynomial arithmetic ---

int poly_deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly poly_trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Poly poly_x() { return Poly{0, 1}; }

Poly poly_constant(u64 c) { return c == 0 ? Poly{} : Poly{c}; }

Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0;
    u64 y = i < b.size() ? b[i] : 0;
    r[i] = F.add(x, y);
  }
  return poly_trim(std::move(r));
}

Poly poly_sub(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0;
    u64 y = i < b.size() ? b[i] : 0;
    r[i] = F.sub(x, y);
  }
  return poly_trim(std::move(r));
}

Poly poly_scale(const Field& F, u64 c, const Poly& a) {
  if (c == 0) return {};
  Poly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(c, a[i]);
  return poly_trim(std::move(r));
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  return poly_trim(std::move(r));
}

std::pair<Poly, Poly> poly_divrem(const Field& F, Poly num, const Poly& den) {
  if (den.empty()) throw std::invalid_argument("poly_divrem: division by zero polynomial");
  const int dd = poly_deg(den);
  const u64 lead_inv = F.inv(den.back());
  num = poly_trim(std::move(num));
  if (poly_deg(num) < dd) return {Poly{}, std::move(num)};
  Poly quo(num.size() - den.size() + 1, 0);
  for (int i = poly_deg(num); i >= dd; --i) {
    if (num[i] == 0) continue;
    const u64 c = F.mul(num[i], lead_inv);
    quo[i - dd] = c;
    for (int j = 0; j <= dd; ++j)
      num[i - dd + j] = F.sub(num[i - dd + j], F.mul(c, den[j]));
  }
  return {poly_trim(std::move(quo)), poly_trim(std::move(num))};
}

Poly poly_mod(const Field& F, Poly num, const Poly& den) {
  return poly_divrem(F, std::move(num), den).second;
}

Poly poly_monic(const Field& F, Poly f) {
  f = poly_trim(std::move(f));
  if (f.empty() || f.back() == 1) return f;
  return poly_scale(F, F.inv(f.back()), f);
}

Poly poly_gcd(const Field& F, Poly a, Poly b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    Poly r = poly_mod(F, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(F, std::move(a));
}

Poly poly_powmod(const Field& F, Poly base, u64 e, const Poly& mod) {
  Poly r{1};
  base = poly_mod(F, std::move(base), mod);
  while (e) {
    if (e & 1) r = poly_mod(F, poly_mul(F, r, base), mod);
    base = poly_mod(F, poly_mul(F, base, base), mod);
    e >>= 1;
  }
  return r;
}

u64 poly_eval(const Field& F, const Poly& f, u64 x) {
  u64 r = 0;
  for (size_t i = f.size(); i-- > 0;) r = F.add(F.mul(r, x), f[i]);
  return r;
}

bool poly_is_irreducible(const Field& F, const Poly& f_in) {
  Poly f = poly_monic(F, f_in);
  const int d = poly_deg(f);
  if (d < 1) return false;
  if (d == 1) return true;
  const u64 N = F.size();
  // x^(N^k) mod f by iterating the N-power map; f is irreducible iff
  // x^(N^d) = x and x^(N^(d/r)) - x is a unit mod f for each prime r | d.
  std::vector<int> checkpoints;
  for (auto [r, e] : factorize(static_cast<u64>(d))) {
    (void)e;
    checkpoints.push_back(d / static_cast<int>(r));
  }
  Poly y = poly_x();
  for (int k = 1; k <= d; ++k) {
    y = poly_powmod(F, y, N, f);
    if (std::find(checkpoints.begin(), checkpoints.end(), k) != checkpoints.end()) {
      Poly g = poly_gcd(F, poly_sub(F, y, poly_x()), f);
      if (poly_deg(g) != 0) return false;
    }
  }
  return poly_sub(F, y, poly_x()).empty();
}

bool poly_is_primitive(const Field& F, const Poly& f_in) {
  Poly f = poly_monic(F, f_in);
  if (!poly_is_irreducible(F, f)) return false;
  const int d = poly_deg(f);
  if (d == 1) {
    // Quotient is F itself with x mapping to -f[0].
    u64 root = F.neg(f[0]);
    if (root == 0) return false;
    return F.tw->element_order(F.lvl, root) == F.size() - 1;
  }
  const u64 M = ipow_checked(F.size(), static_cast<unsigned>(d)) - 1;
  for (auto [P, e] : factorize(M)) {
    (void)e;
    Poly y = poly_powmod(F, poly_x(), M / P, f);
    if (y == Poly{1}) return false;
  }
  return true;
}

Poly poly_reciprocal(const Poly& f) {
  Poly r(f.rbegin(), f.rend());
  return poly_trim(std::move(r));
}

Poly poly_conjugate(const Field& F, const Poly& f, u64 q) {
  Poly out = f;
  for (u64& c : out) c = F.pow(c, q);
  return out;
}

// --- notation ---

std::string elem_str(const Field& F, u64 a) {
  if (a == 0) return "0";
  if (a == 1) return "1";
  if (F.lvl == 0) return std::to_string(a);
  if (F.tw->table_backed(F.lvl)) {
    u64 k = F.tw->dlog(F.lvl, a);
    return k == 1 ? "w" : "w^" + std::to_string(k);
  }
  return "<" + std::to_string(a) + ">";
}

u64 elem_parse(const Field& F, const std::string& s_in) {
  std::string s;
  for (char ch : s_in)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("elem_parse: empty token");
  if (s == "w") return F.generator();
  if (s.rfind("w^", 0) == 0) return F.pow(F.generator(), std::stoull(s.substr(2)));
  if (s.front() == '<' && s.back() == '>') {
    u64 code = std::stoull(s.substr(1, s.size() - 2));
    if (code >= F.size()) throw std::invalid_argument("elem_parse: code out of range");
    return code;
  }
  bool negate = false;
  size_t i = 0;
  if (s[0] == '-') {
    negate = true;
    i = 1;
  }
  if (i >= s.size() || !std::all_of(s.begin() + i, s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      }))
    throw std::invalid_argument("elem_parse: bad token '" + s_in + "'");
  u64 v = F.from_int(std::stoull(s.substr(i)));
  return negate ? F.neg(v) : v;
}

std::string poly_str(const Field& F, const Poly& f, const std::string& var) {
  if (f.empty()) return "0";
  std::string out;
  for (int i = poly_deg(f); i >= 0; --i) {
    if (f[i] == 0) continue;
    if (!out.empty()) out += " + ";
    const bool unit = f[i] == 1;
    if (i == 0) {
      out += elem_str(F, f[i]);
    } else {
      if (!unit) out += elem_str(F, f[i]) + " ";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Poly poly_parse(const Field& F, const std::string& s) {
  Poly out;
  size_t i = 0;
  const size_t n = s.size();
  auto skip_ws = [&] {
    while (i < n && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == '*')) ++i;
  };
  auto read_uint = [&]() -> u64 {
    size_t j = i;
    while (j < n && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw std::invalid_argument("poly_parse: expected integer in '" + s + "'");
    u64 v = std::stoull(s.substr(i, j - i));
    i = j;
    return v;
  };

  skip_ws();
  if (i >= n) throw std::invalid_argument("poly_parse: empty input");
  bool first = true;
  while (i < n) {
    bool negate = false;
    skip_ws();
    if (!first || s[i] == '+' || s[i] == '-') {
      if (i >= n || (s[i] != '+' && s[i] != '-'))
        throw std::invalid_argument("poly_parse: expected '+' or '-' in '" + s + "'");
      negate = s[i] == '-';
      ++i;
      skip_ws();
    }
    first = false;

    u64 coef = 1;
    bool have_coef = false;
    if (i < n && s[i] == 'w') {
      ++i;
      u64 k = 1;
      if (i < n && s[i] == '^') {
        ++i;
        k = read_uint();
      }
      coef = F.pow(F.generator(), k);
      have_coef = true;
    } else if (i < n && s[i] == '<') {
      ++i;
      u64 code = read_uint();
      if (i >= n || s[i] != '>') throw std::invalid_argument("poly_parse: unterminated code");
      ++i;
      if (code >= F.size()) throw std::invalid_argument("poly_parse: code out of range");
      coef = code;
      have_coef = true;
    } else if (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coef = F.from_int(read_uint());
      have_coef = true;
    }
    skip_ws();

    u64 exp = 0;
    if (i < n && s[i] == 'x') {
      ++i;
      exp = 1;
      if (i < n && s[i] == '^') {
        ++i;
        exp = read_uint();
      }
    } else if (!have_coef) {
      throw std::invalid_argument("poly_parse: empty term in '" + s + "'");
    }
    if (negate) coef = F.neg(coef);
    if (out.size() <= exp) out.resize(exp + 1, 0);
    out[exp] = F.add(out[exp], coef);
    skip_ws();
  }
  return poly_trim(std::move(out));
}

// --- roots of x^m - lambda ---

u64 consta_splitting_degree(const Field& base, u64 m, u64 lambda) {
  if (m == 0) throw std::invalid_argument("consta_splitting_degree: m must be positive");
  if (lambda == 0 || lambda >= base.size())
    throw std::invalid_argument("consta_splitting_degree: bad lambda");
  if (gcd_u64(m, base.p()) != 1)
    throw std::invalid_argument("consta_splitting_degree: gcd(m, p) must be 1");
  const u64 t = base.tw->element_order(base.lvl, lambda);
  return mult_order(base.size() % (t * m), t * m);
}

u64 ConstaFactorization::root(u64 k, const Field& split) const {
  return split.mul(alpha, split.pow(xi, k % m));
}

u64 ConstaFactorization::frobenius_step(u64 k, u64 Q) const {
  return (k % m * (Q % m) % m + (Q - 1) / t % m) % m;
}

ConstaFactorization factor_x_m_minus_lambda(const Field& base, const Field& split,
                                            u64 m, u64 lambda) {
  const u64 nu = consta_splitting_degree(base, m, lambda);
  if (nu == 1) {
    if (!(split == base))
      throw std::invalid_argument(
          "factor_x_m_minus_lambda: splitting degree 1 needs split == base");
  } else if (split.tw != base.tw || split.lvl != base.lvl + 1) {
    throw std::invalid_argument("factor_x_m_minus_lambda: split must sit directly above base");
  } else if (static_cast<u64>(split.tw->degree(split.lvl)) != nu) {
    throw std::invalid_argument("factor_x_m_minus_lambda: wrong splitting degree " +
                                std::to_string(split.tw->degree(split.lvl)) + ", need " +
                                std::to_string(nu));
  }

  ConstaFactorization R;
  R.m = m;
  R.lambda = lambda;
  R.t = base.tw->element_order(base.lvl, lambda);
  R.tm = R.t * m;
  R.nu = nu;

  const u64 N = split.size();
  const u64 Q = base.size();
  if ((N - 1) % R.tm != 0)
    throw std::logic_error("factor_x_m_minus_lambda: tm does not divide N-1");
  const u64 alpha0 = split.pow(split.generator(), (N - 1) / R.tm);

  R.alpha = 0;
  for (u64 j = 1; j <= R.tm; ++j) {
    if (gcd_u64(j, R.tm) != 1) continue;
    if (split.pow(alpha0, j * m % R.tm) == lambda) {
      R.alpha = split.pow(alpha0, j);
      break;
    }
  }
  if (R.alpha == 0) throw std::logic_error("factor_x_m_minus_lambda: no alpha found");
  R.xi = split.pow(R.alpha, R.t);

  std::vector<char> seen(m, 0);
  for (u64 k0 = 0; k0 < m; ++k0) {
    if (seen[k0]) continue;
    ConstaOrbit orb;
    orb.min_exp = k0;
    u64 k = k0;
    Poly f{1};
    do {
      seen[k] = 1;
      orb.exps.push_back(k);
      f = poly_mul(split, f, Poly{split.neg(R.root(k, split)), 1});
      k = R.frobenius_step(k, Q);
    } while (k != k0);
    for (u64 c : f)
      if (c >= Q)
        throw std::logic_error("factor_x_m_minus_lambda: factor not over the base field");
    orb.factor = std::move(f);
    R.orbits.push_back(std::move(orb));
  }
  return R;
}

u64 FactorClassification::partner_exp(u64 k) const {
  const u64 m = fact.m;
  const u64 qk = (conj_q % m) * (k % m) % m;
  const u64 c = (conj_q + 1) / fact.t % m;
  return (2 * m - qk - c) % m;
}

FactorClassification factor_constashift_poly(const Field& base, const Field& split,
                                             u64 m, u64 lambda, FactorPairing pairing) {
  FactorClassification cls;
  cls.base = base;
  cls.split = split;
  cls.pairing = pairing;
  cls.conj_q = 1;
  if (pairing == FactorPairing::ConjugateReciprocal) {
    const u64 n = base.size();
    u64 q = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (q * q > n) --q;
    while ((q + 1) * (q + 1) <= n) ++q;
    if (q * q != n)
      throw std::invalid_argument(
          "factor_constashift_poly: conjugate-reciprocal pairing needs |base| = q^2");
    cls.conj_q = q;
  }
  cls.fact = factor_x_m_minus_lambda(base, split, m, lambda);
  if (pairing == FactorPairing::ConjugateReciprocal && (cls.conj_q + 1) % cls.fact.t != 0)
    throw std::invalid_argument("factor_constashift_poly: lambda^(q+1) != 1");
  if (pairing == FactorPairing::Reciprocal && lambda != 1 && lambda != base.neg(1))
    throw std::invalid_argument("factor_constashift_poly: reciprocal pairing needs lambda = 1 or -1");

  const size_t count = cls.fact.orbits.size();
  if (pairing == FactorPairing::None) {
    for (size_t i = 0; i < count; ++i) cls.self_paired.push_back(i);
    return cls;
  }

  std::vector<size_t> owner(m, 0);
  for (size_t i = 0; i < count; ++i)
    for (u64 k : cls.fact.orbits[i].exps) owner[k] = i;

  std::vector<char> used(count, 0);
  for (size_t i = 0; i < count; ++i) {
    if (used[i]) continue;
    const size_t j = owner[cls.partner_exp(cls.fact.orbits[i].min_exp)];
    used[i] = 1;
    used[j] = 1;
    const Poly image = poly_monic(
        base, poly_conjugate(base, poly_reciprocal(cls.fact.orbits[i].factor), cls.conj_q));
    if (image != cls.fact.orbits[j].factor)
      throw std::logic_error("factor_constashift_poly: involution image mismatch");
    if (j == i)
      cls.self_paired.push_back(i);
    else
      cls.paired.emplace_back(i, j);
  }
  return cls;
}

u64 root_of_unity(const Tower& tw, u64 order, int* lvl_out) {
  if (order == 0 || gcd_u64(order, tw.p()) != 1)
    throw std::invalid_argument("root_of_unity: order must be positive and coprime to p");
  for (int l = 0; l < tw.levels(); ++l) {
    if ((tw.size(l) - 1) % order == 0) {
      if (lvl_out) *lvl_out = l;
      return tw.pow(l, tw.generator(l), (tw.size(l) - 1) / order);
    }
  }
  throw std::invalid_argument("root_of_unity: no tower level has an order-" +
                              std::to_string(order) + " root of unity");
}

std::shared_ptr<Tower> extend_tower(const Field& base, int extra_degree) {
  std::vector<int> degrees;
  std::vector<Poly> moduli;
  for (int l = 1; l <= base.lvl; ++l) {
    degrees.push_back(base.tw->degree(l));
    moduli.push_back(base.tw->modulus(l));
  }
  degrees.push_back(extra_degree);
  moduli.push_back(Poly{});
  return std::make_shared<Tower>(base.p(), degrees, moduli);
}

u64 solve_norm(const Field& F, u64 q, u64 c) {
  if (F.size() != q * q)
    throw std::invalid_argument("solve_norm: field is not a quadratic extension of F_q");
  if (F.lvl < 1 || F.tw->size(F.lvl - 1) != q)
    throw std::invalid_argument("solve_norm: level below must be F_q");
  if (c >= q) throw std::invalid_argument("solve_norm: target not in F_q");
  if (c == 0) return 0;
  const u64 g = F.generator();
  u64 beta = 1;
  for (u64 j = 0; j + 1 < F.size(); ++j) {
    if (F.pow(beta, q + 1) == c) return beta;
    beta = F.mul(beta, g);
  }
  throw std::logic_error("solve_norm: no solution found");
}

}  // namespace qtx
