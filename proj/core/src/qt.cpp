// Copyright 2026 the qtx authors
// SPDX-License-Identifier: Apache-2.0

#include "qtx/qt.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace qtx {

namespace {

FactorPairing pairing_of(QTRegime regime) {
  switch (regime) {
    case QTRegime::Hermitian:
      return FactorPairing::ConjugateReciprocal;
    case QTRegime::Symplectic:
      return FactorPairing::Reciprocal;
    case QTRegime::LambdaPair:
      return FactorPairing::None;
  }
  throw std::logic_error("pairing_of: bad regime");
}

bool has_second(QTRegime regime, const ConstituentSlot& sl) {
  return sl.is_pair || regime == QTRegime::LambdaPair;
}

void validate_shape(const Field& base, u64 m, u64 ell, u64 lambda, QTRegime regime) {
  if (base.tw == nullptr) throw std::invalid_argument("qt: spec has no field");
  if (m == 0 || ell == 0) throw std::invalid_argument("qt: m and ell must be positive");
  if (m % base.p() == 0)
    throw std::invalid_argument("qt: m divisible by the characteristic");
  if (lambda == 0 || lambda >= base.size())
    throw std::invalid_argument("qt: lambda outside the unit group");
  switch (regime) {
    case QTRegime::Hermitian:
      break;
    case QTRegime::Symplectic:
      if (ell % 2 != 0) throw std::invalid_argument("qt: symplectic regime needs even ell");
      if (lambda != 1 && lambda != base.neg(1))
        throw std::invalid_argument("qt: symplectic regime needs lambda = +-1");
      break;
    case QTRegime::LambdaPair:
      if (lambda == 1 || lambda == base.neg(1))
        throw std::invalid_argument("qt: LambdaPair regime needs lambda != +-1");
      break;
  }
}

void validate_tuples(const Field& F, u64 m, u64 ell,
                     const std::vector<std::vector<Poly>>& gens, const char* what) {
  for (const auto& tuple : gens) {
    if (tuple.size() != ell)
      throw std::invalid_argument(std::string(what) + ": tuple length != ell");
    for (const auto& f : tuple) {
      if (poly_deg(f) >= static_cast<int>(m))
        throw std::invalid_argument(std::string(what) + ": component degree >= m");
      for (u64 c : f)
        if (c >= F.size())
          throw std::invalid_argument(std::string(what) + ": coefficient outside field");
    }
  }
}

void validate_spec(const QTCodeSpec& spec, QTRegime regime) {
  validate_shape(spec.base, spec.m, spec.ell, spec.lambda, regime);
  validate_tuples(spec.base, spec.m, spec.ell, spec.generators, "qt generators");
  if (regime == QTRegime::LambdaPair) {
    validate_tuples(spec.base, spec.m, spec.ell, spec.generators2, "qt generators2");
  } else if (!spec.generators2.empty()) {
    throw std::invalid_argument("qt: generators2 only valid in the LambdaPair regime");
  }
}

// Rows x^g f for one generator block, written at `offset`.
void append_block_rows(Mat& rows, const Field& F, u64 m, u64 ell, QTRegime regime,
                       u64 lambda, const std::vector<std::vector<Poly>>& gens,
                       size_t offset) {
  for (const auto& tuple : gens) {
    std::vector<std::vector<u64>> coef(ell, std::vector<u64>(m, 0));
    for (u64 t = 0; t < ell; ++t)
      for (size_t g = 0; g < tuple[t].size(); ++g) coef[t][g] = tuple[t][g];
    for (u64 g = 0; g < m; ++g) {
      std::vector<u64> row(rows.cols(), 0);
      for (u64 t = 0; t < ell; ++t)
        for (u64 d = 0; d < m; ++d)
          row[offset + qt_coordinate(m, ell, regime, d, t)] = coef[t][d];
      rows.append_row(row);
      for (auto& c : coef) {
        const u64 last = c[m - 1];
        for (u64 d = m - 1; d > 0; --d) c[d] = c[d - 1];
        c[0] = F.mul(lambda, last);
      }
    }
  }
}

Mat euclid_gram(const Mat& A, const Mat& B) { return mat_mul(A, transpose(B)); }

Mat symp_gram(const Mat& A, const Mat& B, u64 kappa) {
  const size_t h = A.cols() / 2;
  Mat B1 = take_cols(B, 0, h);
  Mat B2 = take_cols(B, h, B.cols());
  if (kappa != 1) {
    B1 = pow_entries(B1, kappa);
    B2 = pow_entries(B2, kappa);
  }
  Mat P = mat_mul(take_cols(A, 0, h), transpose(B2));
  const Mat N = mat_mul(take_cols(A, h, A.cols()), transpose(B1));
  const Field& L = A.field();
  for (size_t i = 0; i < P.rows(); ++i)
    for (size_t j = 0; j < P.cols(); ++j) P(i, j) = L.sub(P(i, j), N(i, j));
  return P;
}

}  // namespace

u64 qt_length(const QTCodeSpec& spec, QTRegime regime) {
  const u64 blocks = regime == QTRegime::LambdaPair ? 2 : 1;
  return blocks * spec.m * spec.ell;
}

size_t qt_coordinate(u64 m, u64 ell, QTRegime regime, u64 g, u64 t) {
  if (regime == QTRegime::Symplectic) {
    const u64 h = ell / 2;
    return t < h ? g * h + t : m * h + g * h + (t - h);
  }
  return g * ell + t;
}

LinearCode expand_generator_matrix(const QTCodeSpec& spec, QTRegime regime) {
  validate_spec(spec, regime);
  Mat rows(spec.base, 0, qt_length(spec, regime));
  append_block_rows(rows, spec.base, spec.m, spec.ell, regime, spec.lambda,
                    spec.generators, 0);
  if (regime == QTRegime::LambdaPair)
    append_block_rows(rows, spec.base, spec.m, spec.ell, regime,
                      spec.base.inv(spec.lambda), spec.generators2,
                      spec.m * spec.ell);
  return LinearCode::from_span(spec.base, rows);
}

ConstituentSet constituent_frame(const Field& base, u64 m, u64 ell, u64 lambda,
                                 QTRegime regime) {
  validate_shape(base, m, ell, lambda, regime);
  ConstituentSet S;
  S.regime = regime;
  S.m = m;
  S.ell = ell;
  S.lambda = lambda;
  S.base = base;
  const u64 nu = consta_splitting_degree(base, m, lambda);
  Field cls_base = base;
  Field split = base;
  if (nu > 1) {
    S.tower = extend_tower(base, static_cast<int>(nu));
    cls_base = S.tower->field(base.lvl);
    split = S.tower->top();
  }
  S.split = split;
  S.cls = factor_constashift_poly(cls_base, split, m, lambda, pairing_of(regime));
  const u64 Q = base.size();
  auto push_slot = [&](const ConstaOrbit& orb, bool is_pair) {
    ConstituentSlot sl;
    sl.is_pair = is_pair;
    sl.root_exp = orb.min_exp;
    sl.degree = orb.exps.size();
    sl.subfield_order = 1;
    for (u64 j = 0; j < sl.degree; ++j) sl.subfield_order *= Q;
    sl.gen = Mat(split, 0, ell);
    if (has_second(regime, sl)) sl.gen2 = Mat(split, 0, ell);
    S.slots.push_back(std::move(sl));
  };
  for (size_t i = 0; i < S.cls.s(); ++i) push_slot(S.cls.g(i), false);
  for (size_t j = 0; j < S.cls.r(); ++j) push_slot(S.cls.h(j), true);
  return S;
}

ConstituentSet decompose(const QTCodeSpec& spec, QTRegime regime) {
  validate_spec(spec, regime);
  ConstituentSet S =
      constituent_frame(spec.base, spec.m, spec.ell, spec.lambda, regime);
  const Field& L = S.split;
  auto eval_rows = [&](const std::vector<std::vector<Poly>>& gens, u64 point) {
    Mat M(L, 0, spec.ell);
    for (const auto& tuple : gens) {
      std::vector<u64> row(spec.ell);
      for (u64 t = 0; t < spec.ell; ++t) row[t] = poly_eval(L, tuple[t], point);
      M.append_row(row);
    }
    return row_basis(std::move(M));
  };
  for (auto& sl : S.slots) {
    const u64 rho = S.cls.fact.root(sl.root_exp, L);
    sl.gen = eval_rows(spec.generators, rho);
    if (S.regime == QTRegime::LambdaPair)
      sl.gen2 = eval_rows(spec.generators2, L.inv(rho));
    else if (sl.is_pair)
      sl.gen2 = eval_rows(spec.generators, L.inv(L.pow(rho, S.cls.conj_q)));
  }
  return S;
}

QTCodeSpec compose(const ConstituentSet& S) {
  QTCodeSpec spec;
  spec.base = S.base;
  spec.m = S.m;
  spec.ell = S.ell;
  spec.lambda = S.lambda;
  const Field& L = S.split;
  const u64 Q = S.base.size();
  // One generator tuple per matrix row: component t of the row for delta
  // has coefficients c_g = Tr(delta_t sigma^{-g}) with sigma the root the
  // matrix was evaluated at.
  auto emit = [&](const Mat& M, u64 sigma_inv, u64 sub,
                  std::vector<std::vector<Poly>>* out) {
    for (size_t r = 0; r < M.rows(); ++r) {
      std::vector<Poly> tuple(S.ell);
      for (u64 t = 0; t < S.ell; ++t) {
        const u64 delta = M(r, t);
        if (L.pow(delta, sub) != delta)
          throw std::invalid_argument("compose: entry outside the slot subfield");
        Poly f(S.m, 0);
        u64 pw = 1;
        for (u64 g = 0; g < S.m; ++g) {
          f[g] = subfield_trace(L, Q, sub, L.mul(delta, pw));
          pw = L.mul(pw, sigma_inv);
        }
        tuple[t] = poly_trim(std::move(f));
      }
      out->push_back(std::move(tuple));
    }
  };
  for (const auto& sl : S.slots) {
    const u64 rho = S.cls.fact.root(sl.root_exp, L);
    emit(sl.gen, L.inv(rho), sl.subfield_order, &spec.generators);
    if (S.regime == QTRegime::LambdaPair) {
      emit(sl.gen2, rho, sl.subfield_order, &spec.generators2);
    } else if (sl.is_pair) {
      emit(sl.gen2, L.pow(rho, S.cls.conj_q), sl.subfield_order, &spec.generators);
    }
  }
  return spec;
}

Mat slot_gram(const ConstituentSet& S, size_t slot) {
  const auto& sl = S.slots.at(slot);
  switch (S.regime) {
    case QTRegime::Hermitian: {
      if (sl.is_pair) return euclid_gram(pow_entries(sl.gen, S.cls.conj_q), sl.gen2);
      u64 kappa = 1;
      for (u64 j = 0; j < sl.degree; ++j) kappa *= S.cls.conj_q;
      return euclid_gram(sl.gen, pow_entries(sl.gen, kappa));
    }
    case QTRegime::Symplectic: {
      if (sl.is_pair) return symp_gram(sl.gen, sl.gen2, 1);
      if (sl.degree == 1) return symp_gram(sl.gen, sl.gen, 1);
      if (sl.degree % 2 != 0)
        throw std::logic_error("slot_gram: self-paired factor of odd degree > 1");
      u64 kappa = 1;
      for (u64 j = 0; j < sl.degree / 2; ++j) kappa *= S.base.size();
      return symp_gram(sl.gen, sl.gen, kappa);
    }
    case QTRegime::LambdaPair:
      return euclid_gram(sl.gen, sl.gen2);
  }
  throw std::logic_error("slot_gram: bad regime");
}

SOReport check_self_orthogonal(const ConstituentSet& S) {
  SOReport R;
  for (size_t i = 0; i < S.slots.size(); ++i) {
    SlotCheck c;
    c.gram_rank = rank(slot_gram(S, i));
    c.ok = c.gram_rank == 0;
    R.ok = R.ok && c.ok;
    R.slots.push_back(c);
  }
  return R;
}

HullProfile hull_profile(const ConstituentSet& S) {
  ConstituentSet N = S;
  for (auto& sl : N.slots) {
    sl.gen = row_basis(std::move(sl.gen));
    if (has_second(N.regime, sl)) sl.gen2 = row_basis(std::move(sl.gen2));
  }
  HullProfile P;
  for (size_t i = 0; i < N.slots.size(); ++i) {
    const auto& sl = N.slots[i];
    SlotHull H;
    H.dim_gen = sl.gen.rows();
    const u64 rk = rank(slot_gram(N, i));
    if (has_second(N.regime, sl)) {
      H.dim_gen2 = sl.gen2.rows();
      H.pair_rank = rk;
      H.hull_dim = (H.dim_gen - rk) + (H.dim_gen2 - rk);
      H.defect = 2 * rk;
    } else {
      H.hull_dim = H.dim_gen - rk;
      H.defect = rk;
    }
    P.k += sl.degree * (H.dim_gen + H.dim_gen2);
    P.hull_dim += sl.degree * H.hull_dim;
    P.defect += sl.degree * H.defect;
    P.slots.push_back(H);
  }
  if (S.regime == QTRegime::Hermitian) {
    P.e = P.defect;
  } else {
    if (P.defect % 2 != 0) throw std::logic_error("hull_profile: odd symplectic defect");
    P.e = P.defect / 2;
  }
  return P;
}

u64 dimension_from_constituents(const ConstituentSet& S) {
  u64 k = 0;
  for (const auto& sl : S.slots) {
    k += sl.degree * rank(sl.gen);
    if (has_second(S.regime, sl)) k += sl.degree * rank(sl.gen2);
  }
  return k;
}

u64 subfield_trace(const Field& split, u64 base_order, u64 sub_order, u64 a) {
  if (a >= split.size()) throw std::invalid_argument("subfield_trace: code outside field");
  u64 e = 0;
  u64 s = 1;
  while (s < sub_order) {
    s *= base_order;
    ++e;
  }
  if (e == 0 || s != sub_order)
    throw std::invalid_argument("subfield_trace: sub_order not a power of the base order");
  if (split.pow(a, sub_order) != a)
    throw std::invalid_argument("subfield_trace: element outside the subfield");
  u64 acc = 0;
  u64 y = a;
  for (u64 j = 0; j < e; ++j) {
    acc = split.add(acc, y);
    y = split.pow(y, base_order);
  }
  if (acc >= base_order) throw std::logic_error("subfield_trace: value escaped the base field");
  return acc;
}

u64 random_subfield_element(const Field& split, u64 sub_order, std::mt19937_64& rng) {
  if (sub_order < 2 || (split.size() - 1) % (sub_order - 1) != 0)
    throw std::invalid_argument("random_subfield_element: not a subfield order");
  const u64 g = split.pow(split.generator(), (split.size() - 1) / (sub_order - 1));
  std::uniform_int_distribution<u64> dist(0, sub_order - 1);
  const u64 r = dist(rng);
  return r == 0 ? 0 : split.pow(g, r - 1);
}

}  // namespace qtx
