// Copyright 2026 the qtx authors
// SPDX-License-Identifier: Apache-2.0

#include "qtx/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "json.hpp"
#include "qtx/qt.hpp"
#include "qtx/wdist.hpp"

namespace qtx {
namespace {

u64 splitmix64(u64 x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4b58bull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

QTRegime qt_regime_for(Regime r) {
  switch (r) {
    case Regime::Hermitian:
      return QTRegime::Hermitian;
    case Regime::Symplectic:
      return QTRegime::Symplectic;
    case Regime::CSS:
      return QTRegime::LambdaPair;
    case Regime::TraceSymplectic:
      return QTRegime::Symplectic;
  }
  throw std::logic_error("cli: bad regime");
}

bool slot_has_second(const ConstituentSet& S, const ConstituentSlot& sl) {
  return S.regime == QTRegime::LambdaPair || sl.is_pair;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Mat random_sub_mat(const Field& split, u64 sub_order, size_t rows, size_t cols,
                   std::mt19937_64& rng) {
  Mat A(split, rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) A(i, j) = random_subfield_element(split, sub_order, rng);
  return A;
}

// Rows whose Euclidean orthogonal complement carries the slot's
// self-orthogonality condition: a candidate X satisfies the solo
// criterion iff X sits inside span(so_partner(X-basis))^perpE, and a
// second constituent satisfies the pair criterion iff it sits inside
// span(so_partner(first))^perpE.  Semilinearity of the entrywise
// Frobenius makes the solo containment independent of the basis choice.
Mat so_partner(const ConstituentSet& S, const ConstituentSlot& sl, const Mat& R) {
  switch (S.regime) {
    case QTRegime::Hermitian: {
      u64 kappa = S.cls.conj_q;
      if (!sl.is_pair) {
        kappa = 1;
        for (u64 j = 0; j < sl.degree; ++j) kappa *= S.cls.conj_q;
      }
      return pow_entries(R, kappa);
    }
    case QTRegime::Symplectic: {
      u64 kappa = 1;
      if (!sl.is_pair && sl.degree > 1)
        for (u64 j = 0; j < sl.degree / 2; ++j) kappa *= S.base.size();
      const Field& K = R.field();
      const size_t h = R.cols() / 2;
      Mat T(K, R.rows(), R.cols());
      for (size_t i = 0; i < R.rows(); ++i)
        for (size_t t = 0; t < h; ++t) {
          T(i, t) = R(i, h + t);
          T(i, h + t) = K.neg(R(i, t));
        }
      return kappa == 1 ? T : pow_entries(T, kappa);
    }
    case QTRegime::LambdaPair:
      return R;
  }
  throw std::logic_error("cli: bad regime");
}

// Draw one slot: dimensions from the range, a random matrix repaired to
// the slot's self-orthogonality criterion by intersection with the
// Euclidean dual of its partner rows, re-sampled on shortfall.
bool sample_slot(const ConstituentSet& S, ConstituentSlot& sl, const SlotRange& r,
                 int retries, std::mt19937_64& rng) {
  const u64 ell = S.ell;
  const Field& split = S.split;
  auto draw = [&](u64 lo, u64 hi) { return lo + (hi > lo ? rng() % (hi - lo + 1) : 0); };
  if (slot_has_second(S, sl)) {
    for (int a = 0; a < retries; ++a) {
      const u64 w1 = draw(r.lo, r.hi);
      const u64 w2 = draw(r.lo, r.hi);
      if (w1 > ell || w2 > ell || w1 + w2 > ell) continue;
      Mat G1 = random_sub_mat(split, sl.subfield_order, w1, ell, rng);
      if (rank(G1) != w1) continue;
      if (w2 == 0) {
        sl.gen = std::move(G1);
        sl.gen2 = Mat(split, 0, ell);
        return true;
      }
      LinearCode D = dual(LinearCode::from_span(split, so_partner(S, sl, G1)),
                          IPKind::Euclidean);
      if (D.dim() < w2) continue;
      Mat G2 = mat_mul(random_sub_mat(split, sl.subfield_order, w2, D.dim(), rng), D.gen());
      if (rank(G2) != w2) continue;
      sl.gen = std::move(G1);
      sl.gen2 = std::move(G2);
      return true;
    }
    return false;
  }
  for (int a = 0; a < retries; ++a) {
    const u64 w = draw(r.lo, r.hi);
    if (w > ell / 2) continue;
    if (w == 0) {
      sl.gen = Mat(split, 0, ell);
      return true;
    }
    // A couple of spare rows rotate in: the repaired part of a larger
    // span can reach the target dimension when an exact-size draw keeps
    // missing it.
    const size_t k0 = std::min<u64>(ell, w + a % 3);
    Mat R = random_sub_mat(split, sl.subfield_order, k0, ell, rng);
    LinearCode X = intersect_codes(
        LinearCode::from_span(split, R),
        dual(LinearCode::from_span(split, so_partner(S, sl, R)), IPKind::Euclidean));
    if (X.dim() < w) continue;
    Mat G(split, w, ell);
    for (size_t i = 0; i < w; ++i) G.set_row(i, X.gen().row(i));
    sl.gen = std::move(G);
    return true;
  }
  return false;
}

bool looks_like_certificate(const std::string& text) {
  auto doc = nlohmann::json::parse(text, nullptr, false);
  return doc.is_object() && doc.contains("type") && doc["type"] == "certificate";
}

struct ParamKey {
  u64 q;
  size_t n;
  size_t m;
  long long klogp;
  size_t dl;
  size_t du;
  int purity;
  auto tie() const { return std::tie(q, n, m, klogp, dl, du, purity); }
  bool operator==(const ParamKey& o) const { return tie() == o.tie(); }
};

ParamKey key_of(const QuantumParams& p) {
  return ParamKey{p.q, p.n, p.m, p.klogp, p.d_lower, p.d_upper, static_cast<int>(p.purity)};
}

// Merge propagation outputs: exact duplicates collapse, dominated
// entries drop, and the rest sort by alphabet, length, then dimension
// and distance descending.
std::vector<QuantumParams> merge_params(std::vector<QuantumParams> all) {
  std::vector<QuantumParams> uniq;
  for (auto& p : all) {
    bool seen = false;
    for (const auto& u : uniq)
      if (key_of(u) == key_of(p)) {
        seen = true;
        break;
      }
    if (!seen) uniq.push_back(std::move(p));
  }
  std::vector<QuantumParams> kept;
  for (size_t i = 0; i < uniq.size(); ++i) {
    bool drop = false;
    for (size_t j = 0; j < uniq.size() && !drop; ++j)
      if (j != i && dominates(uniq[j], uniq[i])) drop = true;
    if (!drop) kept.push_back(std::move(uniq[i]));
  }
  std::sort(kept.begin(), kept.end(), [](const QuantumParams& a, const QuantumParams& b) {
    if (a.q != b.q) return a.q < b.q;
    if (a.n != b.n) return a.n < b.n;
    if (a.klogp != b.klogp) return a.klogp > b.klogp;
    if (a.d_lower != b.d_lower) return a.d_lower > b.d_lower;
    return a.d_upper > b.d_upper;
  });
  return kept;
}

}  // namespace

Extension extension_from_spec(const QTCodeSpec& spec, Regime regime, u64 compress_m,
                              const DistanceOptions& opt, std::mt19937_64* rng,
                              std::shared_ptr<const Tower>* tower_out) {
  switch (regime) {
    case Regime::Hermitian:
      return extend_hermitian(expand_generator_matrix(spec, QTRegime::Hermitian), opt, rng);
    case Regime::Symplectic:
      return extend_symplectic(expand_generator_matrix(spec, QTRegime::Symplectic), opt, rng);
    case Regime::CSS: {
      LinearCode C = expand_generator_matrix(spec, QTRegime::LambdaPair);
      const size_t n1 = static_cast<size_t>(spec.m * spec.ell);
      LinearCode A = LinearCode::from_span(spec.base, take_cols(C.gen(), 0, n1));
      LinearCode B = LinearCode::from_span(spec.base, take_cols(C.gen(), n1, 2 * n1));
      return extend_css(dual(A, IPKind::Euclidean), dual(B, IPKind::Euclidean), opt, rng);
    }
    case Regime::TraceSymplectic: {
      if (spec.base.size() != spec.base.p())
        throw std::invalid_argument(
            "trace-symplectic regime: the spec alphabet must be the prime field");
      LinearCode C = expand_generator_matrix(spec, QTRegime::Symplectic);
      const u64 cm = compress_m == 0 ? 1 : compress_m;
      if (cm == 1) {
        AdditiveCode A = additive_from_expansion(make_psi_basis(spec.base), C);
        return extend_trace_symplectic(A, opt, rng);
      }
      if ((spec.m * spec.ell) % (2 * cm) != 0)
        throw std::invalid_argument(
            "trace-symplectic regime: expanded length is not divisible by twice compress_m");
      if (tower_out == nullptr)
        throw std::logic_error("extension_from_spec: compressed regime needs a tower keep-alive");
      std::shared_ptr<const Tower> tw = extend_tower(spec.base, static_cast<int>(cm));
      *tower_out = tw;
      const Field Fp = tw->field(0);
      Mat G0(Fp, C.gen().rows(), C.gen().cols());
      for (size_t i = 0; i < G0.rows(); ++i)
        for (size_t j = 0; j < G0.cols(); ++j) G0(i, j) = C.gen()(i, j);
      AdditiveCode A =
          additive_from_expansion(make_psi_basis(tw->top()), LinearCode::from_span(Fp, G0));
      return extend_trace_symplectic(A, opt, rng);
    }
  }
  throw std::logic_error("cli: bad regime");
}

std::vector<ResultRecord> run_search(const SearchConfig& cfg,
                                     const std::vector<KnownEntry>* table,
                                     SearchStats* stats) {
  if (!cfg.field.tower || cfg.field.F.tw == nullptr)
    throw std::invalid_argument("search: configuration carries no field");
  const Field F = cfg.field.F;
  if (cfg.m == 0 || cfg.ell == 0)
    throw std::invalid_argument("search: m and ell must be positive");
  switch (cfg.regime) {
    case Regime::Hermitian: {
      const u64 q = hermitian_q(F);
      if (cfg.lambda >= F.size() || F.pow(cfg.lambda, q + 1) != 1)
        throw std::invalid_argument("search: hermitian regime needs lambda with lambda^(q+1) = 1");
      break;
    }
    case Regime::Symplectic:
      if (cfg.lambda != 1 && cfg.lambda != F.neg(1))
        throw std::invalid_argument("search: symplectic regime needs lambda = 1 or -1");
      if (cfg.ell % 2 != 0)
        throw std::invalid_argument("search: symplectic regime needs even ell");
      break;
    case Regime::CSS:
      if (cfg.lambda >= F.size() || cfg.lambda == 0 || cfg.lambda == 1 ||
          cfg.lambda == F.neg(1))
        throw std::invalid_argument(
            "search: css regime needs lambda distinct from 0, 1, and -1");
      break;
    case Regime::TraceSymplectic:
      throw std::invalid_argument(
          "search: the trace-symplectic regime is a compression of symplectic results; "
          "search under the symplectic regime instead");
  }
  if (cfg.retries <= 0) throw std::invalid_argument("search: retries must be positive");

  const QTRegime qreg = qt_regime_for(cfg.regime);
  const ConstituentSet frame = constituent_frame(F, cfg.m, cfg.ell, cfg.lambda, qreg);
  const size_t nslots = frame.slots.size();

  std::vector<SlotRange> ranges;
  if (cfg.slot_dims.size() == 1) {
    ranges.assign(nslots, cfg.slot_dims[0]);
  } else if (cfg.slot_dims.size() == nslots) {
    ranges = cfg.slot_dims;
  } else {
    throw std::invalid_argument("search: expected 1 or " + std::to_string(nslots) +
                                " slot dimension ranges, got " +
                                std::to_string(cfg.slot_dims.size()));
  }
  if (cfg.defect_slot >= nslots)
    throw std::invalid_argument("search: defect slot " + std::to_string(cfg.defect_slot) +
                                " out of range (slots: " + std::to_string(nslots) + ")");
  for (size_t i = 0; i < nslots; ++i) {
    const SlotRange& r = ranges[i];
    if (r.lo > r.hi)
      throw std::invalid_argument("search: slot " + std::to_string(i) +
                                  " has an empty dimension range");
    const bool two = slot_has_second(frame, frame.slots[i]);
    const u64 cap = two ? cfg.ell : cfg.ell / 2;
    if (two ? 2 * r.lo > cfg.ell : r.lo > cap)
      throw std::invalid_argument(
          "search: slot " + std::to_string(i) + " dimension range starts at " +
          std::to_string(r.lo) + ", above the self-orthogonality cap for ell = " +
          std::to_string(cfg.ell));
  }

  std::vector<ResultRecord> out;
  SearchStats st;
  for (u64 it = 0; it < cfg.budget; ++it) {
    std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(it + 0x51ed2701ull)));
    ConstituentSet S = frame;
    bool ok = true;
    for (size_t i = 0; i < nslots && ok; ++i)
      ok = sample_slot(S, S.slots[i], ranges[i], cfg.retries, rng);
    if (!ok) {
      ++st.sampling_shortfalls;
      continue;
    }
    ConstituentSlot& dsl = S.slots[cfg.defect_slot];
    Vec extra(static_cast<size_t>(cfg.ell));
    for (auto& x : extra) x = random_subfield_element(S.split, dsl.subfield_order, rng);
    (slot_has_second(S, dsl) ? dsl.gen2 : dsl.gen).append_row(extra);

    QTCodeSpec spec = compose(S);
    DistanceOptions dopt;
    dopt.compute = true;
    dopt.threshold = cfg.threshold;
    dopt.threads = cfg.threads;
    const auto t0 = std::chrono::steady_clock::now();
    Extension ext = extension_from_spec(spec, cfg.regime, 0, dopt, &rng);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const QuantumParams& P = ext.params;
    if (P.singleton_red_flag())
      throw std::logic_error("search: Singleton red flag on " + P.to_string());
    size_t bar = cfg.accept;
    if (table && P.k_integral() && P.klogp >= 0) {
      const u64 kn = known_distance(*table, P.q, P.n, static_cast<u64>(P.k()));
      if (kn > 0) bar = std::max<size_t>(bar, static_cast<size_t>(kn) + 1);
    }
    if (P.d_lower < bar) {
      ++st.rejected;
      continue;
    }
    ResultRecord r;
    r.params = P;
    r.spec = std::move(spec);
    r.tower = cfg.field.tower;
    r.witness = witness_digest(ext.witness);
    r.seed = cfg.seed;
    r.iteration = it;
    r.threshold = cfg.threshold;
    r.wall_ms = ms;
    r.exact = P.d_lower == P.d_upper;
    out.push_back(std::move(r));
  }
  st.iterations = cfg.budget;
  if (stats) *stats = st;
  return out;
}

bool reverify_record(const ResultRecord& r, int threads, std::string* line_out) {
  DistanceOptions opt;
  opt.compute = true;
  opt.threshold = r.threshold;
  opt.threads = threads;
  std::shared_ptr<const Tower> keep;
  Extension ext = extension_from_spec(r.spec, r.params.regime, r.compress_m, opt, nullptr, &keep);
  const std::string line = ext.params.to_string();
  if (line_out) *line_out = line;
  return line == r.params.to_string();
}

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    const ParsedSpec ps = spec_from_json(read_file(opt.spec_path));
    const Regime regime = ps.compress_m > 0 ? Regime::TraceSymplectic : opt.regime;
    const QTRegime qreg = qt_regime_for(regime);
    const Field& F = ps.spec.base;
    out << "spec: m = " << ps.spec.m << ", ell = " << ps.spec.ell << ", lambda = "
        << elem_str(F, ps.spec.lambda) << ", field F_" << F.size() << ", regime "
        << regime_name(regime) << "\n";
    const ConstituentSet S = decompose(ps.spec, qreg);
    const SOReport so = check_self_orthogonal(S);
    const HullProfile hp = hull_profile(S);
    const LinearCode C = expand_generator_matrix(ps.spec, qreg);
    out << "expanded code: [" << C.n() << ", " << C.dim();
    if (opt.budget > 0 && C.dim() > 0) {
      WeightQuery wq;
      wq.code = C;
      wq.threshold = opt.threshold;
      wq.threads = opt.threads;
      const WeightResult wr = min_weight(wq);
      out << ", " << (wr.exact ? "" : ">= ") << wr.value;
    }
    out << "]_" << F.size() << "\n";
    if (regime == Regime::CSS) {
      const size_t n1 = static_cast<size_t>(ps.spec.m * ps.spec.ell);
      const LinearCode A = LinearCode::from_span(F, take_cols(C.gen(), 0, n1));
      const LinearCode B = LinearCode::from_span(F, take_cols(C.gen(), n1, 2 * n1));
      out << "lambda block: [" << n1 << ", " << A.dim() << "]_" << F.size()
          << ", inverse block: [" << n1 << ", " << B.dim() << "]_" << F.size() << "\n";
    }
    out << "slots: " << S.slots.size() << "\n";
    for (size_t i = 0; i < S.slots.size(); ++i) {
      const ConstituentSlot& sl = S.slots[i];
      const bool two = slot_has_second(S, sl);
      out << "  slot " << i << ": "
          << (S.regime == QTRegime::LambdaPair ? "factor" : (sl.is_pair ? "pair" : "solo"))
          << ", root " << sl.root_exp << ", degree " << sl.degree << ", subfield F_"
          << sl.subfield_order << ", dim " << hp.slots[i].dim_gen;
      if (two) out << "/" << hp.slots[i].dim_gen2;
      out << ", gram rank " << so.slots[i].gram_rank << "\n";
    }
    out << "self-orthogonal: " << (so.ok ? "yes" : "no") << "\n";
    out << "dimension: " << hp.k << " from constituents, " << C.dim() << " from the matrix\n";
    out << "hull: dimension " << hp.hull_dim << ", defect " << hp.defect << ", e = " << hp.e
        << "\n";
    DistanceOptions dopt;
    dopt.compute = opt.budget > 0;
    dopt.threshold = opt.threshold;
    dopt.threads = opt.threads;
    dopt.additive_bits = opt.budget;
    std::shared_ptr<const Tower> keep;
    const Extension ext = extension_from_spec(ps.spec, regime, ps.compress_m, dopt, nullptr, &keep);
    out << "extension: " << ext.params.to_string() << ", "
        << purity_name(ext.params.purity) << ", e = " << ext.witness.e << "\n";
    if (!opt.certificate_path.empty()) {
      std::ofstream cf(opt.certificate_path, std::ios::binary);
      if (!cf) throw ParseError("cannot write " + opt.certificate_path);
      cf << certificate_to_json(ext, opt.spec_path);
      out << "certificate written: " << opt.certificate_path << "\n";
    }
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

int cmd_search(const SearchOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    std::vector<KnownEntry> table;
    bool have_table = false;
    if (!opt.known_table_path.empty()) {
      std::ifstream f(opt.known_table_path, std::ios::binary);
      if (!f) throw ParseError("cannot open " + opt.known_table_path);
      table = read_known_table(f);
      have_table = true;
    }
    SearchStats st;
    const auto records = run_search(opt.config, have_table ? &table : nullptr, &st);
    if (!opt.out_path.empty()) {
      std::ofstream o(opt.out_path, std::ios::binary);
      if (!o) throw ParseError("cannot write " + opt.out_path);
      write_records(o, records);
    } else {
      write_records(out, records);
    }
    err << "search: " << st.iterations << " iterations, " << records.size()
        << " records kept, " << st.rejected << " rejected";
    if (st.sampling_shortfalls > 0)
      err << ", " << st.sampling_shortfalls << " sampling shortfalls";
    err << "\n";
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

int cmd_propagate(const PropagateOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    std::ifstream f(opt.records_path, std::ios::binary);
    if (!f) throw ParseError("cannot open " + opt.records_path);
    const auto records = read_records(f);
    std::vector<QuantumParams> all;
    for (const auto& r : records) {
      all.push_back(r.params);
      for (auto& d : propagate_closure(r.params, opt.depth)) all.push_back(std::move(d));
    }
    const auto kept = merge_params(std::move(all));
    if (opt.csv) {
      size_t skipped = 0;
      if (!kept.empty()) out << "q,n,k,d\n";
      for (const auto& p : kept) {
        if (!p.k_integral() || p.klogp < 0) {
          ++skipped;
          continue;
        }
        out << p.q << "," << p.n << "," << p.k() << "," << p.d_lower << "\n";
      }
      if (skipped > 0)
        err << "propagate: " << skipped << " entries with fractional dimension left out\n";
    } else {
      for (const auto& p : kept) {
        out << p.to_string() << "  " << purity_name(p.purity);
        if (!p.provenance.empty()) out << "  " << p.provenance;
        out << "\n";
      }
    }
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

int cmd_compare(const CompareOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    std::ifstream rf(opt.records_path, std::ios::binary);
    if (!rf) throw ParseError("cannot open " + opt.records_path);
    const auto records = read_records(rf);
    std::vector<KnownEntry> table;
    if (!opt.known_table_path.empty()) {
      std::ifstream tf(opt.known_table_path, std::ios::binary);
      if (!tf) throw ParseError("cannot open " + opt.known_table_path);
      table = read_known_table(tf);
    }
    for (const auto& r : records) {
      const QuantumParams& P = r.params;
      u64 kn = 0;
      if (P.k_integral() && P.klogp >= 0)
        kn = known_distance(table, P.q, P.n, static_cast<u64>(P.k()));
      const char* verdict = "new-record";
      if (kn > 0) {
        if (P.d_lower == kn)
          verdict = "tie";
        else if (P.d_lower < kn)
          verdict = "dominated";
      }
      out << verdict << "  " << P.to_string() << "  best known: ";
      if (kn > 0)
        out << kn;
      else
        out << "none";
      out << "\n";
    }
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    const std::string text = read_file(opt.path);
    if (looks_like_certificate(text)) {
      const CertificateCheck c = verify_certificate(text);
      if (c.ok) {
        out << "certificate ok  " << c.params.to_string() << "\n";
        return 0;
      }
      for (const auto& f : c.failures) out << "certificate failure: " << f << "\n";
      return 2;
    }
    std::istringstream in(text);
    const auto records = read_records(in);
    int rc = 0;
    for (const auto& r : records) {
      std::string line;
      std::string fail;
      bool ok = false;
      try {
        ok = reverify_record(r, opt.threads, &line);
      } catch (const std::invalid_argument& e) {
        fail = e.what();
      }
      if (ok) {
        out << "ok  " << line << "\n";
      } else {
        out << "mismatch  stored " << r.params.to_string();
        if (!fail.empty())
          out << "  (" << fail << ")";
        else
          out << "  recomputed " << line;
        out << "\n";
        rc = 2;
      }
    }
    return rc;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace qtx
