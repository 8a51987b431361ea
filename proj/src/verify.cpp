#include "f2v/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "f2v/correlations.hpp"
#include "f2v/error.hpp"
#include "f2v/fourier.hpp"
#include "f2v/oracle.hpp"
#include "f2v/parallel.hpp"
#include "f2v/transform.hpp"

namespace f2v {

namespace {

struct Suite {
  Json checks = Json::array();
  bool passed = true;

  Json& add(std::string name, bool ok) {
    passed = passed && ok;
    checks.push_back(Json{{"name", std::move(name)}, {"passed", ok}});
    return checks.back();
  }

  Json finish(std::string_view suite) && {
    return Json{{"suite", suite}, {"passed", passed}, {"checks", std::move(checks)}};
  }
};

std::vector<Gf2Matrix> class_matrices() {
  auto twelve = enumerate_matrices(MatrixClass::TwelveClass);
  auto twenty_six = enumerate_matrices(MatrixClass::TwentySixClass);
  twelve.insert(twelve.end(), twenty_six.begin(), twenty_six.end());
  std::sort(twelve.begin(), twelve.end(), [](const auto& a, const auto& b) { return matrix_code(a) < matrix_code(b); });
  return twelve;
}

Json rows_json(const Gf2Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r).to_string());
  return rows;
}

Json edge_json(const EdgeAddress& e) { return Json::array({e.u, e.v}); }

Dyadic random_dyadic(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(-8, 8);
  std::uniform_int_distribution<unsigned> exp(0, 6);
  return Dyadic(num(rng), exp(rng));
}

BooleanFunction random_function(unsigned dim, std::mt19937_64& rng) {
  BooleanFunction f = BooleanFunction::zeros(dim);
  for (auto& v : f.values) v = random_dyadic(rng);
  return f;
}

unsigned level_or(const std::optional<unsigned>& v, unsigned fallback) { return v.value_or(fallback); }

// ---- suites ----

Json suite_directsum(const VerifyOptions& opt) {
  Suite s;
  for (const auto& a : class_matrices()) {
    const VertexModel model(a);
    const DirectSumReport r = verify_direct_sum(model);
    auto& c = s.add("direct_sum", r.passed);
    c["matrix"] = r.matrix;
    c["class"] = class_name(classify(a));
    c["mismatches"] = r.mismatches.size();
  }
  const unsigned n_max = level_or(opt.n_max, 3);
  for (unsigned n = level_or(opt.n_min, 1); n <= n_max; ++n) {
    for (const auto& a : enumerate_matrices(MatrixClass::TwelveClass)) {
      const VertexModel model(a);
      const SpinTransform t = build_transform(model, n, opt.max_n);
      const bool stepwise = stepwise_transform(model, n) == t.g;
      const bool inverse_ok = mat_mul(t.g, t.b) == Gf2Matrix::identity(face_size(n)) &&
                              mat_mul(t.b, t.g) == Gf2Matrix::identity(face_size(n));
      auto& c = s.add("transform_closed_form", stepwise && inverse_ok);
      c["matrix"] = model.encoding();
      c["n"] = n;
      c["stepwise_matches"] = stepwise;
      c["g_times_b_is_identity"] = inverse_ok;
    }
  }
  return std::move(s).finish("directsum");
}

Json suite_fourier(const VerifyOptions& opt) {
  Suite s;
  std::mt19937_64 rng(opt.seed);

  std::size_t sum_kw_failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned m = std::uniform_int_distribution<unsigned>(1, 12)(rng);
    const unsigned k = std::uniform_int_distribution<unsigned>(0, std::min(4U, m))(rng);
    const BooleanFunction f = random_function(m, rng);
    std::vector<Gf2Vector> gens;
    while (gens.size() < k) {
      Gf2Vector g = vector_from_index(std::uniform_int_distribution<std::size_t>(1, (std::size_t{1} << m) - 1)(rng), m);
      gens.push_back(g);
      if (rank(gens) != gens.size()) gens.pop_back();
    }
    Dyadic direct;
    for (std::size_t x = 0; x < f.values.size(); ++x) {
      const Gf2Vector xv = vector_from_index(x, m);
      if (std::all_of(gens.begin(), gens.end(), [&](const Gf2Vector& g) { return !xv.dot(g); })) direct += f(x);
    }
    const FourierTable big_f = fourier_full(f);
    std::vector<Dyadic> on_k;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      Gf2Vector w(m);
      for (unsigned i = 0; i < k; ++i) {
        if ((mask >> i) & 1U) w += gens[i];
      }
      on_k.push_back(big_f(table_index(w)));
    }
    if (subspace_sum(on_k, k) != direct) ++sum_kw_failures;
  }
  s.add("subspace_sum_formula", sum_kw_failures == 0)["instances"] = 100;

  std::size_t prod_failures = 0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<BooleanFunction> parts;
    const unsigned count = std::uniform_int_distribution<unsigned>(2, 4)(rng);
    for (unsigned p = 0; p < count; ++p) parts.push_back(random_function(std::uniform_int_distribution<unsigned>(1, 3)(rng), rng));
    if (!product_factorization_check(parts).passed) ++prod_failures;
  }
  s.add("product_factorization", prod_failures == 0)["instances"] = 20;

  for (const auto& a : class_matrices()) {
    const VertexModel model(a);
    const DualsReport d = duals_check(model, 1);
    auto& c = s.add("dual_transport", d.passed());
    c["matrix"] = model.encoding();
    c["checked"] = d.checked;
    const IndependenceReport ind = t_spin_independence_check(model, 1);
    s.add("t_spin_independence", ind.independent)["matrix"] = model.encoding();
  }

  // Negative control: a correlated two-spin table must be rejected.
  BooleanFunction correlated(2, {Dyadic(1, 1), Dyadic(0), Dyadic(0), Dyadic(1, 1)});
  s.add("independence_negative_control", !joint_factorizes(correlated));
  return std::move(s).finish("fourier");
}

Json suite_lemmas(const VerifyOptions& opt) {
  Suite s;
  const unsigned n_min = level_or(opt.n_min, 1);
  const unsigned n_max = level_or(opt.n_max, 4);
  for (unsigned n = n_min; n <= std::min(n_max, 3U); ++n) {
    const LemmaReport r = lemma_m_check(n);
    auto& c = s.add("lemma_equal_pairs", r.passed() && r.exhaustive);
    c["n"] = n;
    c["checked"] = r.checked;
    c["premise_hits"] = r.premise_hits;
  }
  for (unsigned n = n_min; n <= n_max; ++n) {
    for (const auto& a : enumerate_matrices(MatrixClass::TwelveClass)) {
      const VertexModel model(a);
      const LemmaKReport r = lemma_k_check(model, n);
      auto& c = s.add("lemma_unity_in_a", r.passed());
      c["matrix"] = model.encoding();
      c["n"] = n;
      c["admissible"] = r.admissible;
    }
  }
  for (unsigned n = n_min; n <= n_max; ++n) {
    std::size_t bad = 0;
    const std::uint32_t side = 1U << n;
    for (std::uint32_t alpha = 0; alpha < side; ++alpha) {
      for (std::uint32_t beta = 0; beta < side; ++beta) {
        const bool parent_at = address_class({alpha, beta}, n) == AddressClass::BelongsToAT;
        int children_at = 0;
        for (std::uint32_t hi_a = 0; hi_a < 2; ++hi_a)
          for (std::uint32_t hi_b = 0; hi_b < 2; ++hi_b)
            children_at += address_class({hi_a << n | alpha, hi_b << n | beta}, n + 1) == AddressClass::BelongsToAT;
        if (children_at != (parent_at ? 3 : 1)) ++bad;
      }
    }
    s.add("address_class_induction", bad == 0)["n"] = n;
  }
  for (unsigned n = 1; n <= 8; ++n) {
    const ClassCounts c = class_counts(n);
    const std::uint64_t big = std::uint64_t{1} << (2 * n - 1), small = std::uint64_t{1} << (n - 1);
    auto& j = s.add("class_counts", c.count_a == big + small && c.count_at == big - small);
    j["n"] = n;
    j["count_a"] = c.count_a;
    j["count_at"] = c.count_at;
  }
  return std::move(s).finish("lemmas");
}

Json suite_theorem(const VerifyOptions& opt) {
  Suite s;
  const VertexModel model = VertexModel::from_encoding(opt.matrix);
  model.require_valid();
  const unsigned n_min = level_or(opt.n_min, 2);
  const unsigned n_max = level_or(opt.n_max, n_min);
  for (unsigned n = n_min; n <= n_max; ++n) {
    const CorrelationEngine engine(model, n, opt.max_n);
    const auto oracle = cached_oracle(model, n, opt.max_n);
    ScanOptions so;
    so.jobs = opt.jobs;
    so.oracle = [&](std::span<const EdgeAddress> e) { return oracle->probability(e); };
    std::vector<std::array<std::size_t, 4>> quads;
    if (n <= 2) {
      for (const auto& c : combinations(face_size(n), 4)) quads.push_back({c[0], c[1], c[2], c[3]});
    } else {
      quads = stratified_quadruples(n, 500, opt.seed);
    }
    const QuadrupleScanReport r = scan_quadruples(engine, model.encoding(), quads, so);
    auto& c = s.add("four_spin_theorem", r.passed());
    c["matrix"] = r.matrix;
    c["n"] = n;
    c["exhaustive"] = n <= 2;
    c["quadruples"] = r.total;
    c["squares"] = r.squares;
    c["predictor_mismatches"] = r.predictor_mismatches;
    c["oracle_mismatches"] = r.oracle_mismatches;
    c["histogram"] = r.histogram;
  }
  return std::move(s).finish("theorem");
}

Json suite_classes(const VerifyOptions&) {
  Suite s;
  std::map<MatrixClass, std::size_t> counts;
  for (const auto& a : enumerate_matrices()) ++counts[classify(a)];
  auto& c = s.add("class_counts", counts[MatrixClass::TwelveClass] == 12 && counts[MatrixClass::TwentySixClass] == 26);
  for (auto [cls, count] : counts) c[std::string(class_name(cls))] = count;
  s.add("partition_of_512", counts[MatrixClass::TwelveClass] + counts[MatrixClass::TwentySixClass] +
                                    counts[MatrixClass::Other] + counts[MatrixClass::DeltaZero] == 512);

  const std::vector<std::string> listed{"011001101", "011001110", "011101101", "111001101", "111001110", "111101101"};
  std::set<std::string> closure;
  for (const auto& e : listed) {
    closure.insert(e);
    closure.insert(encode_matrix(conjugate_by_h(parse_matrix(e))));
  }
  std::set<std::string> twelve;
  for (const auto& a : enumerate_matrices(MatrixClass::TwelveClass)) twelve.insert(encode_matrix(a));
  auto& h = s.add("twelve_are_listed_six_with_h_conjugates", closure == twelve && closure.size() == 12);
  h["listed"] = listed;

  bool preserved = true;
  for (const auto& a : enumerate_matrices()) preserved = preserved && classify(conjugate_by_h(a)) == classify(a);
  s.add("h_conjugation_preserves_class", preserved);

  bool q_zero = true;
  for (const auto& a : enumerate_matrices(MatrixClass::TwentySixClass)) {
    const TSpinFactors f = t_spin_factors(VertexModel(a));
    q_zero = q_zero && f.q1_a.is_zero() && f.q1_at.is_zero();
  }
  s.add("twenty_six_have_vanishing_q1", q_zero);
  return std::move(s).finish("classes");
}

std::uint64_t fnv1a(std::string_view text, std::uint64_t h = 1469598103934665603ULL) {
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

std::vector<std::string> suite_names() { return {"directsum", "fourier", "lemmas", "theorem", "classes"}; }

Json run_suite(std::string_view suite, const VerifyOptions& options) {
  if (suite == "directsum") return suite_directsum(options);
  if (suite == "fourier") return suite_fourier(options);
  if (suite == "lemmas") return suite_lemmas(options);
  if (suite == "theorem") return suite_theorem(options);
  if (suite == "classes") return suite_classes(options);
  fail(ErrorCode::InvalidArgument, "unknown suite '" + std::string(suite) + "'");
}

Json probability_json(const DyadicProbability& p) { return Json{{"exact", p.to_string()}, {"decimal", p.to_double()}}; }

Json scan_class(MatrixClass cls, unsigned n, unsigned jobs, unsigned max_k, unsigned max_n) {
  const auto matrices = enumerate_matrices(cls);
  const bool exploratory = cls == MatrixClass::Other || cls == MatrixClass::DeltaZero;
  Json out{{"class", class_name(cls)}, {"n", n}, {"scope", exploratory ? "exploratory" : "verified"}};
  Json rows = Json::array();

  std::vector<std::vector<std::vector<std::size_t>>> subsets;
  for (unsigned k = 1; k <= max_k; ++k) subsets.push_back(combinations(face_size(n), k));

  std::set<std::uint64_t> digests;
  bool all_independent = true;
  bool predictor_ok = true;
  for (const auto& a : matrices) {
    const VertexModel model(a);
    Json row{{"matrix", model.encoding()}};
    if (!model.valid()) {
      row["valid"] = false;
      rows.push_back(std::move(row));
      continue;
    }
    const CorrelationEngine engine(model, n, max_n);
    std::uint64_t digest = 1469598103934665603ULL;
    Json per_k = Json::array();
    for (unsigned k = 1; k <= max_k; ++k) {
      const auto& list = subsets[k - 1];
      std::vector<DyadicProbability> values(list.size());
      parallel_for(list.size(), jobs, [&](std::size_t i) { values[i] = engine.probability_by_index(list[i]); });
      std::map<std::string, std::size_t> histogram;
      std::size_t predictor_mismatches = 0;
      for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string v = values[i].to_string();
        ++histogram[v];
        digest = fnv1a(v + ";", digest);
        if (values[i] != DyadicProbability::one_over_pow2(k)) all_independent = false;
        if (cls == MatrixClass::TwelveClass) {
          std::vector<EdgeAddress> edges;
          for (std::size_t idx : list[i]) edges.push_back(edge_at(idx, n));
          if (theorem_predictor(CorrelationQuery{n, edges}) != values[i]) ++predictor_mismatches;
        }
      }
      if (predictor_mismatches != 0) predictor_ok = false;
      per_k.push_back(Json{{"k", k}, {"queries", list.size()}, {"histogram", histogram}});
    }
    digests.insert(digest);
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(digest));
    row["valid"] = true;
    row["table_digest"] = hex;
    row["tables"] = std::move(per_k);
    rows.push_back(std::move(row));
  }
  out["matrices"] = std::move(rows);
  out["distinct_tables"] = digests.size();
  bool passed = true;
  if (cls == MatrixClass::TwelveClass) {
    out["identical_tables"] = digests.size() == 1;
    out["matches_predictor"] = predictor_ok;
    passed = digests.size() == 1 && predictor_ok;
  } else if (cls == MatrixClass::TwentySixClass) {
    out["all_independent"] = all_independent;
    passed = all_independent;
  }
  out["passed"] = passed;
  return out;
}

Json analyze_matrix(const VertexModel& model) {
  const MatrixClass cls = classify(model.matrix());
  Json out{{"matrix", model.encoding()}, {"class", class_name(cls)}, {"delta", model.delta() ? 1 : 0}, {"valid", model.valid()}};
  Json minors = Json::array();
  for (int j = 1; j <= 3; ++j) {
    Json row = Json::array();
    for (int k = 1; k <= 3; ++k) row.push_back(model.minor(j, k) ? 1 : 0);
    minors.push_back(row);
  }
  out["minors"] = minors;
  Json g = Json::object();
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j) g[std::to_string(i) + std::to_string(j)] = rows_json(model.g(i, j));
  out["g"] = g;

  const SpectralData sd = spectral_data(model);
  auto basis_json = [](const Subspace& s) {
    Json b = Json::array();
    for (const auto& v : s.basis()) b.push_back(v.to_string());
    return b;
  };
  out["eigenvectors"] = basis_json(sd.e_space);
  out["eigenvectors_transposed"] = basis_json(sd.e_space_t);
  out["d"] = sd.d();
  out["d_transposed"] = sd.d_t();
  if (!model.valid()) return out;

  out["b"] = Json{{"13", rows_json(model.b(1, 3))}, {"12", rows_json(model.b(1, 2))}};
  auto dist_json = [](const VertexDistribution& d) {
    Json p = Json::object();
    for (unsigned idx = 0; idx < 8; ++idx) {
      const std::string key{char('0' + ((idx >> 2) & 1U)), char('0' + ((idx >> 1) & 1U)), char('0' + (idx & 1U))};
      p[key] = d.p[idx].to_string();
    }
    return Json{{"p", p},
                {"q", Json::array({d.q0.to_string(), d.q1.to_string()})},
                {"Q", Json::array({d.fourier0.to_string(), d.fourier1.to_string()})}};
  };
  out["distribution"] = dist_json(vertex_distribution(model, false));
  out["distribution_transposed"] = dist_json(vertex_distribution(model, true));
  return out;
}

Json transform_report(const VertexModel& model, unsigned n, unsigned max_n) {
  const SpinTransform t = build_transform(model, n, max_n);
  Json out{{"matrix", model.encoding()}, {"n", n}, {"g", rows_json(t.g)}, {"b", rows_json(t.b)}};
  out["stepwise_matches"] = stepwise_transform(model, n) == t.g;
  out["g_times_b_is_identity"] = mat_mul(t.g, t.b) == Gf2Matrix::identity(face_size(n));
  Json grid = Json::array();
  const std::uint32_t side = 1U << n;
  for (std::uint32_t alpha = 0; alpha < side; ++alpha) {
    std::string row;
    for (std::uint32_t beta = 0; beta < side; ++beta) {
      if (beta != 0) row += ' ';
      row += address_class({alpha, beta}, n) == AddressClass::BelongsToA ? "A" : "T";
    }
    grid.push_back(row);
  }
  out["address_classes"] = grid;
  const ClassCounts c = class_counts(n);
  out["class_counts"] = Json{{"A", c.count_a}, {"AT", c.count_at}};
  if (const auto anchor = anchor_address(model, n)) out["anchor"] = edge_json(*anchor);
  return out;
}

}  // namespace f2v
