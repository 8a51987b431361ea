#include "f2v/correlations.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "f2v/error.hpp"
#include "f2v/parallel.hpp"

namespace f2v {

void validate_query(const CorrelationQuery& q) {
  if (q.edges.size() > kMaxQueryEdges) fail(ErrorCode::InvalidArgument, "too many edges in query");
  std::set<EdgeAddress> seen;
  for (const auto& e : q.edges) {
    if (e.axis != 1) fail(ErrorCode::InvalidArgument, "correlation queries take axis-1 edges only");
    input_index(e, q.n);  // range check
    if (!seen.insert(e).second) {
      fail(ErrorCode::DuplicateEdge, "duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
  }
}

CorrelationEngine::CorrelationEngine(const VertexModel& model, unsigned n, unsigned max_n)
    : n_(n), transform_(build_transform(model, n, max_n)), factors_(t_spin_factors(model)) {
  // Column c of G is G applied to the unit dual at c.
  const Gf2Matrix gt = transform_.g.transpose();
  duals_.reserve(gt.rows());
  for (std::size_t c = 0; c < gt.rows(); ++c) duals_.push_back(gt.row(c));
}

DyadicProbability CorrelationEngine::probability_by_index(std::span<const std::size_t> indices) const {
  const std::size_t k = indices.size();
  if (k > kMaxQueryEdges) fail(ErrorCode::InvalidArgument, "too many edges in query");
  // Walk the 2^k subset sums in Gray-code order: one XOR per step.
  Gf2Vector w(face_size(n_));
  Dyadic sum = product_eval(factors_, n_, w);
  for (std::size_t step = 1; step < (std::size_t{1} << k); ++step) {
    const auto flip = static_cast<std::size_t>(std::countr_zero(step));
    w += duals_.at(indices[flip]);
    sum += product_eval(factors_, n_, w);
  }
  return DyadicProbability(sum.scaled_down(static_cast<unsigned>(k)));
}

DyadicProbability CorrelationEngine::probability(std::span<const EdgeAddress> edges) const {
  CorrelationQuery q{n_, {edges.begin(), edges.end()}};
  validate_query(q);
  std::vector<std::size_t> indices;
  indices.reserve(edges.size());
  for (const auto& e : edges) indices.push_back(input_index(e, n_));
  return probability_by_index(indices);
}

DyadicProbability k_spin_probability(const VertexModel& model, const CorrelationQuery& q) {
  validate_query(q);
  return CorrelationEngine(model, q.n).probability(q.edges);
}

bool is_half_period_square(std::span<const EdgeAddress> edges, unsigned n) {
  if (edges.size() != 4) fail(ErrorCode::InvalidArgument, "a square needs exactly four edges");
  validate_query(CorrelationQuery{n, {edges.begin(), edges.end()}});
  if (n == 0) return false;
  const std::uint32_t side = 1U << n;
  const std::uint32_t half = side / 2;
  const std::uint32_t x2 = edges[0].u, x3 = edges[0].v;
  const std::set<std::pair<std::uint32_t, std::uint32_t>> want{
      {x2, x3}, {(x2 + half) % side, x3}, {x2, (x3 + half) % side}, {(x2 + half) % side, (x3 + half) % side}};
  std::set<std::pair<std::uint32_t, std::uint32_t>> have;
  for (const auto& e : edges) have.insert({e.u, e.v});
  return have == want;
}

DyadicProbability theorem_predictor(const CorrelationQuery& q) {
  validate_query(q);
  const std::size_t k = q.edges.size();
  if (k > kVerifiedMaxEdges) fail(ErrorCode::InvalidArgument, "the predictor covers at most four edges");
  if (k == 4 && is_half_period_square(q.edges, q.n)) return DyadicProbability::one_over_pow2(3);
  return DyadicProbability::one_over_pow2(static_cast<unsigned>(k));
}

std::vector<std::vector<std::size_t>> combinations(std::size_t count, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > count) return out;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == count - k + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

std::vector<std::array<std::size_t, 4>> square_quadruples(unsigned n) {
  if (n == 0) return {};
  const std::uint32_t side = 1U << n;
  const std::uint32_t half = side / 2;
  std::set<std::array<std::size_t, 4>> squares;
  for (std::uint32_t x2 = 0; x2 < side; ++x2) {
    for (std::uint32_t x3 = 0; x3 < side; ++x3) {
      std::array<std::size_t, 4> q{
          input_index(face1_edge(x2, x3), n), input_index(face1_edge((x2 + half) % side, x3), n),
          input_index(face1_edge(x2, (x3 + half) % side), n),
          input_index(face1_edge((x2 + half) % side, (x3 + half) % side), n)};
      std::sort(q.begin(), q.end());
      squares.insert(q);
    }
  }
  return {squares.begin(), squares.end()};
}

std::vector<std::array<std::size_t, 4>> stratified_quadruples(unsigned n, std::size_t count, std::uint64_t seed) {
  const auto squares = square_quadruples(n);
  std::set<std::array<std::size_t, 4>> chosen(squares.begin(), squares.end());
  const std::size_t face = face_size(n);
  const std::size_t available = face * (face - 1) * (face - 2) * (face - 3) / 24;
  count = std::min(count, available);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, face - 1);
  while (chosen.size() < count) {
    std::set<std::size_t> s;
    while (s.size() < 4) s.insert(pick(rng));
    std::array<std::size_t, 4> q{};
    std::copy(s.begin(), s.end(), q.begin());
    chosen.insert(q);
  }
  return {chosen.begin(), chosen.end()};
}

QuadrupleScanReport scan_quadruples(const CorrelationEngine& engine, const std::string& matrix,
                                    std::span<const std::array<std::size_t, 4>> quadruples, const ScanOptions& options) {
  const unsigned n = engine.level();
  std::vector<QuadrupleResult> results(quadruples.size());
  parallel_for(quadruples.size(), options.jobs, [&](std::size_t i) {
    QuadrupleResult& r = results[i];
    r.indices = quadruples[i];
    std::vector<EdgeAddress> edges;
    for (std::size_t idx : r.indices) edges.push_back(edge_at(idx, n));
    r.engine = engine.probability_by_index(r.indices);
    r.square = is_half_period_square(edges, n);
    r.predicted = theorem_predictor(CorrelationQuery{n, edges});
    if (options.oracle) r.oracle = options.oracle(edges);
  });

  QuadrupleScanReport report;
  report.matrix = matrix;
  report.n = n;
  report.total = results.size();
  for (auto& r : results) {
    const bool predictor_ok = r.engine == r.predicted;
    const bool oracle_ok = !r.oracle || *r.oracle == r.engine;
    report.squares += r.square ? 1 : 0;
    report.predictor_mismatches += predictor_ok ? 0 : 1;
    report.oracle_mismatches += oracle_ok ? 0 : 1;
    ++report.histogram[r.engine.to_string()];
    if (options.keep_all_rows || !predictor_ok || !oracle_ok) report.rows.push_back(std::move(r));
  }
  return report;
}

QuadrupleScanReport scan_quadruples(const VertexModel& model, unsigned n, const ScanOptions& options) {
  const CorrelationEngine engine(model, n);
  std::vector<std::array<std::size_t, 4>> all;
  for (const auto& c : combinations(face_size(n), 4)) all.push_back({c[0], c[1], c[2], c[3]});
  return scan_quadruples(engine, model.encoding(), all, options);
}

namespace {

// Tensor product of n two-entry columns: bit t of `mask` (counted from the
// leftmost factor) selects (1 1)^T, otherwise (1 0)^T.
Gf2Vector product_column(unsigned n, std::uint32_t mask) {
  Gf2Matrix acc = Gf2Matrix::identity(1);
  for (unsigned t = 0; t < n; ++t) {
    const bool wide = (mask >> (n - 1 - t)) & 1U;
    acc = kron(acc, wide ? Gf2Matrix::from_strings({"1", "1"}) : Gf2Matrix::from_strings({"1", "0"}));
  }
  return acc.column(0);
}

bool two_equal_pairs(const std::array<std::uint32_t, 4>& m) {
  return (m[0] == m[1] && m[2] == m[3]) || (m[0] == m[2] && m[1] == m[3]) || (m[0] == m[3] && m[1] == m[2]);
}

}  // namespace

LemmaReport lemma_m_check(unsigned n, std::size_t trials, std::uint64_t seed) {
  if (n < 1 || n > 10) fail(ErrorCode::OutOfRange, "lemma_m_check supports 1 <= n <= 10");
  const std::uint32_t kinds = 1U << n;
  std::vector<Gf2Vector> columns;
  columns.reserve(kinds);
  for (std::uint32_t m = 0; m < kinds; ++m) columns.push_back(product_column(n, m));

  LemmaReport report;
  auto check = [&](const std::array<std::uint32_t, 4>& m) {
    ++report.checked;
    Gf2Vector sum = columns[m[0]] + columns[m[1]] + columns[m[2]] + columns[m[3]];
    if (!sum.is_zero()) return;
    ++report.premise_hits;
    if (!two_equal_pairs(m)) ++report.counterexamples;
  };

  if (n <= 3) {
    report.exhaustive = true;
    std::array<std::uint32_t, 4> m{};
    for (m[0] = 0; m[0] < kinds; ++m[0])
      for (m[1] = 0; m[1] < kinds; ++m[1])
        for (m[2] = 0; m[2] < kinds; ++m[2])
          for (m[3] = 0; m[3] < kinds; ++m[3]) check(m);
    return report;
  }
  // Uniform 4-tuples almost never sum to zero, so every other sample completes
  // three random columns with a fourth equal to their sum when one exists.
  std::map<std::string, std::uint32_t> by_value;
  for (std::uint32_t m = 0; m < kinds; ++m) by_value.emplace(columns[m].to_string(), m);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, kinds - 1);
  for (std::size_t t = 0; t < trials; ++t) {
    std::array<std::uint32_t, 4> m{pick(rng), pick(rng), pick(rng), pick(rng)};
    if (t % 2 == 0) {
      const auto it = by_value.find((columns[m[0]] + columns[m[1]] + columns[m[2]]).to_string());
      if (it != by_value.end()) m[3] = it->second;
    }
    check(m);
  }
  return report;
}

LemmaKReport lemma_k_check(const VertexModel& model, unsigned n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "lemma_k_check needs n >= 1");
  const auto anchor = anchor_address(model, n);
  if (!anchor) fail(ErrorCode::InvalidModel, "model " + model.encoding() + " has no anchor address");
  const SpinTransform t = build_transform(model, n);
  const std::uint32_t side = 1U << n;
  const std::uint32_t top = side / 2;
  const EdgeAddress xi = face1_edge(anchor->u ^ top, anchor->v ^ top);

  LemmaKReport report;
  for (std::uint32_t chi2 = 0; chi2 < side; ++chi2) {
    if (chi2 == anchor->u) continue;
    for (std::uint32_t chi3 = 0; chi3 < side; ++chi3) {
      if (chi3 == anchor->v) continue;
      const EdgeAddress chi = face1_edge(chi2, chi3);
      const Gf2Vector w = t_dual(t, i_dual_column(chi, n));
      bool off_axis = false, in_a = false;
      for (std::size_t idx : w.support()) {
        const GhostAddress g = ghost_at(idx, n);
        if (g.alpha == 0 || g.beta == 0) continue;
        off_axis = true;
        in_a = in_a || address_class(g, n) == AddressClass::BelongsToA;
      }
      if (!off_axis) ++report.off_axis_failures;
      if (chi == xi) continue;
      ++report.admissible;
      if (!in_a) ++report.a_unity_failures;
    }
  }
  return report;
}

}  // namespace f2v
