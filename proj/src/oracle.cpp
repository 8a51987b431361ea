#include "f2v/oracle.hpp"

#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <utility>

#include "f2v/error.hpp"
#include "f2v/transform.hpp"

namespace f2v {

namespace {

constexpr unsigned kTabulationCap = 20;

// Face-1 i-spin distribution of the permitted configurations.
BooleanFunction face1_distribution(const Subspace& space, unsigned n) {
  if (space.dim() > kTabulationCap || 2 * n > kTabulationCap) fail(ErrorCode::CapExceeded, "permitted space too large to tabulate");
  const std::size_t face = face_size(n);
  std::vector<std::size_t> face_coords(face);
  for (std::size_t i = 0; i < face; ++i) face_coords[i] = i;
  BooleanFunction h = BooleanFunction::zeros(static_cast<unsigned>(face));
  const Dyadic mass(1, static_cast<unsigned>(space.dim()));
  for (const auto& x : space.members()) h.values[table_index(x.select(face_coords))] += mass;
  return h;
}

}  // namespace

Subspace permitted_space(const VertexModel& model, unsigned n, unsigned max_n) {
  return fixed_space(build_block(model, n, false, max_n).m);
}

CountingOracle::CountingOracle(const VertexModel& model, unsigned n, unsigned max_n)
    : n_(n), space_(permitted_space(model, n, max_n)) {
  std::vector<Gf2Vector> rows = space_.basis();
  const Gf2Matrix basis = Gf2Matrix::from_rows(std::move(rows), space_.ambient_dim()).transpose();
  coordinate_columns_.reserve(basis.rows());
  for (std::size_t c = 0; c < basis.rows(); ++c) coordinate_columns_.push_back(basis.row(c));
}

DyadicProbability CountingOracle::probability(std::span<const EdgeAddress> edges) const {
  std::set<std::size_t> seen;
  std::vector<Gf2Vector> cols;
  for (const auto& e : edges) {
    const std::size_t idx = input_index(e, n_);
    if (!seen.insert(idx).second) fail(ErrorCode::DuplicateEdge, "duplicate edge in oracle query");
    cols.push_back(coordinate_columns_[idx]);
  }
  // 2^(dim - r) / 2^dim with r the rank of the constraints on the space.
  return DyadicProbability::one_over_pow2(static_cast<unsigned>(rank(std::move(cols))));
}

std::shared_ptr<const CountingOracle> cached_oracle(const VertexModel& model, unsigned n, unsigned max_n) {
  static std::shared_mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const CountingOracle>> cache;
  const std::pair key{matrix_code(model.matrix()), n};
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const CountingOracle>(model, n, max_n);
  std::unique_lock lock(mutex);
  return cache.emplace(key, std::move(built)).first->second;
}

DyadicProbability oracle_probability(const VertexModel& model, const CorrelationQuery& q) {
  for (const auto& e : q.edges) input_index(e, q.n);
  return cached_oracle(model, q.n)->probability(q.edges);
}

std::size_t predicted_permitted_dim(const VertexModel& model, unsigned n) {
  const SpectralData sd = spectral_data(model);
  if (n == 0) return sd.d();
  const ClassCounts counts = class_counts(n);
  return static_cast<std::size_t>(counts.count_a) * sd.d() + static_cast<std::size_t>(counts.count_at) * sd.d_t();
}

EnumerationReport enumerate_check(const VertexModel& model, unsigned n) {
  model.require_valid();
  const std::size_t dim = 3 * face_size(n);
  if (dim > 24) fail(ErrorCode::CapExceeded, "enumerate_check needs 3 * 4^n <= 24");
  const auto oracle = cached_oracle(model, n);

  EnumerationReport report;
  std::vector<Gf2Vector> permitted;
  for (std::size_t code = 0; code < (std::size_t{1} << dim); ++code) {
    const Gf2Vector x = vector_from_index(code, dim);
    const bool fixed = propagate(model, n, false, x) == x;
    ++report.assignments;
    if (fixed) {
      ++report.permitted;
      permitted.push_back(x);
    }
    if (fixed != oracle->space().contains(x)) ++report.membership_mismatches;
  }

  const std::size_t face = face_size(n);
  for (std::size_t k = 0; k <= std::min<std::size_t>(4, face); ++k) {
    for (const auto& subset : combinations(face, k)) {
      std::size_t zero_count = 0;
      for (const auto& x : permitted) {
        bool all_zero = true;
        for (std::size_t idx : subset) all_zero = all_zero && !x.get(idx);
        zero_count += all_zero ? 1 : 0;
      }
      std::vector<EdgeAddress> edges;
      for (std::size_t idx : subset) edges.push_back(edge_at(idx, n));
      // zero_count / permitted is a power of two when the oracle is right; compare as cross products.
      const DyadicProbability p = oracle->probability(edges);
      ++report.queries_checked;
      const bool agree = p.numerator() == 1 &&
                         (static_cast<std::uint64_t>(zero_count) << p.log2_denominator()) == permitted.size();
      if (!agree) ++report.query_mismatches;
    }
  }
  return report;
}

bool joint_factorizes(const BooleanFunction& joint) {
  const std::size_t size = joint.values.size();
  std::vector<Dyadic> marginal_one(joint.dim);  // P(coordinate i = 1)
  for (std::size_t x = 0; x < size; ++x) {
    for (unsigned i = 0; i < joint.dim; ++i) {
      if ((x >> i) & 1U) marginal_one[i] += joint(x);
    }
  }
  const Dyadic total = joint.total();
  for (std::size_t x = 0; x < size; ++x) {
    Dyadic product = total;
    for (unsigned i = 0; i < joint.dim; ++i) product *= (x >> i) & 1U ? marginal_one[i] : total - marginal_one[i];
    // With total = 1 this is joint == product of marginals; the extra factor keeps
    // unnormalised tables from passing by accident.
    Dyadic lhs = joint(x);
    for (unsigned i = 0; i < joint.dim; ++i) lhs *= total;
    if (lhs != product) return false;
  }
  return true;
}

IndependenceReport t_spin_independence_check(const VertexModel& model, unsigned n) {
  const auto oracle = cached_oracle(model, n);
  const SpinTransform t = build_transform(model, n);
  const BooleanFunction h = face1_distribution(oracle->space(), n);
  IndependenceReport report;
  report.permitted = std::size_t{1} << oracle->space().dim();
  report.joint = BooleanFunction::zeros(h.dim);
  for (std::size_t y = 0; y < h.values.size(); ++y) {
    if (h(y).is_zero()) continue;
    const Gf2Vector tspins = row_action(vector_from_index(y, h.dim), t.b);
    report.joint.values[table_index(tspins)] += h(y);
  }
  report.independent = joint_factorizes(report.joint);
  return report;
}

DualsReport duals_check(const VertexModel& model, unsigned n) {
  const auto oracle = cached_oracle(model, n);
  const SpinTransform t = build_transform(model, n);
  const TSpinFactors factors = t_spin_factors(model);
  const BooleanFunction h = face1_distribution(oracle->space(), n);
  BooleanFunction f = BooleanFunction::zeros(h.dim);
  for (std::size_t x = 0; x < f.values.size(); ++x) {
    f.values[x] = h(table_index(row_action(vector_from_index(x, h.dim), t.g)));
  }
  const FourierTable big_h = fourier_full(h);
  const FourierTable big_f = fourier_full(f);

  DualsReport report;
  for (std::size_t z = 0; z < big_h.values.size(); ++z) {
    const Gf2Vector zv = vector_from_index(z, h.dim);
    const Gf2Vector w = col_action(t.g, zv);
    ++report.checked;
    if (big_f(table_index(w)) != big_h(z)) ++report.duals_mismatches;
    if (big_f(z) != product_eval(factors, n, zv)) ++report.product_mismatches;
  }
  return report;
}

}  // namespace f2v
