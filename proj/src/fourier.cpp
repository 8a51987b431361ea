#include "f2v/fourier.hpp"

#include "f2v/block.hpp"
#include "f2v/error.hpp"
#include "f2v/transform.hpp"

namespace f2v {

BooleanFunction::BooleanFunction(unsigned d, std::vector<Dyadic> v) : dim(d), values(std::move(v)) {
  if (d >= 8 * sizeof(std::size_t) || values.size() != (std::size_t{1} << d)) {
    fail(ErrorCode::Shape, "function table length must be 2^dim");
  }
}

Dyadic BooleanFunction::total() const {
  Dyadic sum;
  for (const auto& v : values) sum += v;
  return sum;
}

std::size_t table_index(const Gf2Vector& v) {
  if (v.size() >= 8 * sizeof(std::size_t)) fail(ErrorCode::CapExceeded, "vector too long for a table index");
  return v.size() == 0 ? 0 : static_cast<std::size_t>(v.words()[0]);
}

Gf2Vector vector_from_index(std::size_t index, std::size_t len) {
  Gf2Vector v(len);
  for (std::size_t i = 0; i < len; ++i) v.set(i, (index >> i) & 1U);
  return v;
}

FourierTable fourier_full(const BooleanFunction& f, unsigned cap) {
  if (f.dim > cap) fail(ErrorCode::CapExceeded, "fourier_full: dimension " + std::to_string(f.dim) + " exceeds cap");
  FourierTable out{f.dim, f.values};
  auto& v = out.values;
  // In-place butterfly: after the pass for bit h every entry holds the partial
  // transform over coordinates < h+1.
  for (std::size_t half = 1; half < v.size(); half <<= 1) {
    for (std::size_t base = 0; base < v.size(); base += 2 * half) {
      for (std::size_t i = base; i < base + half; ++i) {
        const Dyadic lo = v[i];
        const Dyadic hi = v[i + half];
        v[i] = lo + hi;
        v[i + half] = lo - hi;
      }
    }
  }
  return out;
}

Dyadic subspace_sum(std::span<const Dyadic> values_on_k, unsigned k) {
  if (k >= 63 || values_on_k.size() != (std::size_t{1} << k)) fail(ErrorCode::Shape, "subspace_sum: expected 2^k values");
  Dyadic sum;
  for (const auto& v : values_on_k) sum += v;
  return sum.scaled_down(k);
}

TSpinFactors t_spin_factors(const VertexModel& model) {
  return TSpinFactors{vertex_distribution(model, false).fourier1, vertex_distribution(model, true).fourier1};
}

Dyadic product_eval(const TSpinFactors& factors, unsigned n, const Gf2Vector& w) {
  if (w.size() != face_size(n)) fail(ErrorCode::Shape, "product_eval: dual column must have 4^n entries");
  Dyadic prod(1);
  for (std::size_t idx : w.support()) {
    prod *= address_class(ghost_at(idx, n), n) == AddressClass::BelongsToA ? factors.q1_a : factors.q1_at;
    if (prod.is_zero()) break;
  }
  return prod;
}

Dyadic product_eval(const VertexModel& model, unsigned n, const Gf2Vector& w) {
  return product_eval(t_spin_factors(model), n, w);
}

FactorizationReport product_factorization_check(std::span<const BooleanFunction> parts, unsigned cap) {
  FactorizationReport report;
  for (const auto& p : parts) report.total_dim += p.dim;
  if (report.total_dim > cap) fail(ErrorCode::CapExceeded, "product_factorization_check: total dimension exceeds cap");

  const std::size_t size = std::size_t{1} << report.total_dim;
  std::vector<FourierTable> part_transforms;
  std::vector<unsigned> offsets;
  unsigned offset = 0;
  for (const auto& p : parts) {
    part_transforms.push_back(fourier_full(p, cap));
    offsets.push_back(offset);
    offset += p.dim;
  }
  auto component = [&](std::size_t x, std::size_t i) {
    return (x >> offsets[i]) & ((std::size_t{1} << parts[i].dim) - 1);
  };

  BooleanFunction joint = BooleanFunction::zeros(report.total_dim);
  for (std::size_t x = 0; x < size; ++x) {
    Dyadic value(1);
    for (std::size_t i = 0; i < parts.size(); ++i) value *= parts[i](component(x, i));
    joint.values[x] = value;
  }
  const FourierTable full = fourier_full(joint, cap);
  for (std::size_t w = 0; w < size; ++w) {
    Dyadic expected(1);
    for (std::size_t i = 0; i < parts.size(); ++i) expected *= part_transforms[i](component(w, i));
    ++report.checked;
    if (expected != full(w)) ++report.mismatches;
  }
  report.passed = report.mismatches == 0;
  return report;
}

}  // namespace f2v
