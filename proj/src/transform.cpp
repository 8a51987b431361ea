#include "f2v/transform.hpp"

#include "f2v/error.hpp"

namespace f2v {

namespace {

std::optional<unsigned> unit_column(const Gf2Matrix& m2) {
  for (unsigned c = 0; c < 2; ++c) {
    if (m2.at(0, c) && !m2.at(1, c)) return c;
  }
  return std::nullopt;
}

Gf2Matrix padded_factor(const Gf2Matrix& factor, unsigned n, unsigned k) {
  const Gf2Matrix id = Gf2Matrix::identity(2);
  return kron(kron(kron_power(id, n - k), factor), kron_power(id, k - 1));
}

}  // namespace

std::size_t ghost_index(const GhostAddress& addr, unsigned n) {
  const std::uint32_t side = 1U << n;
  if (addr.alpha >= side || addr.beta >= side) fail(ErrorCode::OutOfRange, "ghost coordinate must be below 2^n");
  return (static_cast<std::size_t>(addr.alpha) << n) | addr.beta;
}

GhostAddress ghost_at(std::size_t index, unsigned n) {
  if (index >= face_size(n)) fail(ErrorCode::OutOfRange, "ghost index out of range");
  return GhostAddress{static_cast<std::uint32_t>(index >> n), static_cast<std::uint32_t>(index & ((std::size_t{1} << n) - 1))};
}

AddressClass address_class(const GhostAddress& addr, unsigned n) {
  const std::uint64_t side = std::uint64_t{1} << n;
  if (addr.alpha >= side || addr.beta >= side) fail(ErrorCode::OutOfRange, "ghost coordinate must be below 2^n");
  return std::uint64_t{addr.alpha} + addr.beta >= side ? AddressClass::BelongsToAT : AddressClass::BelongsToA;
}

ClassCounts class_counts(unsigned n) {
  if (n < 1 || n > 15) fail(ErrorCode::OutOfRange, "class_counts supports 1 <= n <= 15");
  ClassCounts counts;
  const std::uint32_t side = 1U << n;
  for (std::uint32_t alpha = 0; alpha < side; ++alpha) {
    for (std::uint32_t beta = 0; beta < side; ++beta) {
      if (address_class({alpha, beta}, n) == AddressClass::BelongsToA) {
        ++counts.count_a;
      } else {
        ++counts.count_at;
      }
    }
  }
  return counts;
}

SpinTransform build_transform(const VertexModel& model, unsigned n, unsigned max_n) {
  model.require_valid();
  if (n < 1) fail(ErrorCode::InvalidArgument, "transform level must be at least 1");
  if (n > max_n) fail(ErrorCode::CapExceeded, "transform level exceeds the cap");
  SpinTransform t;
  t.n = n;
  t.g = kron(kron_power(model.g(1, 3), n), kron_power(model.g(1, 2), n));
  t.b = kron(kron_power(model.b(1, 3), n), kron_power(model.b(1, 2), n));
  return t;
}

Gf2Matrix stepwise_transform(const VertexModel& model, unsigned n) {
  model.require_valid();
  if (n < 1) fail(ErrorCode::InvalidArgument, "transform level must be at least 1");
  Gf2Matrix acc = Gf2Matrix::identity(face_size(n));
  for (unsigned k = 1; k <= n; ++k) {
    const Gf2Matrix step = kron(padded_factor(model.g(1, 3), n, k), padded_factor(model.g(1, 2), n, k));
    acc = mat_mul(step, acc);
  }
  return acc;
}

Gf2Vector i_dual_column(const EdgeAddress& addr, unsigned n) {
  if (addr.axis != 1) fail(ErrorCode::InvalidArgument, "dual columns are defined for axis-1 edges only");
  return Gf2Vector::unit(face_size(n), input_index(addr, n));
}

Gf2Vector t_dual(const SpinTransform& t, const Gf2Vector& z) { return col_action(t.g, z); }

std::array<Gf2Matrix, 3> v_bases_2x2x2(const VertexModel& model) {
  model.require_valid();
  return {kron(model.g(1, 3), model.g(1, 2)), kron(model.g(2, 3), model.g(2, 1)), kron(model.g(3, 2), model.g(3, 1))};
}

std::optional<EdgeAddress> anchor_address(const VertexModel& model, unsigned n) {
  const auto c13 = unit_column(model.g(1, 3));
  const auto c12 = unit_column(model.g(1, 2));
  if (!c13 || !c12) return std::nullopt;
  const std::uint32_t all = (1U << n) - 1;
  return face1_edge(*c13 ? all : 0, *c12 ? all : 0);
}

}  // namespace f2v
