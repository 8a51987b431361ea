#include "f2v/block.hpp"

#include <array>

#include "f2v/error.hpp"
#include "f2v/transform.hpp"

namespace f2v {

namespace {

using Coord = std::array<std::uint32_t, 3>;

// Face-local (u, v) for an edge on the line through x along `axis` (0-based).
std::size_t line_index(int axis0, const Coord& x, unsigned n) {
  const std::uint32_t u = axis0 == 0 ? x[1] : x[0];
  const std::uint32_t v = axis0 == 2 ? x[1] : x[2];
  return static_cast<std::size_t>(axis0) * face_size(n) + (static_cast<std::size_t>(u) << n) + v;
}

std::size_t vertex_index(const Coord& x, unsigned n) {
  return ((static_cast<std::size_t>(x[0]) << n | x[1]) << n) | x[2];
}

void check_level(unsigned n, unsigned max_n) {
  if (n > max_n) fail(ErrorCode::CapExceeded, "level " + std::to_string(n) + " exceeds the cap " + std::to_string(max_n));
}

// Calls fn(x) for every vertex in lexicographic order, which is a topological
// order because all edges increase one coordinate.
template <class Fn>
void for_each_vertex(unsigned n, Fn&& fn) {
  const std::uint32_t side = 1U << n;
  Coord x{};
  for (x[0] = 0; x[0] < side; ++x[0])
    for (x[1] = 0; x[1] < side; ++x[1])
      for (x[2] = 0; x[2] < side; ++x[2]) fn(x);
}

}  // namespace

std::size_t face_size(unsigned n) { return std::size_t{1} << (2 * n); }

std::size_t input_index(const EdgeAddress& addr, unsigned n) {
  if (addr.axis < 1 || addr.axis > 3) fail(ErrorCode::InvalidArgument, "edge axis must be 1, 2 or 3");
  const std::uint32_t side = 1U << n;
  if (addr.u >= side || addr.v >= side) fail(ErrorCode::OutOfRange, "edge coordinate must be below 2^n");
  return static_cast<std::size_t>(addr.axis - 1) * face_size(n) + (static_cast<std::size_t>(addr.u) << n) + addr.v;
}

EdgeAddress edge_at(std::size_t index, unsigned n) {
  const std::size_t fs = face_size(n);
  if (index >= 3 * fs) fail(ErrorCode::OutOfRange, "edge index out of range");
  const std::size_t local = index % fs;
  return EdgeAddress{static_cast<int>(index / fs) + 1, static_cast<std::uint32_t>(local >> n),
                     static_cast<std::uint32_t>(local & ((std::size_t{1} << n) - 1))};
}

BlockOperator build_block(const VertexModel& model, unsigned n, bool transposed, unsigned max_n) {
  model.require_valid();
  check_level(n, max_n);
  const Gf2Matrix a = transposed ? model.matrix().transpose() : model.matrix();
  const std::size_t dim = 3 * face_size(n);
  const std::uint32_t last = (1U << n) - 1;

  // outgoing[v][k]: linear form (over all inputs) of the spin leaving vertex v along axis k.
  std::vector<std::array<Gf2Vector, 3>> outgoing(std::size_t{1} << (3 * n));
  // Row r of `exits` is the form of output r, i.e. column r of the operator.
  std::vector<Gf2Vector> exits(dim);

  for_each_vertex(n, [&](const Coord& x) {
    std::array<Gf2Vector, 3> in;
    for (int k = 0; k < 3; ++k) {
      if (x[k] == 0) {
        in[k] = Gf2Vector::unit(dim, line_index(k, x, n));
      } else {
        Coord prev = x;
        --prev[k];
        in[k] = outgoing[vertex_index(prev, n)][k];
      }
    }
    auto& out = outgoing[vertex_index(x, n)];
    for (int k = 0; k < 3; ++k) {
      out[k] = Gf2Vector(dim);
      for (int i = 0; i < 3; ++i) {
        if (a.at(i, k)) out[k] += in[i];
      }
      if (x[k] == last) exits[line_index(k, x, n)] = out[k];
    }
    // Inputs are consumed exactly once; drop the predecessors' forms early.
    for (int k = 0; k < 3; ++k) {
      if (x[k] == 0) continue;
      Coord prev = x;
      --prev[k];
      outgoing[vertex_index(prev, n)][k] = Gf2Vector();
    }
  });

  return BlockOperator{n, transposed, Gf2Matrix::from_rows(std::move(exits), dim).transpose()};
}

Gf2Vector propagate(const VertexModel& model, unsigned n, bool transposed, const Gf2Vector& inputs) {
  const Gf2Matrix a = transposed ? model.matrix().transpose() : model.matrix();
  const std::size_t dim = 3 * face_size(n);
  if (inputs.size() != dim) fail(ErrorCode::Shape, "input assignment has the wrong length");
  const std::uint32_t last = (1U << n) - 1;
  std::vector<std::array<bool, 3>> spin(std::size_t{1} << (3 * n));
  Gf2Vector outputs(dim);
  for_each_vertex(n, [&](const Coord& x) {
    std::array<bool, 3> in{};
    for (int k = 0; k < 3; ++k) {
      if (x[k] == 0) {
        in[k] = inputs.get(line_index(k, x, n));
      } else {
        Coord prev = x;
        --prev[k];
        in[k] = spin[vertex_index(prev, n)][k];
      }
    }
    auto& out = spin[vertex_index(x, n)];
    for (int k = 0; k < 3; ++k) {
      bool s = false;
      for (int i = 0; i < 3; ++i) s ^= in[i] && a.at(i, k);
      out[k] = s;
      if (x[k] == last && s) outputs.set(line_index(k, x, n));
    }
  });
  return outputs;
}

DirectSumReport verify_direct_sum(const VertexModel& model) {
  model.require_valid();
  DirectSumReport report;
  report.matrix = model.encoding();

  const Gf2Matrix op = build_block(model, 1).m;
  const auto bases = v_bases_2x2x2(model);
  // Row position within each face basis of e_1..e_4, undoing the written orders
  // (e1 e2 e3 e4), (e2 e1 e3 e4), (e3 e1 e2 e4).
  constexpr std::array<std::array<std::size_t, 4>, 3> position_of_e{{{0, 1, 2, 3}, {1, 0, 2, 3}, {1, 2, 0, 3}}};

  Gf2Matrix t(12, 12);
  for (std::size_t face = 0; face < 3; ++face) {
    for (std::size_t j = 0; j < 4; ++j) {
      const Gf2Vector& row = bases[face].row(position_of_e[face][j]);
      for (std::size_t c : row.support()) t.set(4 * face + j, 4 * face + c);
    }
  }
  Gf2Matrix t_inv;
  try {
    t_inv = inverse(t);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Singular) throw;
    fail(ErrorCode::Internal, "t-basis change is singular for a valid model " + model.encoding());
  }
  const Gf2Matrix in_t_basis = mat_mul(mat_mul(t, op), t_inv);

  // W_j coordinate (j, face) sits at 3 j + face.
  std::array<std::size_t, 12> order{};
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t face = 0; face < 3; ++face) order[3 * j + face] = 4 * face + j;
  report.conjugated = in_t_basis.permuted(order, order);

  Gf2Matrix expected(12, 12);
  for (std::size_t j = 0; j < 4; ++j) {
    const Gf2Matrix block = j < 3 ? model.matrix() : model.matrix().transpose();
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) expected.set(3 * j + r, 3 * j + c, block.at(r, c));
  }
  for (std::size_t r = 0; r < 12; ++r) {
    for (std::size_t c = 0; c < 12; ++c) {
      if (expected.at(r, c) != report.conjugated.at(r, c)) {
        report.mismatches.push_back({r, c, expected.at(r, c), report.conjugated.at(r, c)});
      }
    }
  }
  report.passed = report.mismatches.empty();
  return report;
}

}  // namespace f2v
