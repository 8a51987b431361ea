#pragma once

// The self-similarity spin transform on the axis-1 face of a 2^n cube.
//
// G = G13^{(x)n} (x) G12^{(x)n}. Its rows are the t-basis vectors written in
// i-spin coordinates, so a row x of t-spins corresponds to the row x G of
// i-spins. Rows are numbered by the ghost address (alpha, beta) as the 2n-bit
// concatenation alpha beta; the most significant bit of alpha picks the row of
// the leftmost G13 factor. Columns are numbered by the i-spin address (b2, b3)
// in the same way, which matches input_index() on face 1.

#include <array>
#include <cstdint>
#include <optional>

#include "f2v/block.hpp"
#include "f2v/gf2.hpp"
#include "f2v/model.hpp"

namespace f2v {

struct GhostAddress {
  std::uint32_t alpha = 0;
  std::uint32_t beta = 0;
  friend bool operator==(const GhostAddress&, const GhostAddress&) = default;
};

std::size_t ghost_index(const GhostAddress& addr, unsigned n);
GhostAddress ghost_at(std::size_t index, unsigned n);

enum class AddressClass { BelongsToA, BelongsToAT };

// BelongsToAT iff alpha + beta >= 2^n.
AddressClass address_class(const GhostAddress& addr, unsigned n);

struct ClassCounts {
  std::uint64_t count_a = 0;
  std::uint64_t count_at = 0;
  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

// Counted address by address, not from the closed form.
ClassCounts class_counts(unsigned n);

struct SpinTransform {
  unsigned n = 0;
  Gf2Matrix g;  // rows: t-basis vectors
  Gf2Matrix b;  // g^{-1} = B13^{(x)n} (x) B12^{(x)n}
};

SpinTransform build_transform(const VertexModel& model, unsigned n, unsigned max_n = kDefaultMaxLevel);

// G assembled as the product of the n per-step factors
// (1^{(x)n-k} (x) G13 (x) 1^{(x)k-1}) (x) (1^{(x)n-k} (x) G12 (x) 1^{(x)k-1}), k = 1..n,
// each multiplied onto the running product from the left.
Gf2Matrix stepwise_transform(const VertexModel& model, unsigned n);

// Dual column of one axis-1 i-spin: a unit column at index b2 b3.
Gf2Vector i_dual_column(const EdgeAddress& addr, unsigned n);

// t-spin dual column G z of an i-spin dual column z.
Gf2Vector t_dual(const SpinTransform& t, const Gf2Vector& z);

// Face bases of the 2x2x2 block exactly as written:
//   face 1 rows (e1 e2 e3 e4) = G13 (x) G12
//   face 2 rows (e2 e1 e3 e4) = G23 (x) G21
//   face 3 rows (e3 e1 e2 e4) = G32 (x) G31
std::array<Gf2Matrix, 3> v_bases_2x2x2(const VertexModel& model);

// The face-1 i-spin whose t-dual is the single unit at ghost address (0, 0):
// each bit of b2 (b3) is the index of the (1 0)^T column of G13 (G12). Exists
// iff both matrices have such a column.
std::optional<EdgeAddress> anchor_address(const VertexModel& model, unsigned n);

}  // namespace f2v
