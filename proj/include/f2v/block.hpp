#pragma once

// Exact F2-linear operator of a 2^n x 2^n x 2^n cube of identical vertices.
//
// Vertices sit at (x1, x2, x3) in [0, 2^n)^3 and every edge points in the
// positive axis direction. A vertex takes the row (in_1, in_2, in_3) of its
// incoming spins, position k holding the spin on the axis-k edge, and emits
// (in_1, in_2, in_3) * A on its outgoing edges.
//
// Face coordinates. An input (or output) edge along axis i is identified by the
// pair (u, v) of its coordinates along the two other axes j < k:
//   axis 1: (u, v) = (x2, x3)
//   axis 2: (u, v) = (x1, x3)
//   axis 3: (u, v) = (x1, x2)
// and its index within the face is u * 2^n + v, i.e. the 2n-bit concatenation
// of u and v. Faces are laid out axis 1, axis 2, axis 3, each of size 4^n.
// Input and output edges on the same line share an index.

#include <cstdint>
#include <string>
#include <vector>

#include "f2v/gf2.hpp"
#include "f2v/model.hpp"

namespace f2v {

inline constexpr unsigned kDefaultMaxLevel = 5;

struct EdgeAddress {
  int axis = 1;
  std::uint32_t u = 0;
  std::uint32_t v = 0;

  friend bool operator==(const EdgeAddress&, const EdgeAddress&) = default;
  friend auto operator<=>(const EdgeAddress&, const EdgeAddress&) = default;
};

inline EdgeAddress face1_edge(std::uint32_t b2, std::uint32_t b3) { return EdgeAddress{1, b2, b3}; }

std::size_t face_size(unsigned n);
std::size_t input_index(const EdgeAddress& addr, unsigned n);
EdgeAddress edge_at(std::size_t index, unsigned n);

struct BlockOperator {
  unsigned n = 0;
  bool transposed = false;
  // Rows index inputs, columns index outputs: x_out = x_in * m.
  Gf2Matrix m;
};

// n = 0 gives the single vertex matrix (or its transpose).
BlockOperator build_block(const VertexModel& model, unsigned n, bool transposed = false,
                          unsigned max_n = kDefaultMaxLevel);

// Pushes one input assignment through the cube vertex by vertex, with no
// symbolic forms. Used as an independent check on build_block.
Gf2Vector propagate(const VertexModel& model, unsigned n, bool transposed, const Gf2Vector& inputs);

struct EntryMismatch {
  std::size_t row = 0;
  std::size_t col = 0;
  bool expected = false;
  bool actual = false;
};

struct DirectSumReport {
  std::string matrix;
  bool passed = false;
  // The 12x12 operator in the t-bases, rows and columns grouped as W1..W4.
  Gf2Matrix conjugated;
  std::vector<EntryMismatch> mismatches;
};

// Checks that the 2x2x2 block, written in the t-bases of the three faces and
// regrouped by basis index j into W_j = span(e_j^(1), e_j^(2), e_j^(3)), is
// A + A + A + A^T block diagonal.
DirectSumReport verify_direct_sum(const VertexModel& model);

}  // namespace f2v
