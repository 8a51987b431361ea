#include <random>

#include <gtest/gtest.h>

#include "f2v/block.hpp"
#include "f2v/error.hpp"
#include "f2v/oracle.hpp"

using namespace f2v;

namespace {
const VertexModel kRef = VertexModel::from_encoding("011001101");
}

TEST(Block, LevelZeroIsTheVertex) {
  EXPECT_EQ(build_block(kRef, 0).m, kRef.matrix());
  EXPECT_EQ(build_block(kRef, 0, true).m, kRef.matrix().transpose());
}

TEST(Block, InvalidModelRejected) {
  EXPECT_THROW(build_block(VertexModel::from_encoding("100010001"), 1), Error);
}

TEST(Block, LevelCap) {
  EXPECT_THROW(build_block(kRef, 6), Error);
}

TEST(Block, FullRank) {
  for (unsigned n = 0; n <= 3; ++n) EXPECT_EQ(rank(build_block(kRef, n).m), 3 * face_size(n)) << n;
}

TEST(Block, InputIndexExamples) {
  EXPECT_EQ(input_index(face1_edge(0, 0), 3), 0U);
  EXPECT_EQ(input_index(face1_edge(0b11, 0b00), 2), 12U);
  EXPECT_EQ(input_index(EdgeAddress{2, 0, 0}, 1), 4U);
  EXPECT_EQ(input_index(EdgeAddress{3, 1, 1}, 1), 11U);
  EXPECT_THROW(input_index(face1_edge(4, 0), 2), Error);
  EXPECT_THROW(input_index(EdgeAddress{4, 0, 0}, 2), Error);
  for (std::size_t i = 0; i < 3 * face_size(2); ++i) EXPECT_EQ(input_index(edge_at(i, 2), 2), i);
}

TEST(Block, SymbolicMatchesDirectPropagation) {
  std::mt19937_64 rng(5);
  for (unsigned n = 1; n <= 2; ++n) {
    for (bool tr : {false, true}) {
      const auto op = build_block(kRef, n, tr);
      const std::size_t dim = 3 * face_size(n);
      for (int trial = 0; trial < 50; ++trial) {
        Gf2Vector x(dim);
        for (std::size_t i = 0; i < dim; ++i) x.set(i, rng() & 1U);
        EXPECT_EQ(row_action(x, op.m), propagate(kRef, n, tr, x));
      }
    }
  }
}

TEST(Block, ExhaustiveAgreementAtLevelOne) {
  const auto op = build_block(kRef, 1);
  for (std::size_t x = 0; x < (std::size_t{1} << 12); ++x) {
    Gf2Vector v(12);
    for (std::size_t i = 0; i < 12; ++i) v.set(i, (x >> i) & 1U);
    ASSERT_EQ(row_action(v, op.m), propagate(kRef, 1, false, v));
  }
}

TEST(Block, DirectSumForEveryValidMatrix) {
  EXPECT_TRUE(verify_direct_sum(kRef).passed);
  for (const auto& a : enumerate_matrices()) {
    const VertexModel m(a);
    if (!m.valid()) {
      EXPECT_THROW(verify_direct_sum(m), Error);
      continue;
    }
    const auto r = verify_direct_sum(m);
    EXPECT_TRUE(r.passed) << m.encoding();
    EXPECT_TRUE(r.mismatches.empty());
  }
}

TEST(Block, TwelveClassHasFixedPoints) {
  for (const auto& a : enumerate_matrices(MatrixClass::TwelveClass))
    for (unsigned n = 0; n <= 2; ++n) EXPECT_GT(permitted_space(VertexModel(a), n).dim(), 0U);
}
