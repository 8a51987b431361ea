#include <gtest/gtest.h>

#include "f2v/error.hpp"
#include "f2v/fourier.hpp"
#include "f2v/transform.hpp"

using namespace f2v;

namespace {
const VertexModel kRef = VertexModel::from_encoding("011001101");
}

TEST(Transform, LevelOneIsKronOfFactors) {
  const auto t = build_transform(kRef, 1);
  EXPECT_EQ(t.g, kron(kRef.g(1, 3), kRef.g(1, 2)));
  EXPECT_EQ(t.g, Gf2Matrix::from_strings({"1111", "0101", "1100", "0100"}));
}

TEST(Transform, LevelTwoMatchesStepwiseProduct) {
  const auto t = build_transform(kRef, 2);
  const auto g13 = kRef.g(1, 3), g12 = kRef.g(1, 2);
  EXPECT_EQ(t.g, kron(kron(g13, g13), kron(g12, g12)));
  EXPECT_EQ(stepwise_transform(kRef, 2), t.g);
}

TEST(Transform, StepwiseAndInverseForTwelveClass) {
  for (const auto& a : enumerate_matrices(MatrixClass::TwelveClass)) {
    const VertexModel m(a);
    for (unsigned n = 1; n <= 4; ++n) {
      const auto t = build_transform(m, n);
      EXPECT_EQ(mat_mul(t.g, t.b), Gf2Matrix::identity(face_size(n)));
      if (n <= 3) EXPECT_EQ(stepwise_transform(m, n), t.g);
    }
  }
}

TEST(Transform, InvalidModelRejected) {
  EXPECT_THROW(build_transform(VertexModel::from_encoding("100010001"), 1), Error);
}

TEST(Transform, TransposeReversesGhostAddresses) {
  for (const auto& a : enumerate_matrices(MatrixClass::TwelveClass)) {
    const VertexModel m(a);
    for (unsigned n = 1; n <= 3; ++n) {
      const auto g = build_transform(m, n).g;
      const auto gt = build_transform(m.transposed(), n).g;
      const std::uint32_t top = (1U << n) - 1;
      for (std::size_t r = 0; r < face_size(n); ++r) {
        const auto addr = ghost_at(r, n);
        EXPECT_EQ(gt.row(ghost_index({top - addr.alpha, top - addr.beta}, n)), g.row(r));
      }
    }
  }
}

TEST(Transform, AddressClassExamples) {
  for (unsigned n = 1; n <= 6; ++n) EXPECT_EQ(address_class({0, 0}, n), AddressClass::BelongsToA);
  EXPECT_EQ(address_class({1, 1}, 1), AddressClass::BelongsToAT);
  EXPECT_EQ(address_class({1, 0}, 1), AddressClass::BelongsToA);
  int at = 0;
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b) at += address_class({a, b}, 2) == AddressClass::BelongsToAT;
  EXPECT_EQ(at, 6);
}

TEST(Transform, ClassCounts) {
  EXPECT_EQ(class_counts(1), (ClassCounts{3, 1}));
  EXPECT_EQ(class_counts(2), (ClassCounts{10, 6}));
  EXPECT_EQ(class_counts(3), (ClassCounts{36, 28}));
  for (unsigned n = 1; n <= 8; ++n) {
    const std::uint64_t big = std::uint64_t{1} << (2 * n - 1), small = std::uint64_t{1} << (n - 1);
    EXPECT_EQ(class_counts(n), (ClassCounts{big + small, big - small}));
  }
}

TEST(Transform, AddressClassInduction) {
  for (unsigned n = 1; n <= 4; ++n) {
    for (std::uint32_t a = 0; a < (1U << n); ++a) {
      for (std::uint32_t b = 0; b < (1U << n); ++b) {
        int children_at = 0;
        for (std::uint32_t ha = 0; ha < 2; ++ha)
          for (std::uint32_t hb = 0; hb < 2; ++hb)
            children_at += address_class({ha << n | a, hb << n | b}, n + 1) == AddressClass::BelongsToAT;
        EXPECT_EQ(children_at, address_class({a, b}, n) == AddressClass::BelongsToAT ? 3 : 1);
      }
    }
  }
}

TEST(Transform, IDualColumns) {
  EXPECT_EQ(i_dual_column(face1_edge(0, 0), 2), Gf2Vector::unit(16, 0));
  EXPECT_EQ(i_dual_column(face1_edge(0b11, 0b00), 2), Gf2Vector::unit(16, 0b1100));
  for (std::size_t i = 0; i < 16; ++i) EXPECT_EQ(i_dual_column(edge_at(i, 2), 2).weight(), 1U);
  EXPECT_THROW(i_dual_column(EdgeAddress{2, 0, 0}, 2), Error);
}

TEST(Transform, TDualOfReferenceAnchorIsGhostOrigin) {
  for (unsigned n = 1; n <= 4; ++n) {
    const auto t = build_transform(kRef, n);
    const std::uint32_t all = (1U << n) - 1;
    const auto w = t_dual(t, i_dual_column(face1_edge(all, 0), n));
    EXPECT_EQ(w, Gf2Vector::unit(face_size(n), ghost_index({0, 0}, n)));
    EXPECT_EQ(anchor_address(kRef, n), face1_edge(all, 0));
    EXPECT_TRUE(t_dual(t, Gf2Vector(face_size(n))).is_zero());
  }
}

TEST(Transform, AnchorTDualIsWeightOneForTwelveClass) {
  for (const auto& a : enumerate_matrices(MatrixClass::TwelveClass)) {
    const VertexModel m(a);
    for (unsigned n = 1; n <= 3; ++n) {
      const auto anchor = anchor_address(m, n);
      ASSERT_TRUE(anchor.has_value());
      const auto w = t_dual(build_transform(m, n), i_dual_column(*anchor, n));
      EXPECT_EQ(w, Gf2Vector::unit(face_size(n), 0)) << m.encoding();
    }
  }
}

TEST(Transform, TDualRoundTrip) {
  const auto t = build_transform(kRef, 2);
  for (std::size_t i = 0; i < 16; ++i) {
    const auto z = Gf2Vector::unit(16, i);
    EXPECT_EQ(col_action(t.b, t_dual(t, z)), z);
  }
  EXPECT_THROW(t_dual(t, Gf2Vector(4)), Error);
}

TEST(Transform, VBases) {
  const auto bases = v_bases_2x2x2(kRef);
  const auto& a = kRef.matrix();
  auto bit = [&](int i, int j) { return a.at(i - 1, j - 1); };
  // Fourth row of the axis-1 basis: (a31 a21, a31 m12, m13 a21, m13 m12).
  const auto& row4 = bases[0].row(3);
  EXPECT_EQ(row4.get(0), bit(3, 1) && bit(2, 1));
  EXPECT_EQ(row4.get(1), bit(3, 1) && kRef.minor(1, 2));
  EXPECT_EQ(row4.get(2), kRef.minor(1, 3) && bit(2, 1));
  EXPECT_EQ(row4.get(3), kRef.minor(1, 3) && kRef.minor(1, 2));
  for (const auto& b : bases) EXPECT_EQ(rank(b), 4U);
  const auto tb = v_bases_2x2x2(kRef.transposed());
  for (std::size_t r = 0; r < 4; ++r) EXPECT_EQ(tb[0].row(r), bases[0].row(3 - r));
}
