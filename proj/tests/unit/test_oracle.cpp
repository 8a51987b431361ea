#include <gtest/gtest.h>

#include "f2v/correlations.hpp"
#include "f2v/error.hpp"
#include "f2v/oracle.hpp"

using namespace f2v;

namespace {
const VertexModel kRef = VertexModel::from_encoding("011001101");
}

TEST(Oracle, PermittedSpaceExamples) {
  const auto s0 = permitted_space(kRef, 0);
  ASSERT_EQ(s0.dim(), 1U);
  EXPECT_EQ(s0.basis()[0].to_string(), "111");
  EXPECT_EQ(permitted_space(kRef, 1).dim(), 4U);
  EXPECT_THROW(permitted_space(VertexModel::from_encoding("100010001"), 1), Error);
}

TEST(Oracle, DimensionPredictedByAddressClasses) {
  for (const auto& a : enumerate_matrices(MatrixClass::TwelveClass)) {
    const VertexModel m(a);
    for (unsigned n = 1; n <= 3; ++n) EXPECT_EQ(permitted_space(m, n).dim(), predicted_permitted_dim(m, n));
  }
}

TEST(Oracle, ProbabilityExamples) {
  EXPECT_EQ(oracle_probability(kRef, {1, {}}), DyadicProbability::one_over_pow2(0));
  EXPECT_EQ(oracle_probability(kRef, {1, {face1_edge(1, 0)}}), DyadicProbability::one_over_pow2(1));
  const std::vector<EdgeAddress> square{face1_edge(0, 0), face1_edge(2, 0), face1_edge(0, 2), face1_edge(2, 2)};
  EXPECT_EQ(oracle_probability(kRef, {2, square}), DyadicProbability::one_over_pow2(3));
  EXPECT_THROW(oracle_probability(kRef, {2, {face1_edge(0, 0), face1_edge(0, 0)}}), Error);
}

TEST(Oracle, ShiftInvariant) {
  const CountingOracle oracle(kRef, 2);
  for (const auto& q : combinations(16, 3)) {
    std::vector<EdgeAddress> e, shifted;
    for (auto i : q) {
      const auto a = edge_at(i, 2);
      e.push_back(a);
      shifted.push_back(face1_edge((a.u + 1) & 3U, (a.v + 3) & 3U));
    }
    EXPECT_EQ(oracle.probability(e), oracle.probability(shifted));
  }
}

TEST(Oracle, CacheReturnsSharedInstance) {
  const auto a = cached_oracle(kRef, 2);
  const auto b = cached_oracle(kRef, 2);
  EXPECT_EQ(a.get(), b.get());
  EXPECT_NE(a.get(), cached_oracle(kRef, 1).get());
}

TEST(Oracle, EnumerationGroundTruth) {
  int checked = 0;
  for (auto cls : {MatrixClass::TwelveClass, MatrixClass::TwentySixClass}) {
    const auto list = enumerate_matrices(cls);
    for (std::size_t i = 0; i < list.size(); i += 4) {
      const auto r = enumerate_check(VertexModel(list[i]), 1);
      EXPECT_EQ(r.assignments, 4096U);
      EXPECT_GT(r.queries_checked, 0U);
      EXPECT_TRUE(r.passed()) << encode_matrix(list[i]);
      ++checked;
    }
  }
  EXPECT_GE(checked, 5);
  EXPECT_THROW(enumerate_check(kRef, 2), Error);
}

TEST(Oracle, TSpinIndependence) {
  for (auto cls : {MatrixClass::TwelveClass, MatrixClass::TwentySixClass}) {
    for (const auto& a : enumerate_matrices(cls)) {
      const auto r = t_spin_independence_check(VertexModel(a), 1);
      EXPECT_TRUE(r.independent) << encode_matrix(a);
    }
  }
  auto r = t_spin_independence_check(kRef, 1);
  EXPECT_EQ(r.permitted, 16U);
  // Moving mass between two cells keeps the total but breaks the product form.
  BooleanFunction perturbed = r.joint;
  std::size_t from = 0;
  while (perturbed.values[from].is_zero()) ++from;
  const Dyadic eps(1, 6);
  perturbed.values[from] -= eps;
  perturbed.values[from ^ 1U] += eps;
  EXPECT_FALSE(joint_factorizes(perturbed));
}

TEST(Oracle, DualTransport) {
  for (auto cls : {MatrixClass::TwelveClass, MatrixClass::TwentySixClass}) {
    for (const auto& a : enumerate_matrices(cls)) {
      const auto r = duals_check(VertexModel(a), 1);
      EXPECT_GT(r.checked, 0U);
      EXPECT_TRUE(r.passed()) << encode_matrix(a);
    }
  }
  EXPECT_TRUE(duals_check(kRef, 2).passed());
}
