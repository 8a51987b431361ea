#include <random>

#include <gtest/gtest.h>

#include "f2v/error.hpp"
#include "f2v/fourier.hpp"
#include "f2v/transform.hpp"

using namespace f2v;

namespace {

const VertexModel kRef = VertexModel::from_encoding("011001101");

BooleanFunction random_function(unsigned dim, std::mt19937_64& rng) {
  auto f = BooleanFunction::zeros(dim);
  for (auto& v : f.values) v = Dyadic(static_cast<std::int64_t>(rng() % 17) - 8, static_cast<unsigned>(rng() % 5));
  return f;
}

// Direct definition: F(w) = sum_x (-1)^{x.w} f(x).
Dyadic naive_transform(const BooleanFunction& f, std::size_t w) {
  Dyadic acc;
  for (std::size_t x = 0; x < f.values.size(); ++x) {
    if (std::popcount(x & w) % 2 == 0) acc += f(x);
    else acc -= f(x);
  }
  return acc;
}

BooleanFunction vertex_function(const VertexModel& m) {
  const auto d = vertex_distribution(m, false);
  auto f = BooleanFunction::zeros(3);
  // table index bit i is coordinate i; the distribution is indexed 4 x1 + 2 x2 + x3.
  for (std::size_t x = 0; x < 8; ++x) {
    const std::size_t dist_idx = ((x & 1U) << 2) | (x & 2U) | ((x >> 2) & 1U);
    f.values[x] = d.p[dist_idx].value();
  }
  return f;
}

}  // namespace

TEST(Fourier, PointMassAndUniform) {
  auto point = BooleanFunction::zeros(4);
  point.values[0] = Dyadic(1);
  for (const auto& v : fourier_full(point).values) EXPECT_EQ(v, Dyadic(1));

  auto uniform = BooleanFunction::zeros(4);
  for (auto& v : uniform.values) v = Dyadic(1, 4);
  const auto u = fourier_full(uniform);
  EXPECT_EQ(u(0), Dyadic(1));
  for (std::size_t w = 1; w < 16; ++w) EXPECT_EQ(u(w), Dyadic());
}

TEST(Fourier, VertexDistributionZeroesOffEigenvector) {
  const auto f = fourier_full(vertex_function(kRef));
  const auto e = Gf2Vector::from_string("111");
  for (std::size_t w = 0; w < 8; ++w) {
    const bool odd = vector_from_index(w, 3).dot(e);
    EXPECT_EQ(f(w).is_zero(), odd) << w;
  }
}

TEST(Fourier, MatchesNaiveDefinition) {
  std::mt19937_64 rng(11);
  for (unsigned m = 0; m <= 6; ++m) {
    const auto f = random_function(m, rng);
    const auto big = fourier_full(f);
    for (std::size_t w = 0; w < f.values.size(); ++w) EXPECT_EQ(big(w), naive_transform(f, w));
  }
}

TEST(Fourier, Parseval) {
  std::mt19937_64 rng(3);
  for (unsigned m = 1; m <= 8; ++m) {
    const auto f = random_function(m, rng);
    const auto big = fourier_full(f);
    Dyadic lhs, rhs;
    for (const auto& v : f.values) lhs += v * v;
    for (const auto& v : big.values) rhs += v * v;
    EXPECT_EQ(lhs, rhs.scaled_down(m));
  }
}

TEST(Fourier, CapExceeded) {
  EXPECT_THROW(fourier_full(BooleanFunction::zeros(5), 4), Error);
}

TEST(Fourier, SubspaceSumExamples) {
  const Dyadic one(1), zero;
  EXPECT_EQ(subspace_sum(std::vector<Dyadic>{one}, 0), one);
  EXPECT_EQ(subspace_sum(std::vector<Dyadic>{one, zero}, 1), Dyadic(1, 1));
  EXPECT_EQ(subspace_sum(std::vector<Dyadic>{one, zero, zero, zero}, 2), Dyadic(1, 2));
  EXPECT_THROW(subspace_sum(std::vector<Dyadic>{one, zero, zero}, 2), Error);
}

TEST(Fourier, SubspaceSumAgreesWithDirectSummation) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned m = 1 + rng() % 10;
    const unsigned k = static_cast<unsigned>(rng() % (std::min(4U, m) + 1));
    const auto f = random_function(m, rng);
    std::vector<Gf2Vector> gens;
    while (gens.size() < k) {
      gens.push_back(vector_from_index(1 + rng() % ((std::size_t{1} << m) - 1), m));
      if (rank(gens) != gens.size()) gens.pop_back();
    }
    Dyadic direct;
    for (std::size_t x = 0; x < f.values.size(); ++x) {
      bool orth = true;
      for (const auto& g : gens) orth = orth && !vector_from_index(x, m).dot(g);
      if (orth) direct += f(x);
    }
    const auto big = fourier_full(f);
    std::vector<Dyadic> on_k;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      Gf2Vector w(m);
      for (unsigned i = 0; i < k; ++i)
        if ((mask >> i) & 1U) w += gens[i];
      on_k.push_back(big(table_index(w)));
    }
    EXPECT_EQ(subspace_sum(on_k, k), direct);
    EXPECT_EQ(subspace_sum(std::vector<Dyadic>{big(0)}, 0), f.total());
  }
}

TEST(Fourier, ProductFactorization) {
  const BooleanFunction coin(1, {Dyadic(1, 1), Dyadic(1, 1)});
  const std::vector<BooleanFunction> two{coin, coin};
  const auto r = product_factorization_check(two);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.total_dim, 2U);

  EXPECT_TRUE(product_factorization_check(std::vector<BooleanFunction>{coin}).passed);

  const auto v = vertex_function(kRef);
  EXPECT_TRUE(product_factorization_check(std::vector<BooleanFunction>{v, v, v}).passed);
  EXPECT_THROW(product_factorization_check(std::vector<BooleanFunction>{v, v, v}, 8), Error);
}

TEST(Fourier, ProductEvalExamples) {
  for (unsigned n = 1; n <= 3; ++n) {
    const std::size_t size = face_size(n);
    EXPECT_EQ(product_eval(kRef, n, Gf2Vector(size)), Dyadic(1));
    EXPECT_EQ(product_eval(kRef, n, Gf2Vector::unit(size, ghost_index({0, 0}, n))), Dyadic());
    const std::uint32_t top = 1U << (n - 1);
    EXPECT_EQ(product_eval(kRef, n, Gf2Vector::unit(size, ghost_index({top, top}, n))), Dyadic(1));
  }
  const auto f = t_spin_factors(kRef);
  EXPECT_EQ(f.q1_a, Dyadic());
  EXPECT_EQ(f.q1_at, Dyadic(1));
}

TEST(Fourier, IndexConversions) {
  const auto v = vector_from_index(0b1011, 5);
  EXPECT_EQ(v.to_string(), "11010");
  EXPECT_EQ(table_index(v), 0b1011U);
}
