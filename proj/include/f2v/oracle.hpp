#pragma once

// Ground truth by counting. Under cyclic boundary conditions each output edge
// is identified with the input edge on the same line, so a permitted
// configuration is an input assignment x with x * M = x for the block operator
// M. Permitted configurations form a subspace, and the probability that a set
// of spins is all zero is 2^{dim of the constrained subspace} / 2^{dim}.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "f2v/block.hpp"
#include "f2v/correlations.hpp"
#include "f2v/dyadic.hpp"
#include "f2v/fourier.hpp"
#include "f2v/gf2.hpp"
#include "f2v/model.hpp"

namespace f2v {

Subspace permitted_space(const VertexModel& model, unsigned n, unsigned max_n = kDefaultMaxLevel);

class CountingOracle {
 public:
  CountingOracle(const VertexModel& model, unsigned n, unsigned max_n = kDefaultMaxLevel);

  unsigned level() const noexcept { return n_; }
  const Subspace& space() const noexcept { return space_; }
  // Edges on any face; duplicates rejected.
  DyadicProbability probability(std::span<const EdgeAddress> edges) const;

 private:
  unsigned n_;
  Subspace space_;
  // coordinate_columns_[c] lists coordinate c across the basis vectors.
  std::vector<Gf2Vector> coordinate_columns_;
};

// Shared, lazily built oracle for (matrix, n); safe to call concurrently.
std::shared_ptr<const CountingOracle> cached_oracle(const VertexModel& model, unsigned n,
                                                    unsigned max_n = kDefaultMaxLevel);

DyadicProbability oracle_probability(const VertexModel& model, const CorrelationQuery& q);

// Dimension of the permitted space predicted by the direct-sum structure:
// every ghost address contributes dim E(A) or dim E(A^T) by its class.
std::size_t predicted_permitted_dim(const VertexModel& model, unsigned n);

struct EnumerationReport {
  std::size_t assignments = 0;
  std::size_t permitted = 0;
  std::size_t membership_mismatches = 0;
  std::size_t queries_checked = 0;
  std::size_t query_mismatches = 0;
  bool passed() const { return membership_mismatches == 0 && query_mismatches == 0; }
};

// Brute force over all 2^{3 * 4^n} inputs (n <= 1). Compares the set of fixed
// points with permitted_space and every face-1 query of up to four edges with
// oracle_probability.
EnumerationReport enumerate_check(const VertexModel& model, unsigned n);

// True iff the joint distribution equals the product of its one-coordinate
// marginals at every point.
bool joint_factorizes(const BooleanFunction& joint);

struct IndependenceReport {
  std::size_t permitted = 0;
  BooleanFunction joint;  // over face-1 t-spins, bit i = ghost index i
  bool independent = false;
};

// Tabulates the face-1 t-spins t = y B of every permitted configuration (y its
// face-1 i-spins) and tests factorisation.
IndependenceReport t_spin_independence_check(const VertexModel& model, unsigned n);

struct DualsReport {
  std::size_t checked = 0;
  std::size_t duals_mismatches = 0;    // F(G z) != H(z)
  std::size_t product_mismatches = 0;  // F(w) != product_eval(w)
  bool passed() const { return duals_mismatches == 0 && product_mismatches == 0; }
};

// Full-table check of the dual transport rule: with h the face-1 i-spin
// distribution and f(x) = h(x G), the transforms satisfy F(G z) = H(z), and F
// matches the per-address product form.
DualsReport duals_check(const VertexModel& model, unsigned n);

}  // namespace f2v
