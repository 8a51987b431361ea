#pragma once

// Discrete Fourier (Walsh) transform of exact real functions on F2^m:
//   F(w) = sum_x f(x) (-1)^{x.w}
// Tables are indexed by the integer whose bit i is coordinate i.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "f2v/dyadic.hpp"
#include "f2v/gf2.hpp"
#include "f2v/model.hpp"

namespace f2v {

inline constexpr unsigned kDefaultFourierCap = 24;

struct BooleanFunction {
  unsigned dim = 0;
  std::vector<Dyadic> values;  // 2^dim entries, indexed by x

  BooleanFunction() = default;
  BooleanFunction(unsigned d, std::vector<Dyadic> v);
  static BooleanFunction zeros(unsigned d) { return BooleanFunction(d, std::vector<Dyadic>(std::size_t{1} << d)); }
  const Dyadic& operator()(std::size_t x) const { return values[x]; }
  Dyadic total() const;
};

struct FourierTable {
  unsigned dim = 0;
  std::vector<Dyadic> values;  // 2^dim entries, indexed by w
  const Dyadic& operator()(std::size_t w) const { return values[w]; }
};

std::size_t table_index(const Gf2Vector& v);
Gf2Vector vector_from_index(std::size_t index, std::size_t len);

FourierTable fourier_full(const BooleanFunction& f, unsigned cap = kDefaultFourierCap);

// (sum over the 2^k members of K of F) / 2^k, given the F-values on K.
Dyadic subspace_sum(std::span<const Dyadic> values_on_k, unsigned k);

// Two-point Fourier values Q(1) and Q'(1) of the first-coordinate marginals of
// A and A^T.
struct TSpinFactors {
  Dyadic q1_a;
  Dyadic q1_at;
};

TSpinFactors t_spin_factors(const VertexModel& model);

// Product over the set entries of w (ghost addresses) of Q(1) or Q'(1) by
// address class; the empty product is 1.
Dyadic product_eval(const TSpinFactors& factors, unsigned n, const Gf2Vector& w);
Dyadic product_eval(const VertexModel& model, unsigned n, const Gf2Vector& w);

struct FactorizationReport {
  bool passed = false;
  unsigned total_dim = 0;
  std::size_t checked = 0;
  std::size_t mismatches = 0;
};

// Forms the product of the parts on their direct sum (part 0 in the lowest
// bits), transforms it in full, and compares against the product of the parts'
// own transforms at every w.
FactorizationReport product_factorization_check(std::span<const BooleanFunction> parts,
                                                unsigned cap = kDefaultFourierCap);

}  // namespace f2v
