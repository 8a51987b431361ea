#pragma once

// k-spin correlation functions for axis-1 edges on one face of a 2^n cube with
// cyclic boundary conditions: the probability that all listed i-spins are 0.
//
// The engine never enumerates configurations. Each listed edge contributes the
// t-dual column G z of its unit dual z; the probability is
//   (1 / 2^k) * sum over subsets S of the edges of F(sum_{j in S} w_j),
// and F of a t-dual column factorises over ghost addresses into Q(1) / Q'(1).

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "f2v/block.hpp"
#include "f2v/dyadic.hpp"
#include "f2v/fourier.hpp"
#include "f2v/model.hpp"
#include "f2v/transform.hpp"

namespace f2v {

// Queries with more than this many edges are computed but fall outside the
// range the closed-form predictor covers.
inline constexpr std::size_t kVerifiedMaxEdges = 4;
inline constexpr std::size_t kMaxQueryEdges = 24;

struct CorrelationQuery {
  unsigned n = 1;
  std::vector<EdgeAddress> edges;
};

// Throws DuplicateEdge or OutOfRange for bad edges; InvalidArgument for a wrong axis or too many edges.
void validate_query(const CorrelationQuery& q);

class CorrelationEngine {
 public:
  CorrelationEngine(const VertexModel& model, unsigned n, unsigned max_n = kDefaultMaxLevel);

  unsigned level() const noexcept { return n_; }
  const SpinTransform& transform() const noexcept { return transform_; }
  const TSpinFactors& factors() const noexcept { return factors_; }
  // t-dual column of the face-1 edge with the given index b2 b3.
  const Gf2Vector& dual(std::size_t face_index) const { return duals_.at(face_index); }

  DyadicProbability probability(std::span<const EdgeAddress> edges) const;
  // Same, with edges given by face-1 index. No validation beyond range.
  DyadicProbability probability_by_index(std::span<const std::size_t> indices) const;

 private:
  unsigned n_;
  SpinTransform transform_;
  TSpinFactors factors_;
  std::vector<Gf2Vector> duals_;
};

DyadicProbability k_spin_probability(const VertexModel& model, const CorrelationQuery& q);

// Four edges form the corners of an axis-aligned 2^{n-1} x 2^{n-1} square,
// coordinates taken mod 2^n.
bool is_half_period_square(std::span<const EdgeAddress> edges, unsigned n);

// 1/2^k for k <= 3; for k = 4, 1/8 on half-period squares and 1/16 otherwise.
DyadicProbability theorem_predictor(const CorrelationQuery& q);

// All k-subsets of {0..count-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t count, std::size_t k);

struct QuadrupleResult {
  std::array<std::size_t, 4> indices{};  // face-1 indices b2 b3
  bool square = false;
  DyadicProbability engine;
  DyadicProbability predicted;
  std::optional<DyadicProbability> oracle;
};

struct QuadrupleScanReport {
  std::string matrix;
  unsigned n = 0;
  bool exhaustive = true;
  std::size_t total = 0;
  std::size_t squares = 0;
  std::size_t predictor_mismatches = 0;
  std::size_t oracle_mismatches = 0;
  std::map<std::string, std::size_t> histogram;  // engine value -> count
  std::vector<QuadrupleResult> rows;             // all rows, or only mismatching ones
  bool passed() const { return predictor_mismatches == 0 && oracle_mismatches == 0; }
};

// Every 4-subset of face-1 edges of a half-period square, in canonical order.
std::vector<std::array<std::size_t, 4>> square_quadruples(unsigned n);
// All squares plus random non-square quadruples up to `count` in total, sorted.
std::vector<std::array<std::size_t, 4>> stratified_quadruples(unsigned n, std::size_t count, std::uint64_t seed);

struct ScanOptions {
  unsigned jobs = 1;
  bool keep_all_rows = false;
  // Optional independent probability source compared on every quadruple; it is
  // called concurrently when jobs > 1.
  std::function<DyadicProbability(std::span<const EdgeAddress>)> oracle;
};

QuadrupleScanReport scan_quadruples(const CorrelationEngine& engine, const std::string& matrix,
                                    std::span<const std::array<std::size_t, 4>> quadruples, const ScanOptions& options);
// Exhaustive over all C(4^n, 4) quadruples.
QuadrupleScanReport scan_quadruples(const VertexModel& model, unsigned n, const ScanOptions& options = {});

struct LemmaReport {
  std::size_t checked = 0;
  std::size_t premise_hits = 0;
  std::size_t counterexamples = 0;
  bool exhaustive = false;
  bool passed() const { return counterexamples == 0; }
};

// Tensor products of n columns (1 0)^T / (1 1)^T: whenever four of them sum
// to zero they pair up into two equal pairs. Exhaustive over ordered 4-tuples
// for n <= 3, otherwise `trials` random 4-tuples.
LemmaReport lemma_m_check(unsigned n, std::size_t trials = 100000, std::uint64_t seed = 1);

struct LemmaKReport {
  std::size_t admissible = 0;  // (chi2, chi3) pairs satisfying the premise, excluding xi
  std::size_t off_axis_failures = 0;
  std::size_t a_unity_failures = 0;
  bool passed() const { return off_axis_failures == 0 && a_unity_failures == 0; }
};

// For every face-1 edge (chi2, chi3) with chi2 != s2 and chi3 != s3, where
// (s2, s3) is the anchor address, the t-dual has a unity with alpha != 0 and
// beta != 0; unless (chi2, chi3) is the anchor with its top bits flipped, one
// such unity also has alpha + beta < 2^n.
LemmaKReport lemma_k_check(const VertexModel& model, unsigned n);

}  // namespace f2v
