#pragma once

// Named verification suites and class scans. Reports are JSON documents with a
// stable key order and no timestamps, so identical inputs give identical bytes.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "f2v/block.hpp"
#include "f2v/model.hpp"

namespace f2v {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kReferenceMatrix = "011001101";

struct VerifyOptions {
  std::optional<unsigned> n_min;
  std::optional<unsigned> n_max;
  unsigned jobs = 1;
  std::uint64_t seed = 20240531;
  std::string matrix{kReferenceMatrix};
  unsigned max_n = kDefaultMaxLevel;
};

std::vector<std::string> suite_names();

// Throws ErrorCode::InvalidArgument for an unknown suite. The report's
// "passed" field is true iff every check passed.
Json run_suite(std::string_view suite, const VerifyOptions& options);

Json probability_json(const DyadicProbability& p);

// Correlation tables for every matrix of a class (all k-subsets of face-1
// edges, k = 1..max_k), with class-level consistency checks.
Json scan_class(MatrixClass cls, unsigned n, unsigned jobs, unsigned max_k = 4, unsigned max_n = kDefaultMaxLevel);

// Everything derived from one vertex matrix.
Json analyze_matrix(const VertexModel& model);
// The transform matrices G and B plus the ghost-address classes at level n.
Json transform_report(const VertexModel& model, unsigned n, unsigned max_n = kDefaultMaxLevel);

}  // namespace f2v
