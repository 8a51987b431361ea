#pragma once

// A single vertex of the eight-vertex model: the 3x3 matrix A over F2 that maps
// the three input spins (axes 1, 2, 3 in row positions 0, 1, 2) to the three
// output spins by right action, together with everything derived from it.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "f2v/dyadic.hpp"
#include "f2v/gf2.hpp"

namespace f2v {

// Nine characters '0'/'1', row-major a11 a12 a13 a21 ... a33. The matrix code is
// the same string read as a 9-bit binary number (a11 most significant).
Gf2Matrix parse_matrix(std::string_view encoding);
std::string encode_matrix(const Gf2Matrix& a);
Gf2Matrix matrix_from_code(unsigned code);
unsigned matrix_code(const Gf2Matrix& a);

class VertexModel {
 public:
  explicit VertexModel(Gf2Matrix a);
  static VertexModel from_encoding(std::string_view encoding) { return VertexModel(parse_matrix(encoding)); }

  const Gf2Matrix& matrix() const noexcept { return a_; }
  std::string encoding() const { return encode_matrix(a_); }

  // Axes and matrix indices are 1-based here, matching how the matrix entries
  // are conventionally named.
  bool entry(int i, int j) const;
  // Determinant of A with row j and column k removed. Over F2 cofactor signs vanish.
  bool minor(int j, int k) const;
  // a12 a23 a31 + a13 a32 a21. The model is valid iff this is nonzero.
  bool delta() const noexcept { return delta_; }
  bool valid() const noexcept { return delta_; }
  void require_valid() const;

  // ((a_ij, m_ji), (a_ji, m_ij)) for i != j.
  Gf2Matrix g(int i, int j) const;
  // Inverse of g(i, j); throws on an invalid model.
  Gf2Matrix b(int i, int j) const;

  // The same construction applied to the transpose of A.
  VertexModel transposed() const { return VertexModel(a_.transpose()); }

 private:
  Gf2Matrix a_;
  std::array<std::array<bool, 3>, 3> minors_{};
  bool delta_ = false;
};

struct SpectralData {
  Subspace e_space;    // {x : x A = x}
  Subspace e_space_t;  // {x : x A^T = x}
  std::size_t d() const { return e_space.dim(); }
  std::size_t d_t() const { return e_space_t.dim(); }
};

SpectralData spectral_data(const VertexModel& m);

// Uniform distribution of a single vertex's input row over the eigenvalue-1
// eigenspace, plus the marginal of the first coordinate and its two-point
// Fourier transform.
struct VertexDistribution {
  // Indexed by 4*x1 + 2*x2 + x3.
  std::array<DyadicProbability, 8> p;
  DyadicProbability q0, q1;
  Dyadic fourier0, fourier1;  // q0 + q1 and q0 - q1
};

VertexDistribution vertex_distribution(const VertexModel& m, bool transposed);

enum class MatrixClass { TwelveClass, TwentySixClass, Other, DeltaZero };

std::string_view class_name(MatrixClass c);
std::optional<MatrixClass> parse_class(std::string_view name);

MatrixClass classify(const Gf2Matrix& a);
// H A H, H swapping the second and third coordinates.
Gf2Matrix conjugate_by_h(const Gf2Matrix& a);
// All 512 matrices (or those in one class), ordered by matrix code.
std::vector<Gf2Matrix> enumerate_matrices(std::optional<MatrixClass> filter = std::nullopt);

}  // namespace f2v
