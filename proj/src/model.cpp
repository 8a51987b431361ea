#include "f2v/model.hpp"

#include "f2v/error.hpp"

namespace f2v {

namespace {

void check_axis_pair(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3 || i == j) fail(ErrorCode::InvalidArgument, "axis pair must be distinct values in 1..3");
}

// Eigenvalue-1 row eigenvectors counted as "exactly one" iff the space is a line.
std::optional<Gf2Vector> unique_fixed_vector(const Gf2Matrix& a) {
  const Subspace s = fixed_space(a);
  if (s.dim() != 1) return std::nullopt;
  return s.basis().front();
}

}  // namespace

Gf2Matrix parse_matrix(std::string_view encoding) {
  if (encoding.size() != 9) fail(ErrorCode::Parse, "matrix encoding must have exactly 9 characters");
  Gf2Matrix a(3, 3);
  for (std::size_t k = 0; k < 9; ++k) {
    const char c = encoding[k];
    if (c != '0' && c != '1') fail(ErrorCode::Parse, "matrix encoding may only contain '0' and '1'");
    a.set(k / 3, k % 3, c == '1');
  }
  return a;
}

std::string encode_matrix(const Gf2Matrix& a) {
  if (a.rows() != 3 || a.cols() != 3) fail(ErrorCode::Shape, "vertex matrix must be 3x3");
  std::string s(9, '0');
  for (std::size_t k = 0; k < 9; ++k) {
    if (a.at(k / 3, k % 3)) s[k] = '1';
  }
  return s;
}

Gf2Matrix matrix_from_code(unsigned code) {
  if (code >= 512) fail(ErrorCode::OutOfRange, "matrix code must be below 512");
  Gf2Matrix a(3, 3);
  for (std::size_t k = 0; k < 9; ++k) a.set(k / 3, k % 3, (code >> (8 - k)) & 1U);
  return a;
}

unsigned matrix_code(const Gf2Matrix& a) {
  const std::string s = encode_matrix(a);
  unsigned code = 0;
  for (char c : s) code = (code << 1) | (c == '1' ? 1U : 0U);
  return code;
}

VertexModel::VertexModel(Gf2Matrix a) : a_(std::move(a)) {
  if (a_.rows() != 3 || a_.cols() != 3) fail(ErrorCode::Shape, "vertex matrix must be 3x3");
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      const int r0 = j == 0 ? 1 : 0, r1 = j == 2 ? 1 : 2;
      const int c0 = k == 0 ? 1 : 0, c1 = k == 2 ? 1 : 2;
      minors_[j][k] = (a_.at(r0, c0) && a_.at(r1, c1)) != (a_.at(r0, c1) && a_.at(r1, c0));
    }
  }
  delta_ = (entry(1, 2) && entry(2, 3) && entry(3, 1)) != (entry(1, 3) && entry(3, 2) && entry(2, 1));
}

bool VertexModel::entry(int i, int j) const { return a_.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)); }

bool VertexModel::minor(int j, int k) const { return minors_[j - 1][k - 1]; }

void VertexModel::require_valid() const {
  if (!delta_) fail(ErrorCode::InvalidModel, "model " + encoding() + " violates the general position condition (delta = 0)");
}

Gf2Matrix VertexModel::g(int i, int j) const {
  check_axis_pair(i, j);
  Gf2Matrix out(2, 2);
  out.set(0, 0, entry(i, j));
  out.set(0, 1, minor(j, i));
  out.set(1, 0, entry(j, i));
  out.set(1, 1, minor(i, j));
  return out;
}

Gf2Matrix VertexModel::b(int i, int j) const {
  require_valid();
  // (1/delta) ((m_ij, m_ji), (a_ji, a_ij)), and delta = 1 over F2.
  check_axis_pair(i, j);
  Gf2Matrix out(2, 2);
  out.set(0, 0, minor(i, j));
  out.set(0, 1, minor(j, i));
  out.set(1, 0, entry(j, i));
  out.set(1, 1, entry(i, j));
  return out;
}

SpectralData spectral_data(const VertexModel& m) {
  return SpectralData{fixed_space(m.matrix()), fixed_space(m.matrix().transpose())};
}

VertexDistribution vertex_distribution(const VertexModel& m, bool transposed) {
  m.require_valid();
  const Subspace e = fixed_space(transposed ? m.matrix().transpose() : m.matrix());
  const DyadicProbability mass = DyadicProbability::one_over_pow2(static_cast<unsigned>(e.dim()));
  VertexDistribution out;
  Dyadic q0, q1;
  for (unsigned idx = 0; idx < 8; ++idx) {
    Gf2Vector x(3);
    x.set(0, (idx >> 2) & 1U);
    x.set(1, (idx >> 1) & 1U);
    x.set(2, idx & 1U);
    if (!e.contains(x)) continue;
    out.p[idx] = mass;
    (x.get(0) ? q1 : q0) += mass.value();
  }
  out.q0 = DyadicProbability(q0);
  out.q1 = DyadicProbability(q1);
  out.fourier0 = q0 + q1;
  out.fourier1 = q0 - q1;
  return out;
}

std::string_view class_name(MatrixClass c) {
  switch (c) {
    case MatrixClass::TwelveClass: return "TwelveClass";
    case MatrixClass::TwentySixClass: return "TwentySixClass";
    case MatrixClass::Other: return "Other";
    case MatrixClass::DeltaZero: return "DeltaZero";
  }
  return "?";
}

std::optional<MatrixClass> parse_class(std::string_view name) {
  for (auto c : {MatrixClass::TwelveClass, MatrixClass::TwentySixClass, MatrixClass::Other, MatrixClass::DeltaZero}) {
    if (class_name(c) == name) return c;
  }
  return std::nullopt;
}

MatrixClass classify(const Gf2Matrix& a) {
  const VertexModel m(a);
  if (!m.valid()) return MatrixClass::DeltaZero;
  const auto v = unique_fixed_vector(a);
  const auto vt = unique_fixed_vector(a.transpose());
  if (v && vt && v->get(0)) {
    return vt->get(0) ? MatrixClass::TwentySixClass : MatrixClass::TwelveClass;
  }
  return MatrixClass::Other;
}

Gf2Matrix conjugate_by_h(const Gf2Matrix& a) {
  static const Gf2Matrix h = Gf2Matrix::from_strings({"100", "001", "010"});
  return mat_mul(mat_mul(h, a), h);
}

std::vector<Gf2Matrix> enumerate_matrices(std::optional<MatrixClass> filter) {
  std::vector<Gf2Matrix> out;
  for (unsigned code = 0; code < 512; ++code) {
    Gf2Matrix a = matrix_from_code(code);
    if (!filter || classify(a) == *filter) out.push_back(std::move(a));
  }
  return out;
}

}  // namespace f2v
