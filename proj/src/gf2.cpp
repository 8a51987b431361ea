#include "f2v/gf2.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "f2v/error.hpp"

namespace f2v {

namespace {

void require(bool ok, const char* what) {
  if (!ok) fail(ErrorCode::Shape, what);
}

// In-place elimination restricted to columns [0, col_limit). Rows are reordered
// so the first `rank` rows carry pivots; with `reduce` the pivot columns are
// cleared above as well (reduced echelon form). Returns the rank.
std::size_t eliminate(std::vector<Gf2Vector>& rows, std::size_t col_limit, bool reduce) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < col_limit && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = reduce ? 0 : rank + 1; r < rows.size(); ++r) {
      if (r != rank && rows[r].get(col)) rows[r] += rows[rank];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

// ---- Gf2Vector ----

Gf2Vector Gf2Vector::unit(std::size_t len, std::size_t index) {
  if (index >= len) fail(ErrorCode::OutOfRange, "unit vector index out of range");
  Gf2Vector v(len);
  v.set(index);
  return v;
}

Gf2Vector Gf2Vector::from_string(std::string_view bits) {
  Gf2Vector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      fail(ErrorCode::Parse, "bit string may only contain '0' and '1'");
    }
  }
  return v;
}

void Gf2Vector::set(std::size_t i, bool value) {
  const Word mask = Word{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

Gf2Vector& Gf2Vector::operator+=(const Gf2Vector& other) {
  require(len_ == other.len_, "vector length mismatch in addition");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool Gf2Vector::dot(const Gf2Vector& other) const {
  require(len_ == other.len_, "vector length mismatch in dot product");
  Word acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return std::popcount(acc) & 1;
}

std::size_t Gf2Vector::weight() const noexcept {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool Gf2Vector::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t Gf2Vector::first_set() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return len_;
}

std::vector<std::size_t> Gf2Vector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (Word bits = words_[w]; bits != 0; bits &= bits - 1) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
    }
  }
  return out;
}

Gf2Vector Gf2Vector::select(std::span<const std::size_t> indices) const {
  Gf2Vector out(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= len_) fail(ErrorCode::OutOfRange, "coordinate index out of range");
    if (get(indices[i])) out.set(i);
  }
  return out;
}

std::string Gf2Vector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

// ---- Gf2Matrix ----

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, Gf2Vector(cols)) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(std::vector<Gf2Vector> rows, std::size_t cols) {
  for (const auto& r : rows) require(r.size() == cols, "row length mismatch");
  Gf2Matrix m;
  m.rows_ = rows.size();
  m.cols_ = cols;
  m.data_ = std::move(rows);
  return m;
}

Gf2Matrix Gf2Matrix::from_strings(std::initializer_list<std::string_view> rows) {
  std::vector<Gf2Vector> data;
  std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  for (auto r : rows) data.push_back(Gf2Vector::from_string(r));
  return from_rows(std::move(data), cols);
}

Gf2Vector Gf2Matrix::column(std::size_t c) const {
  Gf2Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (at(r, c)) v.set(r);
  }
  return v;
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c : data_[r].support()) t.set(c, r);
  }
  return t;
}

Gf2Matrix& Gf2Matrix::operator+=(const Gf2Matrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "matrix shape mismatch in addition");
  for (std::size_t r = 0; r < rows_; ++r) data_[r] += other.data_[r];
  return *this;
}

Gf2Matrix Gf2Matrix::permuted(std::span<const std::size_t> row_order, std::span<const std::size_t> col_order) const {
  Gf2Matrix out(row_order.size(), col_order.size());
  for (std::size_t r = 0; r < row_order.size(); ++r) {
    if (row_order[r] >= rows_) fail(ErrorCode::OutOfRange, "row index out of range");
    out.data_[r] = data_[row_order[r]].select(col_order);
  }
  return out;
}

std::string Gf2Matrix::to_string(std::string_view row_sep) const {
  std::string s;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r != 0) s += row_sep;
    s += data_[r].to_string();
  }
  return s;
}

// ---- Subspace ----

Subspace::Subspace(std::size_t ambient_dim, std::vector<Gf2Vector> generators) : ambient_dim_(ambient_dim) {
  for (const auto& g : generators) require(g.size() == ambient_dim, "generator length mismatch");
  const std::size_t r = eliminate(generators, ambient_dim, /*reduce=*/true);
  generators.resize(r);
  basis_ = std::move(generators);
}

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(basis_.size());
  for (const auto& b : basis_) out.push_back(b.first_set());
  return out;
}

bool Subspace::contains(const Gf2Vector& v) const {
  require(v.size() == ambient_dim_, "vector length mismatch in membership test");
  Gf2Vector residue = v;
  for (const auto& b : basis_) {
    if (residue.get(b.first_set())) residue += b;
  }
  return residue.is_zero();
}

std::vector<Gf2Vector> Subspace::members() const {
  if (basis_.size() > 24) fail(ErrorCode::CapExceeded, "subspace too large to enumerate");
  std::vector<Gf2Vector> out;
  out.reserve(std::size_t{1} << basis_.size());
  for (std::size_t mask = 0; mask < (std::size_t{1} << basis_.size()); ++mask) {
    Gf2Vector v(ambient_dim_);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if ((mask >> i) & 1U) v += basis_[i];
    }
    out.push_back(std::move(v));
  }
  return out;
}

// ---- operations ----

Gf2Matrix mat_mul(const Gf2Matrix& a, const Gf2Matrix& b) {
  require(a.cols() == b.rows(), "mat_mul: inner dimensions differ");
  Gf2Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) out.row(r) = row_action(a.row(r), b);
  return out;
}

Gf2Matrix kron(const Gf2Matrix& a, const Gf2Matrix& b) {
  Gf2Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j : a.row(i).support()) {
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l : b.row(k).support()) out.set(i * b.rows() + k, j * b.cols() + l);
      }
    }
  }
  return out;
}

Gf2Matrix kron_power(const Gf2Matrix& a, unsigned k) {
  Gf2Matrix out = Gf2Matrix::identity(1);
  for (unsigned i = 0; i < k; ++i) out = kron(out, a);
  return out;
}

Gf2Vector row_action(const Gf2Vector& x, const Gf2Matrix& m) {
  require(x.size() == m.rows(), "row_action: vector length differs from row count");
  Gf2Vector out(m.cols());
  for (std::size_t r : x.support()) out += m.row(r);
  return out;
}

Gf2Vector col_action(const Gf2Matrix& m, const Gf2Vector& w) {
  require(w.size() == m.cols(), "col_action: vector length differs from column count");
  Gf2Vector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m.row(r).dot(w)) out.set(r);
  }
  return out;
}

std::size_t rank(const Gf2Matrix& m) {
  std::vector<Gf2Vector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return eliminate(rows, m.cols(), /*reduce=*/false);
}

std::size_t rank(std::vector<Gf2Vector> vectors) {
  if (vectors.empty()) return 0;
  const std::size_t len = vectors.front().size();
  for (const auto& v : vectors) require(v.size() == len, "rank: vector length mismatch");
  return eliminate(vectors, len, /*reduce=*/false);
}

Subspace left_kernel(const Gf2Matrix& m) {
  // Augment each row with its own unit vector; rows whose left part vanishes
  // after elimination record a dependency, i.e. a left kernel vector.
  const std::size_t width = m.cols() + m.rows();
  std::vector<Gf2Vector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Gf2Vector v(width);
    for (std::size_t c : m.row(r).support()) v.set(c);
    v.set(m.cols() + r);
    rows.push_back(std::move(v));
  }
  const std::size_t rk = eliminate(rows, m.cols(), /*reduce=*/false);
  std::vector<std::size_t> tail(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) tail[i] = m.cols() + i;
  std::vector<Gf2Vector> kernel;
  for (std::size_t r = rk; r < rows.size(); ++r) kernel.push_back(rows[r].select(tail));
  return Subspace(m.rows(), std::move(kernel));
}

Subspace fixed_space(const Gf2Matrix& m) {
  require(m.square(), "fixed_space: matrix must be square");
  return left_kernel(m + Gf2Matrix::identity(m.rows()));
}

Gf2Matrix inverse(const Gf2Matrix& m) {
  require(m.square(), "inverse: matrix must be square");
  const std::size_t n = m.rows();
  std::vector<Gf2Vector> rows;
  rows.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    Gf2Vector v(2 * n);
    for (std::size_t c : m.row(r).support()) v.set(c);
    v.set(n + r);
    rows.push_back(std::move(v));
  }
  if (eliminate(rows, n, /*reduce=*/true) != n) fail(ErrorCode::Singular, "inverse: matrix is singular");
  std::vector<std::size_t> tail(n);
  for (std::size_t i = 0; i < n; ++i) tail[i] = n + i;
  std::vector<Gf2Vector> inv;
  inv.reserve(n);
  for (auto& r : rows) inv.push_back(r.select(tail));
  return Gf2Matrix::from_rows(std::move(inv), n);
}

std::size_t subspace_intersection_dim(const Subspace& s, std::span<const std::size_t> zero_coordinates) {
  for (std::size_t i : zero_coordinates) {
    if (i >= s.ambient_dim()) fail(ErrorCode::OutOfRange, "constraint coordinate out of range");
  }
  std::vector<Gf2Vector> restricted;
  restricted.reserve(s.dim());
  for (const auto& b : s.basis()) restricted.push_back(b.select(zero_coordinates));
  return s.dim() - rank(std::move(restricted));
}

}  // namespace f2v
