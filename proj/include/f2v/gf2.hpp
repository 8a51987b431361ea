#pragma once

// Dense linear algebra over the two-element field.
//
// Coordinate-to-bit map: coordinate i of a vector lives in word i / 64 at bit
// i % 64 (least significant bit first). Bits past len() are always zero.
// Matrices are stored as packed rows; vectors are rows unless an operation says
// otherwise (col_action treats its argument as a column).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace f2v {

class Gf2Vector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Gf2Vector() = default;
  explicit Gf2Vector(std::size_t len) : len_(len), words_((len + kWordBits - 1) / kWordBits, 0) {}

  static Gf2Vector unit(std::size_t len, std::size_t index);
  // Characters '0'/'1', coordinate 0 first.
  static Gf2Vector from_string(std::string_view bits);

  std::size_t size() const noexcept { return len_; }
  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  Gf2Vector& operator+=(const Gf2Vector& other);
  friend Gf2Vector operator+(Gf2Vector a, const Gf2Vector& b) { return a += b; }

  // Parity of the coordinatewise product.
  bool dot(const Gf2Vector& other) const;
  std::size_t weight() const noexcept;
  bool is_zero() const noexcept;
  // Index of the first nonzero coordinate, or size() when zero.
  std::size_t first_set() const noexcept;
  std::vector<std::size_t> support() const;
  // Coordinates picked in the given order.
  Gf2Vector select(std::span<const std::size_t> indices) const;

  std::string to_string() const;

  friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;

 private:
  std::size_t len_ = 0;
  std::vector<Word> words_;
};

class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  static Gf2Matrix identity(std::size_t n);
  static Gf2Matrix from_rows(std::vector<Gf2Vector> rows, std::size_t cols);
  // Rows as '0'/'1' strings of equal length.
  static Gf2Matrix from_strings(std::initializer_list<std::string_view> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  bool at(std::size_t r, std::size_t c) const { return data_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { data_[r].set(c, value); }
  const Gf2Vector& row(std::size_t r) const { return data_[r]; }
  Gf2Vector& row(std::size_t r) { return data_[r]; }
  Gf2Vector column(std::size_t c) const;

  Gf2Matrix transpose() const;
  Gf2Matrix& operator+=(const Gf2Matrix& other);
  friend Gf2Matrix operator+(Gf2Matrix a, const Gf2Matrix& b) { return a += b; }

  // Submatrix from the given rows and columns, in the given orders.
  Gf2Matrix permuted(std::span<const std::size_t> row_order, std::span<const std::size_t> col_order) const;

  std::string to_string(std::string_view row_sep = "\n") const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Gf2Vector> data_;
};

// Subspace of F2^ambient_dim held as a reduced row echelon basis, so two
// subspaces are equal exactly when their bases are equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}
  // Generators need not be independent.
  Subspace(std::size_t ambient_dim, std::vector<Gf2Vector> generators);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Gf2Vector>& basis() const noexcept { return basis_; }
  std::vector<std::size_t> pivots() const;

  bool contains(const Gf2Vector& v) const;
  // All 2^dim members; dim must be small.
  std::vector<Gf2Vector> members() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Gf2Vector> basis_;
};

Gf2Matrix mat_mul(const Gf2Matrix& a, const Gf2Matrix& b);
Gf2Matrix kron(const Gf2Matrix& a, const Gf2Matrix& b);
// k-fold Kronecker power; the zeroth power is the 1x1 identity.
Gf2Matrix kron_power(const Gf2Matrix& a, unsigned k);
// x * m for a row vector x.
Gf2Vector row_action(const Gf2Vector& x, const Gf2Matrix& m);
// m * w for a column vector w.
Gf2Vector col_action(const Gf2Matrix& m, const Gf2Vector& w);

std::size_t rank(const Gf2Matrix& m);
// Rank of a list of vectors of equal length.
std::size_t rank(std::vector<Gf2Vector> vectors);
// {x : x * m = 0}
Subspace left_kernel(const Gf2Matrix& m);
// {x : x * m = x}, the left kernel of m + I.
Subspace fixed_space(const Gf2Matrix& m);
// Throws ErrorCode::Shape for non-square input and ErrorCode::Singular otherwise.
Gf2Matrix inverse(const Gf2Matrix& m);
// Dimension of {x in s : x_i = 0 for every listed i}.
std::size_t subspace_intersection_dim(const Subspace& s, std::span<const std::size_t> zero_coordinates);

}  // namespace f2v
