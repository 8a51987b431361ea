#pragma once

// Exact rationals whose denominator is a power of two. Every probability and
// Fourier value in this library has that form, so no floating point enters a
// result; to_double() exists only for display.

#include <compare>
#include <cstdint>
#include <string>

namespace f2v {

class Dyadic {
 public:
  constexpr Dyadic() = default;
  // numerator / 2^log2_denominator, canonicalised.
  Dyadic(std::int64_t numerator, unsigned log2_denominator = 0);

  std::int64_t numerator() const noexcept { return num_; }
  unsigned log2_denominator() const noexcept { return exp_; }
  bool is_zero() const noexcept { return num_ == 0; }

  // Division by 2^k.
  Dyadic scaled_down(unsigned k) const;

  Dyadic& operator+=(const Dyadic& o);
  Dyadic& operator-=(const Dyadic& o);
  Dyadic& operator*=(const Dyadic& o);
  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }
  Dyadic operator-() const { return Dyadic(-num_, exp_); }

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  double to_double() const noexcept;
  // "num/2^e", or just "num" when the denominator is 1.
  std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  unsigned exp_ = 0;
};

// A Dyadic constrained to [0, 1].
class DyadicProbability {
 public:
  DyadicProbability() = default;
  explicit DyadicProbability(const Dyadic& value);
  static DyadicProbability one_over_pow2(unsigned k) { return DyadicProbability(Dyadic(1, k)); }

  const Dyadic& value() const noexcept { return value_; }
  std::uint64_t numerator() const noexcept { return static_cast<std::uint64_t>(value_.numerator()); }
  unsigned log2_denominator() const noexcept { return value_.log2_denominator(); }
  double to_double() const noexcept { return value_.to_double(); }
  // Always "num/2^e" so serialized output has a single shape.
  std::string to_string() const;
  // Inverse of to_string(); also accepts "0" and "1".
  static DyadicProbability parse(const std::string& text);

  friend bool operator==(const DyadicProbability&, const DyadicProbability&) = default;
  friend auto operator<=>(const DyadicProbability& a, const DyadicProbability& b) { return a.value_ <=> b.value_; }

 private:
  Dyadic value_;
};

}  // namespace f2v
