#include "f2v/dyadic.hpp"

#include <bit>
#include <cmath>
#include <limits>

#include "f2v/error.hpp"

namespace f2v {

namespace {

constexpr unsigned kMaxExponent = 1000;

std::int64_t shift_up(std::int64_t v, unsigned k) {
  if (v == 0) return 0;
  if (k >= 63) fail(ErrorCode::Internal, "dyadic overflow");
  const std::int64_t limit = std::numeric_limits<std::int64_t>::max() >> k;
  if (v > limit || v < -limit) fail(ErrorCode::Internal, "dyadic overflow");
  return v * (std::int64_t{1} << k);
}

}  // namespace

Dyadic::Dyadic(std::int64_t numerator, unsigned log2_denominator) : num_(numerator), exp_(log2_denominator) {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  const auto tz = static_cast<unsigned>(std::countr_zero(static_cast<std::uint64_t>(num_)));
  const unsigned drop = tz < exp_ ? tz : exp_;
  num_ >>= drop;  // arithmetic shift is exact here: the low bits are zero
  exp_ -= drop;
  if (exp_ > kMaxExponent) fail(ErrorCode::Internal, "dyadic denominator too large");
}

Dyadic Dyadic::scaled_down(unsigned k) const { return Dyadic(num_, exp_ + k); }

Dyadic& Dyadic::operator+=(const Dyadic& o) {
  const unsigned e = exp_ > o.exp_ ? exp_ : o.exp_;
  std::int64_t sum = 0;
  if (__builtin_add_overflow(shift_up(num_, e - exp_), shift_up(o.num_, e - o.exp_), &sum)) {
    fail(ErrorCode::Internal, "dyadic overflow");
  }
  *this = Dyadic(sum, e);
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& o) { return *this += -o; }

Dyadic& Dyadic::operator*=(const Dyadic& o) {
  std::int64_t prod = 0;
  if (__builtin_mul_overflow(num_, o.num_, &prod)) fail(ErrorCode::Internal, "dyadic overflow");
  *this = Dyadic(prod, exp_ + o.exp_);
  return *this;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const Dyadic diff = a - b;
  return diff.num_ <=> 0;
}

double Dyadic::to_double() const noexcept { return std::ldexp(static_cast<double>(num_), -static_cast<int>(exp_)); }

std::string Dyadic::to_string() const {
  if (exp_ == 0) return std::to_string(num_);
  return std::to_string(num_) + "/2^" + std::to_string(exp_);
}

DyadicProbability::DyadicProbability(const Dyadic& value) : value_(value) {
  if (value < Dyadic(0) || Dyadic(1) < value) fail(ErrorCode::InvalidArgument, "probability outside [0, 1]");
}

std::string DyadicProbability::to_string() const {
  return std::to_string(value_.numerator()) + "/2^" + std::to_string(value_.log2_denominator());
}

DyadicProbability DyadicProbability::parse(const std::string& text) {
  const auto slash = text.find("/2^");
  try {
    if (slash == std::string::npos) return DyadicProbability(Dyadic(std::stoll(text)));
    return DyadicProbability(
        Dyadic(std::stoll(text.substr(0, slash)), static_cast<unsigned>(std::stoul(text.substr(slash + 3)))));
  } catch (const std::logic_error&) {
    fail(ErrorCode::Parse, "malformed probability '" + text + "'");
  }
}

}  // namespace f2v
