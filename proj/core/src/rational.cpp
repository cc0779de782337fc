#include "curvegen/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace curvegen {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in addition");
  return out;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("integer overflow in subtraction");
  return out;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in multiplication");
  return out;
}

}  // namespace checked

namespace {

constexpr auto kMin = std::numeric_limits<std::int64_t>::min();

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  // INT64_MIN cannot be negated; refuse it up front rather than mid-normalization.
  if (numerator == kMin || denominator == kMin) throw std::overflow_error("rational component out of range");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

std::int64_t Rational::floor() const noexcept {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

Rational Rational::operator-() const {
  if (num_ == kMin) throw std::overflow_error("rational negation overflow");
  Rational out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  // a/b + c/d with g = gcd(b, d): (a*(d/g) + c*(b/g)) / (b/g*d)
  const std::int64_t g = std::gcd(den_, rhs.den_);
  const std::int64_t n = checked::add(checked::mul(num_, rhs.den_ / g), checked::mul(rhs.num_, den_ / g));
  const std::int64_t d = checked::mul(den_ / g, rhs.den_);
  *this = Rational(n, d);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  // Cross-cancel first to keep intermediates small.
  const std::int64_t g1 = std::gcd(num_, rhs.den_);
  const std::int64_t g2 = std::gcd(rhs.num_, den_);
  const std::int64_t n = checked::mul(num_ / (g1 ? g1 : 1), rhs.num_ / (g2 ? g2 : 1));
  const std::int64_t d = checked::mul(den_ / (g2 ? g2 : 1), rhs.den_ / (g1 ? g1 : 1));
  *this = Rational(n, d);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("rational division by zero");
  return *this *= Rational(rhs.den_, rhs.num_);
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (lhs.den_ == rhs.den_) return lhs.num_ <=> rhs.num_;
  __extension__ const __int128 l = static_cast<__int128>(lhs.num_) * rhs.den_;
  __extension__ const __int128 r = static_cast<__int128>(rhs.num_) * lhs.den_;
  return l <=> r;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

}  // namespace curvegen
