#include "treejac/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace treejac {

namespace {

wide_int abs128(wide_int v) { return v < 0 ? -v : v; }

wide_int gcd128(wide_int a, wide_int b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    wide_int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

bool fits64(wide_int v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  *this = from_wide(numerator, denominator);
}

Rational Rational::from_wide(wide_int numerator, wide_int denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  wide_int g = gcd128(numerator, denominator);
  if (g > 1) {
    numerator /= g;
    denominator /= g;
  }
  if (!fits64(numerator) || !fits64(denominator)) throw std::overflow_error("Rational: 64-bit overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(numerator);
  r.den_ = static_cast<std::int64_t>(denominator);
  return r;
}

std::int64_t Rational::floor() const noexcept { return floor_div(num_, den_); }

std::int64_t Rational::ceil() const noexcept { return -floor_div(-num_, den_); }

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational& Rational::operator+=(const Rational& rhs) {
  *this = from_wide(static_cast<wide_int>(num_) * rhs.den_ + static_cast<wide_int>(rhs.num_) * den_,
                    static_cast<wide_int>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  *this = from_wide(static_cast<wide_int>(num_) * rhs.den_ - static_cast<wide_int>(rhs.num_) * den_,
                    static_cast<wide_int>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  *this = from_wide(static_cast<wide_int>(num_) * rhs.num_, static_cast<wide_int>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("Rational: division by zero");
  *this = from_wide(static_cast<wide_int>(num_) * rhs.den_, static_cast<wide_int>(den_) * rhs.num_);
  return *this;
}

Rational Rational::operator-() const { return from_wide(-static_cast<wide_int>(num_), den_); }

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept {
  wide_int a = static_cast<wide_int>(lhs.num_) * rhs.den_;
  wide_int b = static_cast<wide_int>(rhs.num_) * lhs.den_;
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  if (b <= 0) throw std::domain_error("floor_div: divisor must be positive");
  std::int64_t q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

}  // namespace treejac
