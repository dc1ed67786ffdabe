#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace treejac {

__extension__ using wide_int = __int128;

/// Exact rational number p/q kept in lowest terms with q >= 1.
///
/// Arithmetic is carried out in 128-bit intermediates and throws
/// std::overflow_error when a reduced result does not fit in 64 bits.
class Rational {
 public:
  constexpr Rational() noexcept = default;
  constexpr Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);

  [[nodiscard]] constexpr std::int64_t numerator() const noexcept { return num_; }
  [[nodiscard]] constexpr std::int64_t denominator() const noexcept { return den_; }
  [[nodiscard]] constexpr bool is_integer() const noexcept { return den_ == 1; }

  /// Greatest integer <= *this (rounds toward -infinity for negative values).
  [[nodiscard]] std::int64_t floor() const noexcept;
  /// Least integer >= *this.
  [[nodiscard]] std::int64_t ceil() const noexcept;

  /// "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string to_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend constexpr bool operator==(const Rational&, const Rational&) noexcept = default;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept;

 private:
  static Rational from_wide(wide_int numerator, wide_int denominator);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// Euclidean floor division: returns q with a = b*q + r, 0 <= r < |b|. Requires b > 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);

}  // namespace treejac
