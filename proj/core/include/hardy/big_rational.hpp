#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace hardy {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator. Thin value wrapper over GMP's mpq_class.
class BigRational {
 public:
  BigRational() = default;
  BigRational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  BigRational(std::int64_t numerator, std::int64_t denominator);

  /// Exact value of a finite double.
  static BigRational from_double(double value);
  static BigRational from_gmp(mpq_class value);
  /// Parses "p", "-p" or "p/q".
  static BigRational parse(const std::string& text);

  [[nodiscard]] std::string numerator_string() const;
  [[nodiscard]] std::string denominator_string() const;
  /// "p/q", or "p" when the value is an integer.
  [[nodiscard]] std::string to_string() const;

  [[nodiscard]] double to_double() const;
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_integer() const;

  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
  BigRational operator-() const;

  friend bool operator==(const BigRational& lhs, const BigRational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigRational& lhs, const BigRational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

  [[nodiscard]] const mpq_class& raw() const { return value_; }

 private:
  explicit BigRational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

BigRational abs(const BigRational& x);
/// x^exponent for exponent >= 0.
BigRational pow(const BigRational& x, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const BigRational& x);

}  // namespace hardy
