#include "hardy/big_rational.hpp"

#include <climits>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace hardy {

namespace {

mpz_class to_mpz(std::int64_t v) {
  // mpz_class has no int64_t constructor on every platform; go via string
  // only when the value does not fit a long.
  if (v >= LONG_MIN && v <= LONG_MAX) return mpz_class(static_cast<long>(v));
  return mpz_class(std::to_string(v));
}

}  // namespace

BigRational::BigRational(std::int64_t value) : value_(to_mpz(value)) {}

BigRational::BigRational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("BigRational: zero denominator");
  value_ = mpq_class(to_mpz(numerator), to_mpz(denominator));
  value_.canonicalize();
}

BigRational BigRational::from_double(double value) {
  if (!std::isfinite(value)) throw std::domain_error("BigRational: non-finite double");
  return BigRational(mpq_class(value));
}

BigRational BigRational::from_gmp(mpq_class value) {
  value.canonicalize();
  return BigRational(std::move(value));
}

BigRational BigRational::parse(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("BigRational: cannot parse '" + text + "'");
  if (sgn(q.get_den()) == 0) throw std::domain_error("BigRational: zero denominator");
  q.canonicalize();
  return BigRational(std::move(q));
}

std::string BigRational::numerator_string() const { return value_.get_num().get_str(); }
std::string BigRational::denominator_string() const { return value_.get_den().get_str(); }
std::string BigRational::to_string() const { return value_.get_str(); }

double BigRational::to_double() const { return value_.get_d(); }

bool BigRational::is_integer() const { return value_.get_den() == 1; }

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}
BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}
BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}
BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.sign() == 0) throw std::domain_error("BigRational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

BigRational abs(const BigRational& x) { return x.sign() < 0 ? -x : x; }

BigRational pow(const BigRational& x, unsigned exponent) {
  BigRational result(1);
  BigRational base = x;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const BigRational& x) { return os << x.to_string(); }

}  // namespace hardy
