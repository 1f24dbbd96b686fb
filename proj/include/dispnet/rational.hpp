#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "dispnet/exec.hpp"

namespace dispnet {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction in lowest terms with a positive denominator.
///
/// Every area, bound and discrepancy value in the library is a Rational, and
/// every comparison is done by cross-multiplication. Values produced as areas
/// or bounds are nonnegative; the type itself is signed so that discrepancy
/// intermediates can be formed without special cases.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt num, BigInt den);

  static Rational from_u128(u128 num, u128 den);
  static Rational from_i128(i128 num, u128 den);

  /// Accepts "p/q" or "p" (optionally signed); the result is normalized.
  static Rational parse(std::string_view text);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.sign(); }

  /// Lowest-terms "p/q"; the denominator is always printed, so 1 is "1/1".
  std::string str() const;
  double to_double() const;
  /// Decimal rendering with `significant` significant digits (%.*g style).
  std::string decimal(int significant = 12) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

/// Exact three-way comparison (a.num * b.den vs b.num * a.den).
std::strong_ordering rational_cmp(const Rational& a, const Rational& b);

BigInt to_bigint(u128 value);
BigInt to_bigint(i128 value);

Rational max(const Rational& a, const Rational& b);
Rational min(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace dispnet
