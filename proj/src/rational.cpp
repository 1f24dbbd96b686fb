#include "dispnet/rational.hpp"

#include <cstdio>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "dispnet/error.hpp"

namespace dispnet {

namespace {

bool parse_integer(std::string_view text, BigInt& out) {
  if (text.empty()) return false;
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) return false;
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  out = negative ? BigInt(-value) : value;
  return true;
}

}  // namespace

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::singular: return "Singular";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::non_prime_base: return "NonPrimeBase";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::unsupported_base: return "UnsupportedBase";
    case Errc::not_fibonacci: return "NotFibonacci";
    case Errc::grid_mismatch: return "GridMismatch";
    case Errc::empty_set: return "EmptySet";
    case Errc::too_large: return "TooLarge";
    case Errc::not_permutation_structured: return "NotPermutationStructured";
    case Errc::domain_error: return "DomainError";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(Errc::invalid_argument, "zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

BigInt to_bigint(u128 value) {
  BigInt hi = static_cast<std::uint64_t>(value >> 64);
  BigInt lo = static_cast<std::uint64_t>(value);
  return (hi << 64) | lo;
}

BigInt to_bigint(i128 value) {
  if (value < 0) return -to_bigint(static_cast<u128>(-(value + 1)) + 1);
  return to_bigint(static_cast<u128>(value));
}

Rational Rational::from_u128(u128 num, u128 den) { return Rational(to_bigint(num), to_bigint(den)); }

Rational Rational::from_i128(i128 num, u128 den) { return Rational(to_bigint(num), to_bigint(den)); }

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  BigInt num, den = 1;
  bool ok = parse_integer(text.substr(0, slash), num);
  if (ok && slash != std::string_view::npos) {
    ok = parse_integer(text.substr(slash + 1), den) && den.sign() > 0;
  }
  if (!ok) throw Error(Errc::parse_error, "malformed rational '" + std::string(text) + "'");
  return Rational(std::move(num), std::move(den));
}

std::string Rational::str() const { return num_.str() + "/" + den_.str(); }

double Rational::to_double() const {
  using Float = boost::multiprecision::cpp_bin_float_double_extended;
  Float value = Float(num_) / Float(den_);
  return value.convert_to<double>();
}

std::string Rational::decimal(int significant) const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, to_double());
  return buf;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(Errc::invalid_argument, "division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering rational_cmp(const Rational& a, const Rational& b) { return a <=> b; }

Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace dispnet
