#pragma once

// Exact arithmetic substrate: arbitrary-precision integers and rationals,
// dyadic rationals q/2^n, and the two digit functions used everywhere else
// (binary digit sum and 2-adic valuation).

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace dphi {

using BigInt = mpz_class;

/// Raised when an internal exactness invariant fails (e.g. a coefficient
/// table that should produce integers does not).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised by the string parsers on malformed input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Number of ones in the binary expansion of k.
unsigned digit_sum(std::uint64_t k) noexcept;
/// Same, for a non-negative big integer.
unsigned digit_sum(const BigInt& k);

/// Thue-Morse sign (-1)^{s(k)}.
inline int thue_morse_sign(std::uint64_t k) noexcept { return (digit_sum(k) & 1U) ? -1 : 1; }

/// Largest e with 2^e | m. Throws std::domain_error for m == 0.
unsigned val2(std::uint64_t m);
unsigned val2(const BigInt& m);

/// 2^e as a big integer.
BigInt pow2(unsigned long e);

/// Strict decimal integer parser: optional '-', then one or more digits.
BigInt parse_bigint(std::string_view text);

/// Exact rational kept in canonical form (den > 0, gcd(|num|, den) = 1).
class BigRational {
 public:
  BigRational() = default;
  BigRational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& num, const BigInt& den);

  const BigInt& num() const { return value_.get_num(); }
  const BigInt& den() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return den() == 1; }
  double to_double() const { return value_.get_d(); }

  /// "num/den", or just "num" when den == 1.
  std::string to_string() const;
  /// Inverse of to_string; non-canonical input such as "2/4" is reduced.
  static BigRational parse(std::string_view text);

  BigRational& operator+=(const BigRational& o) { value_ += o.value_; return *this; }
  BigRational& operator-=(const BigRational& o) { value_ -= o.value_; return *this; }
  BigRational& operator*=(const BigRational& o) { value_ *= o.value_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  BigRational operator-() const;

  /// Multiplies by 2^e (e may be negative).
  BigRational mul_pow2(long e) const;

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit BigRational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

/// Exact dyadic rational num / 2^exp with exp >= 0 and (exp == 0 or num odd).
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  Dyadic(BigInt num, unsigned long exp);

  const BigInt& num() const { return num_; }
  unsigned long exp() const { return exp_; }

  int sign() const { return sgn(num_); }
  bool is_integer() const { return exp_ == 0; }

  BigRational to_rational() const;
  double to_double() const;
  /// Largest integer <= value.
  BigInt floor() const;
  /// Numerator of the value written over 2^level; requires level >= exp().
  BigInt numerator_at(unsigned long level) const;

  /// "num/2^exp".
  std::string to_string() const;
  /// Accepts "num/2^exp" and plain "num".
  static Dyadic parse(std::string_view text);

  /// Multiplies by 2^e (e may be negative).
  Dyadic mul_pow2(long e) const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic operator-() const { return Dyadic(-num_, exp_); }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  BigInt num_;
  unsigned long exp_ = 0;
};

/// Canonical dyadic equal to num / 2^exp.
inline Dyadic dyadic_normalize(const BigInt& num, unsigned long exp) { return Dyadic(num, exp); }

}  // namespace dphi
