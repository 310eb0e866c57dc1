#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nonfree {

using BigInt = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Text form is "p/q" or "p" with the sign on the numerator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : value_(n) {}   // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Parses "p", "p/q", "-p/q" or "+p/q". Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  std::string str() const;

  Rational operator-() const { return from_raw(-value_); }
  Rational abs() const { return from_raw(::abs(value_)); }
  Rational inverse() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  static Rational from_raw(mpq_class v) {
    Rational r;
    r.value_ = std::move(v);
    return r;
  }
  mpq_class value_{0};
};

/// Parses a decimal integer with optional sign. Throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);

/// Square root of a non-negative rational if it is itself rational.
bool rational_sqrt(const Rational& x, Rational& root);

inline bool fits_int64(const BigInt& v) {
  return mpz_sizeinbase(v.get_mpz_t(), 2) <= 62;
}

}  // namespace nonfree
