#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace exroc {

using BigInt = mpz_class;

/// Exact rational number, always stored reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long num);  // NOLINT(google-explicit-constructor): integers promote
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Parses decimal text exactly: "0.35" -> 7/20, "-1.5e-2" -> -3/200.
  /// Also accepts "n/d". Throws std::invalid_argument on malformed input.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }

  double to_double() const { return value_.get_d(); }

  /// "num/den", always with the denominator ("0/1", "1/1").
  std::string to_fraction_string() const;

  /// Exactly rounded (half away from zero) decimal with `digits` significant
  /// digits, positional notation, e.g. 7/8 -> "0.87500000000000000".
  std::string to_decimal_string(int digits = 17) const;

  Rational operator-() const { return from_mpq(-value_); }
  friend Rational operator+(const Rational& a, const Rational& b) { return from_mpq(a.value_ + b.value_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return from_mpq(a.value_ - b.value_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return from_mpq(a.value_ * b.value_); }
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  static Rational from_mpq(mpq_class v) {
    Rational r;
    r.value_ = std::move(v);
    return r;
  }

  // gmpxx arithmetic keeps mpq values canonical; only the (num, den)
  // constructor needs an explicit canonicalize().
  mpq_class value_{0};
};

/// Convenience for fraction literals in code and tests.
inline Rational frac(long num, long den) { return Rational(num, den); }

}  // namespace exroc
