// Copyright 2026 The altsyl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ALTSYL_RATIONAL_HPP
#define ALTSYL_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace altsyl {

using BigInt = mpz_class;

/// Exact rational number kept in canonical form: the denominator is positive
/// and coprime to the numerator, zero is 0/1. Values are immutable and safe
/// to share across threads.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : value_(value) {}  // NOLINT
  /// Throws Error(division_by_zero) when `den` is zero.
  Rational(const BigInt& num, const BigInt& den);

  /// Parses "p/q" or "p" (optional leading '-', decimal digits).
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Greatest integer <= *this (rounds toward negative infinity).
  BigInt floor() const;
  /// *this - floor(*this), always in [0, 1).
  Rational frac() const;
  Rational abs() const;
  /// Throws Error(division_by_zero) for zero.
  Rational reciprocal() const;

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  /// Throws Error(division_by_zero) when `y` is zero.
  friend Rational operator/(const Rational& x, const Rational& y);

  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.value_ == y.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::strong_ordering cmp(const Rational& x, const Rational& y);
const Rational& min(const Rational& x, const Rational& y);
const Rational& max(const Rational& x, const Rational& y);

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Parses a signed decimal integer; throws ParseError with the offending
/// position.
BigInt parse_integer(std::string_view text, std::size_t offset = 0);

}  // namespace altsyl

#endif  // ALTSYL_RATIONAL_HPP
