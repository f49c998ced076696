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

#include "altsyl/rational.hpp"

#include <ostream>

#include "altsyl/error.hpp"

namespace altsyl {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw Error(ErrorCode::division_by_zero, "rational with zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

BigInt parse_integer(std::string_view text, std::size_t offset) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) {
    throw ParseError(offset + i, "digit");
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw ParseError(offset + j, "digit");
    }
  }
  BigInt value(std::string(text.substr(i)), 10);
  return negative ? BigInt(-value) : value;
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw ParseError(slash + 1, "digit");
  }
  return Rational(parse_integer(text.substr(0, slash)),
                  parse_integer(den_text, slash + 1));
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::reciprocal() const {
  if (is_zero()) {
    throw Error(ErrorCode::division_by_zero, "reciprocal of zero");
  }
  Rational r;
  mpq_inv(r.value_.get_mpq_t(), value_.get_mpq_t());
  return r;
}

std::string Rational::to_string() const {
  if (is_integer()) {
    return value_.get_num().get_str();
  }
  return value_.get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational operator+(const Rational& x, const Rational& y) {
  Rational r;
  r.value_ = x.value_ + y.value_;
  return r;
}

Rational operator-(const Rational& x, const Rational& y) {
  Rational r;
  r.value_ = x.value_ - y.value_;
  return r;
}

Rational operator*(const Rational& x, const Rational& y) {
  Rational r;
  r.value_ = x.value_ * y.value_;
  return r;
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.is_zero()) {
    throw Error(ErrorCode::division_by_zero, "division by zero");
  }
  Rational r;
  r.value_ = x.value_ / y.value_;
  return r;
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  const int c = ::cmp(x.value_, y.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering cmp(const Rational& x, const Rational& y) { return x <=> y; }

const Rational& min(const Rational& x, const Rational& y) { return y < x ? y : x; }
const Rational& max(const Rational& x, const Rational& y) { return x < y ? y : x; }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace altsyl
