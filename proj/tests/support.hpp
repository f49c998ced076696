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

#ifndef ALTSYL_TESTS_SUPPORT_HPP
#define ALTSYL_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "altsyl/expansion.hpp"
#include "altsyl/rational.hpp"
#include "oracle.hpp"

namespace support {

inline altsyl::Rational from(const mpq_class& x) {
  return altsyl::Rational(x.get_num(), x.get_den());
}

inline mpq_class to(const altsyl::Rational& x) { return x.raw(); }

inline altsyl::Rational q(long p, long d = 1) {
  return altsyl::Rational(altsyl::BigInt(p), altsyl::BigInt(d));
}

inline std::vector<altsyl::BigInt> ints(std::initializer_list<long> xs) {
  std::vector<altsyl::BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

inline altsyl::Expansion lit(const std::string& s, const altsyl::CSeq& c) {
  return altsyl::Expansion::parse(s, c);
}

// Oracle counterpart of the "const:<k>" and "pow:<l>" rules.
inline oracle::Multiplier multiplier(const std::string& text) {
  const long v = std::stol(text.substr(text.find(':') + 1));
  return text.rfind("const:", 0) == 0 ? oracle::constant(v) : oracle::power(v);
}

inline std::vector<mpz_class> raw_terms(const altsyl::Expansion& e) {
  return {e.terms().begin(), e.terms().end()};
}

}  // namespace support

#endif  // ALTSYL_TESTS_SUPPORT_HPP
