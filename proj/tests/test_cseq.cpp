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

#include <string>

#include "altsyl/cseq.hpp"
#include "altsyl/error.hpp"
#include "doctest.h"

using altsyl::BigInt;
using altsyl::CSeq;

TEST_CASE("eval examples") {
  CHECK(CSeq::geometric(2).eval(3) == 8);
  CHECK(CSeq::constant(1).eval(100) == 1);
  const CSeq shifted = CSeq::parse("pow:3+2");
  CHECK(shifted.eval(1) == 27);
  CHECK(shifted.render() == "pow:3+2");
}

TEST_CASE("explicit prefix with geometric tail") {
  const CSeq s = CSeq::parse("list:2,4;tail:pow:2", true);
  const long want[] = {2, 4, 8, 16, 32, 64};
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(s.eval(n) == want[n - 1]);
  }
  // chain: each value divides the next
  for (std::size_t n = 2; n <= 40; ++n) {
    CHECK(mpz_divisible_p(s.eval(n).get_mpz_t(), s.eval(n - 1).get_mpz_t()));
  }
  CHECK_FALSE(s.first_chain_violation(40).has_value());
}

TEST_CASE("parse and render round-trip") {
  for (const std::string text : {"const:1", "const:7", "pow:2", "pow:5+3", "list:2,4;tail:pow:2",
                           "list:1,3", "list:3;tail:const:3"}) {
    CAPTURE(text);
    const CSeq s = CSeq::parse(text);
    CHECK(s.render() == text);
    CHECK(CSeq::parse(s.render()) == s);
  }
  CHECK(CSeq::parse("const:1") == CSeq::constant(1));
  CHECK(CSeq::parse("pow:2") == CSeq::geometric(2));
}

TEST_CASE("list without tail repeats its last value") {
  const CSeq s = CSeq::parse("list:1,3");
  CHECK(s.eval(2) == 3);
  CHECK(s.eval(9) == 3);
}

TEST_CASE("parse errors") {
  for (const std::string bad : {"", "const:", "const:0", "pow:-2", "list:", "list:1,", "list:1;pow:2",
                          "const:1x", "geo:2", "pow:2+"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(CSeq::parse(bad), altsyl::ParseError);
  }
  try {
    (void)CSeq::parse("const:3;");
    FAIL("no throw");
  } catch (const altsyl::ParseError& e) {
    CHECK(e.position() == 7);
  }
}

TEST_CASE("divisor chain enforcement") {
  const CSeq loose = CSeq::parse("list:2,3,6");
  CHECK(loose.eval(3) == 6);
  CHECK(loose.first_chain_violation(3) == std::optional<std::size_t>(2));
  const CSeq strict = loose.with_divisor_chain(true);
  CHECK(strict.eval(1) == 2);
  try {
    (void)strict.eval(3);
    FAIL("no throw");
  } catch (const altsyl::Error& e) {
    CHECK(e.code() == altsyl::ErrorCode::divisor_chain_violation);
    CHECK(e.index() == 2);
  }
}

TEST_CASE("eval rejects index zero") {
  CHECK_THROWS_AS((void)CSeq::constant(1).eval(0), altsyl::Error);
}
