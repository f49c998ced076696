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

#include "altsyl/canon.hpp"
#include "altsyl/error.hpp"
#include "altsyl/irrational.hpp"
#include "doctest.h"
#include "oracle.hpp"
#include "support.hpp"

using altsyl::BigInt;
using altsyl::ErrorCode;
using altsyl::GrowthSeq;
using altsyl::Rational;
using support::ints;
using support::q;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const altsyl::Error& e) {
    return e.code();
  }
  FAIL("expected an altsyl::Error");
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST_CASE("named sequences") {
  CHECK(GrowthSeq::named("sylvester").prefix(5) == ints({2, 6, 42, 1806, 3263442}));
  CHECK(GrowthSeq::named("sylvesterK:2").prefix(4) == ints({1, 4, 40, 3280}));
  CHECK(GrowthSeq::named("sylvesterK:3").prefix(3) == ints({1, 6, 126}));
  CHECK_THROWS_AS(GrowthSeq::named("fibonacci"), altsyl::Error);
  CHECK_THROWS_AS(GrowthSeq::named("sylvesterK:0"), altsyl::Error);
}

TEST_CASE("recurrence with fractional K rounds up") {
  // p_2 = ceil(3/2 * 2 * 3) = 9, p_3 = ceil(3/2 * 9 * 10) = 135
  const GrowthSeq s = GrowthSeq::recurrence(BigInt(2), q(3, 2));
  CHECK(s.prefix(3) == ints({2, 9, 135}));
  CHECK(altsyl::check_PK(s, q(3, 2), 6).member);
}

TEST_CASE("check_PK examples") {
  const auto syl = altsyl::check_PK(GrowthSeq::named("sylvester"), q(1), 8);
  CHECK(syl.member);
  CHECK(syl.index == 1);
  const auto k2 = altsyl::check_PK(GrowthSeq::named("sylvesterK:2"), q(2), 8);
  CHECK(k2.member);
  CHECK(k2.index == 1);
  const auto lin = GrowthSeq::from_terms(ints({1, 2, 3, 4, 5, 6}), q(1));
  const auto bad = altsyl::check_PK(lin, q(1), 3);
  CHECK_FALSE(bad.member);
  CHECK(bad.index == 2);
  CHECK_FALSE(altsyl::check_PK(lin, q(1), 6).member);
}

TEST_CASE("check_PK finds the eventual threshold") {
  // Slow start, then p_{n+1} = p_n (p_n + 1) from n = 3 on.
  const auto terms = ints({5, 5, 5, 30, 930});
  const auto r = altsyl::check_PK(terms, q(1), 5);
  CHECK(r.member);
  CHECK(r.index == 3);
}

TEST_CASE("eval_f examples") {
  const GrowthSeq syl = GrowthSeq::named("sylvester");
  CHECK(altsyl::eval_f(syl, BigInt(-1), 3) == q(-5, 14));
  CHECK(altsyl::eval_f(syl, BigInt(0), 7) == q(0));
  CHECK(altsyl::eval_f(syl, BigInt(-1), 4) == q(-5, 14) + q(1, 1806));
  // brute-force partial sums
  for (long z : {-3L, -2L, 1L, 2L}) {
    mpq_class s = 0;
    mpz_class zn = 1;
    for (std::size_t n = 1; n <= 6; ++n) {
      zn *= z;
      s += oracle::ratio(zn, syl.term(n));
    }
    CHECK(support::to(altsyl::eval_f(syl, BigInt(z), 6)) == s);
  }
}

TEST_CASE("certify examples") {
  const auto c = altsyl::certify(GrowthSeq::named("sylvester"), 1, 10);
  CHECK(c.l == 1);
  CHECK(c.N == 1);
  CHECK(c.head == q(-1, 2));
  CHECK(c.conditions.q_at_most_one);
  CHECK(c.conditions.u_growth);
  CHECK(c.conditions.never_terminates);
  CHECK(c.tail_terms.size() == 12);
  CHECK(c.tail_terms[0] == 6);

  CHECK(code_of([] { altsyl::certify(GrowthSeq::named("sylvester"), 2, 10); }) ==
        ErrorCode::l_exceeds_k);

  const auto k2 = altsyl::certify(GrowthSeq::named("sylvesterK:2"), 2, 10);
  // smallest N with p_{2N} >= 2^{2N}: p_2 = 4 already qualifies
  CHECK(k2.N == 1);
  CHECK(k2.head == q(-2));
  CHECK(k2.tail_cseq.eval(1) == 4);
  CHECK(altsyl::crosscheck(k2, 8).ok);
}

TEST_CASE("certify picks a later head index when needed") {
  // K = 3, l = 3: p_2 = 6 < 9, p_4 = 3 * 126 * 127 >= 81
  const GrowthSeq s = GrowthSeq::named("sylvesterK:3");
  const auto c = altsyl::certify(s, 3, 6);
  CHECK(c.N == 2);
  // -3/1 + 9/6 - 27/126
  CHECK(c.head == q(-3) + q(9, 6) - q(27, 126));
  CHECK(c.tail_terms[0] == s.term(4));
  CHECK(altsyl::crosscheck(c, 6).ok);
  CHECK(code_of([&] { altsyl::certify(s, 3, 1); }) == ErrorCode::head_index_overflow);
}

TEST_CASE("certify rejects sequences outside the growth class") {
  const auto lin = GrowthSeq::from_terms(ints({1, 2, 3, 4, 5, 6, 7, 8}), q(1));
  CHECK(code_of([&] { altsyl::certify(lin, 1, 5); }) == ErrorCode::growth_violation);
}

TEST_CASE("head plus tail reproduces the partial series") {
  const GrowthSeq syl = GrowthSeq::named("sylvester");
  const auto c = altsyl::certify(syl, 1, 8);
  const std::size_t off = 2 * c.N - 1;
  for (std::size_t m = 1; m <= 6; ++m) {
    const altsyl::Expansion tail(BigInt(0),
                                 std::vector<BigInt>(c.tail_terms.begin(),
                                                     c.tail_terms.begin() + m),
                                 c.tail_cseq, true);
    CHECK(c.head + altsyl::reconstruct(tail) == altsyl::eval_f(syl, BigInt(-1), m + off));
  }
}

TEST_CASE("crosscheck examples") {
  const auto c = altsyl::certify(GrowthSeq::named("sylvester"), 1, 10);
  CHECK(altsyl::crosscheck(c, 6).ok);
  CHECK(altsyl::crosscheck(c, 1).ok);
  CHECK(altsyl::crosscheck(c, 10).ok);
  CHECK_THROWS_AS(altsyl::crosscheck(c, 11), altsyl::Error);

  auto tampered = c;
  tampered.tail_terms[2] += 1;
  const auto r = altsyl::crosscheck(tampered, 6);
  CHECK_FALSE(r.ok);
  CHECK(r.mismatch_index == std::optional<std::size_t>(3));

  // 41 < 6 * 7 breaks growth at the first step.
  auto shrunk = c;
  shrunk.tail_terms[1] = 41;
  const auto u = altsyl::crosscheck(shrunk, 4);
  CHECK_FALSE(u.ok);
  CHECK(u.mismatch_index == std::optional<std::size_t>(1));
}
