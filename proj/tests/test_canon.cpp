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

#include <random>
#include <string>

#include "altsyl/canon.hpp"
#include "altsyl/error.hpp"
#include "doctest.h"
#include "oracle.hpp"
#include "support.hpp"

using altsyl::CSeq;
using altsyl::Condition;
using altsyl::Expansion;
using altsyl::Ordering;
using support::lit;
using support::q;

namespace {

const CSeq kOne = CSeq::constant(1);

Ordering expected(const mpq_class& x, const mpq_class& y) {
  if (x < y) return Ordering::less;
  if (x > y) return Ordering::greater;
  return Ordering::equal;
}

}  // namespace

TEST_CASE("check_T examples") {
  const auto ok = altsyl::check_T(lit("0;1,3,21", kOne));
  CHECK(ok.valid);
  CHECK_FALSE(ok.violated.has_value());
  CHECK(ok.checked_upto == 3);

  const auto c6 = altsyl::check_T(lit("0;1,2", kOne));
  CHECK_FALSE(c6.valid);
  CHECK(c6.violated == Condition::c6);
  CHECK(c6.index == std::optional<std::size_t>(1));

  const auto c3 = altsyl::check_T(lit("0;1", kOne));
  CHECK_FALSE(c3.valid);
  CHECK(c3.violated == Condition::c3);
  CHECK(altsyl::condition_name(*c3.violated) == "C3");
}

TEST_CASE("check_T other violations") {
  // a_1 = 1 < c_1 = 3
  const auto c2 = altsyl::check_T(lit("0;1,100", CSeq::constant(3)));
  CHECK(c2.violated == Condition::c2);
  CHECK(c2.index == std::optional<std::size_t>(1));

  // 5 < 2 * 3
  const auto u = altsyl::check_T(lit("0;2,5", kOne));
  CHECK(u.violated == Condition::u_growth);
  CHECK(altsyl::condition_name(Condition::u_growth) == "U");
  CHECK(u.index == std::optional<std::size_t>(1));

  // equality in U is fine when more terms follow
  CHECK(altsyl::check_T(lit("0;1,2,7", kOne)).valid);
  CHECK(altsyl::check_T(lit("0;1,2;...", kOne)).valid);

  const auto chain = altsyl::check_T(lit("0;2,12", CSeq::parse("list:2,3;tail:const:3")));
  CHECK(chain.violated == Condition::divisor_chain);
  CHECK(altsyl::condition_name(Condition::divisor_chain) == "chain");
  CHECK(chain.index == std::optional<std::size_t>(2));
}

TEST_CASE("check_T horizon for open prefixes") {
  const Expansion open = lit("0;2,6,5;...", kOne);
  const auto early = altsyl::check_T(open, 2);
  CHECK(early.valid);
  CHECK(early.checked_upto == 2);
  const auto late = altsyl::check_T(open, 10);
  CHECK(late.violated == Condition::u_growth);
  CHECK(late.index == std::optional<std::size_t>(2));
}

TEST_CASE("refixpoint examples") {
  CHECK(altsyl::refixpoint(lit("0;1,3,21", kOne)));
  CHECK(altsyl::refixpoint(lit("0;2", kOne)));
  CHECK_FALSE(altsyl::refixpoint(lit("0;1,2", kOne)));
  CHECK_THROWS_AS(altsyl::refixpoint(lit("0;2;...", kOne)), altsyl::Error);
}

TEST_CASE("compare examples") {
  CHECK(altsyl::compare(lit("0;1,3,21", kOne), lit("0;2", kOne), 10) == Ordering::greater);
  CHECK(altsyl::compare(lit("0;1,2", kOne), lit("0;1,3", kOne), 10) == Ordering::less);
  CHECK(altsyl::compare(lit("1", kOne), lit("0;1,3", kOne), 10) == Ordering::greater);
  CHECK(altsyl::compare(lit("0;1,3", kOne), lit("0;1,3", kOne), 1) == Ordering::equal);
  CHECK(altsyl::compare(lit("0;2,6;...", kOne), lit("0;2,6;...", kOne), 50) ==
        Ordering::undecided);
  CHECK(altsyl::compare(lit("0;2,6;...", kOne), lit("0;2,7;...", kOne), 50) ==
        Ordering::less);
  CHECK_THROWS_AS(altsyl::compare(lit("0;2", kOne), lit("0;2", CSeq::constant(2)), 5),
                  altsyl::Error);
  CHECK(altsyl::ordering_name(Ordering::undecided) == "undecided");
}

TEST_CASE("every expansion of a rational is canonical") {
  for (const std::string c : {"const:1", "const:4", "pow:2", "list:2,4;tail:pow:2"}) {
    CAPTURE(c);
    const CSeq cseq = CSeq::parse(c);
    oracle::RationalGen gen(7 + c.size(), 100000, 100000);
    for (int i = 0; i < 300; ++i) {
      const Expansion e = altsyl::expand_rational(support::from(gen.next()), cseq);
      CAPTURE(e.to_text());
      CHECK(altsyl::check_T(e).valid);
      CHECK(altsyl::refixpoint(e));
    }
  }
}

TEST_CASE("perturbed expansions fail check_T or re-expand differently") {
  // Bumping the last term down by one either breaks a condition or leaves a
  // valid sequence, which must then be its own fixed point.
  oracle::RationalGen gen(99, 10000, 10000);
  for (int i = 0; i < 300; ++i) {
    const Expansion e = altsyl::expand_rational(support::from(gen.next()), kOne);
    if (e.size() == 0) continue;
    auto terms = e.terms();
    if (terms.back() <= 1) continue;
    terms.back() -= 1;
    const Expansion f(e.q0(), terms, kOne, true);
    CHECK(altsyl::check_T(f).valid == altsyl::refixpoint(f));
  }
}

TEST_CASE("compare agrees with rational order") {
  for (const std::string c : {"const:1", "pow:2", "const:3"}) {
    const CSeq cseq = CSeq::parse(c);
    oracle::RationalGen gen(3 * c.size(), 2000, 2000);
    for (int i = 0; i < 1000; ++i) {
      const mpq_class x = gen.next();
      // Close pairs exercise deep first differences.
      const mpq_class y = (i % 3 == 0) ? mpq_class(x + oracle::make(1, 1 + i)) : gen.next();
      const Expansion ex = altsyl::expand_rational(support::from(x), cseq);
      const Expansion ey = altsyl::expand_rational(support::from(y), cseq);
      CHECK(altsyl::compare(ex, ey, 1) == expected(x, y));
      CHECK(altsyl::compare(ex, ex, 1) == Ordering::equal);
    }
  }
}
