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

#include <algorithm>

#include "altsyl/error.hpp"

namespace altsyl {

std::string_view condition_name(Condition c) {
  switch (c) {
    case Condition::c1: return "C1";
    case Condition::c2: return "C2";
    case Condition::c3: return "C3";
    case Condition::c4: return "C4";
    case Condition::c5: return "C5";
    case Condition::c6: return "C6";
    case Condition::u_growth: return "U";
    case Condition::divisor_chain: return "chain";
  }
  return "?";
}

std::string_view ordering_name(Ordering o) {
  switch (o) {
    case Ordering::less: return "less";
    case Ordering::equal: return "equal";
    case Ordering::greater: return "greater";
    case Ordering::undecided: return "undecided";
  }
  return "?";
}

namespace {

TCheckReport violation(Condition c, std::size_t index, std::size_t horizon) {
  return TCheckReport{false, c, index, horizon};
}

}  // namespace

TCheckReport check_T(const Expansion& e, std::size_t upto) {
  const std::size_t len = e.size();
  const std::size_t horizon = e.terminated() ? len : std::min(upto, len);
  const CSeq& cseq = e.cseq();

  if (auto bad = cseq.first_chain_violation(horizon + 1)) {
    return violation(Condition::divisor_chain, *bad, horizon);
  }

  BigInt c = horizon > 0 ? cseq.eval(1) : BigInt(1);
  for (std::size_t n = 1; n <= horizon; ++n) {
    const BigInt& a = e.terms()[n - 1];
    if (a < c) {
      return violation(Condition::c2, n, horizon);
    }
    if (n == 1 && a == c && e.terminated() && len == 1) {
      return violation(Condition::c3, 1, horizon);
    }
    if (n + 1 > horizon) break;
    const BigInt c_next = cseq.eval(n + 1);
    const BigInt lhs = e.terms()[n] * c;
    const BigInt rhs = c_next * a * (a + 1);
    if (lhs < rhs) {
      return violation(Condition::u_growth, n, horizon);
    }
    if (lhs == rhs && e.terminated() && n + 1 == len) {
      return violation(Condition::c6, n, horizon);
    }
    c = c_next;
  }
  return TCheckReport{true, std::nullopt, std::nullopt, horizon};
}

bool refixpoint(const Expansion& e, std::size_t upto) {
  if (!e.terminated()) {
    throw Error(ErrorCode::not_exact, "refixpoint needs a terminated expansion");
  }
  const Rational value = reconstruct(e);
  const Expansion again = expand_rational(value, e.cseq());
  if (again.q0() != e.q0()) return false;
  const std::size_t m = std::min(upto, e.size());
  for (std::size_t n = 1; n <= m; ++n) {
    const Digit d = again.digit(n);
    if (d.kind != Digit::Kind::term || d.a != e.terms()[n - 1]) return false;
  }
  if (upto >= e.size()) {
    return again.size() == e.size();
  }
  return true;
}

Ordering compare(const Expansion& x, const Expansion& y, std::size_t budget) {
  if (!(x.cseq() == y.cseq())) {
    throw Error(ErrorCode::cseq_mismatch, "expansions use different cseqs");
  }
  if (x.q0() != y.q0()) {
    return x.q0() < y.q0() ? Ordering::less : Ordering::greater;
  }
  const bool exact = x.terminated() && y.terminated();
  const std::size_t limit = exact ? std::max(x.size(), y.size()) + 1 : budget;
  for (std::size_t i = 1; i <= limit; ++i) {
    const Digit dx = x.digit(i);
    const Digit dy = y.digit(i);
    if (!dx.known() || !dy.known()) return Ordering::undecided;
    const bool zx = dx.kind == Digit::Kind::zero;
    const bool zy = dy.kind == Digit::Kind::zero;
    if (zx && zy) return Ordering::equal;
    if (!zx && !zy && dx.a == dy.a) continue;
    // Same c_i on both sides, so q_x < q_y iff a_x > a_y; zero is lowest.
    const bool qx_smaller = zx || (!zy && dx.a > dy.a);
    const bool x_smaller = (i % 2 == 1) ? qx_smaller : !qx_smaller;
    return x_smaller ? Ordering::less : Ordering::greater;
  }
  return exact ? Ordering::equal : Ordering::undecided;
}

}  // namespace altsyl
