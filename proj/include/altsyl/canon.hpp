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

#ifndef ALTSYL_CANON_HPP
#define ALTSYL_CANON_HPP

#include <cstddef>
#include <optional>
#include <string_view>

#include "altsyl/expansion.hpp"

namespace altsyl {

// Membership conditions for canonical digit sequences. C1 (integral q0) and
// C4 (zeros are final) hold by construction of Expansion; C5 (integral a_n)
// likewise, since terms are stored as positive integers.
enum class Condition { c1, c2, c3, c4, c5, c6, u_growth, divisor_chain };

/// "C1".."C6", "U", "chain".
std::string_view condition_name(Condition c);

struct TCheckReport {
  bool valid = true;
  std::optional<Condition> violated;
  std::optional<std::size_t> index;
  std::size_t checked_upto = 0;
};

/// Checks canonical-sequence membership of `e` over the first `upto` terms
/// (all terms when `e` is terminated):
///  - c_n | c_{n+1} across the checked range (reported as divisor_chain),
///  - C2: a_n >= c_n,
///  - C3: a_1 = c_1 forces a second term,
///  - U: c_n a_{n+1} >= c_{n+1} a_n (a_n + 1),
///  - C6: equality in U at n is allowed only if the expansion continues past
///        n + 1.
TCheckReport check_T(const Expansion& e, std::size_t upto = kAllTerms);

/// True iff re-expanding the exact value of `e` reproduces its first
/// min(upto, size) terms and, when upto covers all of them, its termination.
/// Requires a terminated expansion (Error(not_exact) otherwise).
bool refixpoint(const Expansion& e, std::size_t upto = kAllTerms);

enum class Ordering { less, equal, greater, undecided };

std::string_view ordering_name(Ordering o);

/// Order through the first differing digit: q0 by value; for n >= 1 a smaller
/// q_n means a smaller number at odd n and a larger one at even n, with zero
/// (past a terminated end) below every nonzero q. Terminated pairs are
/// compared exactly; otherwise at most `budget` digits are inspected and
/// an exhausted budget or an open prefix yields Ordering::undecided.
/// Throws Error(cseq_mismatch) for different multiplier sequences.
Ordering compare(const Expansion& x, const Expansion& y, std::size_t budget);

}  // namespace altsyl

#endif  // ALTSYL_CANON_HPP
