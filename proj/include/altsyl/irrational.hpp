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

#ifndef ALTSYL_IRRATIONAL_HPP
#define ALTSYL_IRRATIONAL_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "altsyl/cseq.hpp"
#include "altsyl/rational.hpp"

namespace altsyl {

/// A sequence of positive integers p_1, p_2, ... tagged with a growth factor
/// K >= 1, given either as an explicit finite prefix or by the recurrence
/// p_{n+1} = ceil(K p_n (p_n + 1)). Terms are memoized (mutex-guarded).
class GrowthSeq {
 public:
  static GrowthSeq from_terms(std::vector<BigInt> terms, const Rational& K);
  static GrowthSeq recurrence(const BigInt& first, const Rational& K);
  /// `sylvester` (2, 6, 42, 1806, ...; K = 1) or `sylvesterK:<k>`
  /// (1, 2k, ...; p_{n+1} = k p_n (p_n + 1), K = k).
  static GrowthSeq named(std::string_view name);

  const Rational& K() const;

  /// p_n for n >= 1. Throws Error(invalid_argument) past an explicit prefix.
  BigInt term(std::size_t n) const;
  std::vector<BigInt> prefix(std::size_t count) const;

 private:
  struct State;
  explicit GrowthSeq(std::shared_ptr<State> s) : state_(std::move(s)) {}

  std::shared_ptr<State> state_;
};

struct PKResult {
  bool member = false;
  /// The threshold N when `member`, else the last index n < probe where
  /// p_{n+1} < K p_n (p_n + 1).
  std::size_t index = 0;
};

/// Least N such that p_{n+1} >= K p_n (p_n + 1) for every N <= n < probe.
/// Membership requires the inequality at n = probe - 1 at least.
PKResult check_PK(std::span<const BigInt> terms, const Rational& K, std::size_t probe);
PKResult check_PK(const GrowthSeq& seq, const Rational& K, std::size_t probe);

/// sum_{n=1..terms} z^n / p_n, exactly.
Rational eval_f(const GrowthSeq& seq, const BigInt& z, std::size_t terms);

/// Evidence that f(-l; p) = head + tail with a rational head and a tail whose
/// digits a_n = p_{n+2N-1} under c_n = l^(n+2N-1) form a canonical,
/// never-terminating expansion.
struct Certificate {
  std::uint64_t l = 1;
  std::size_t N = 1;
  Rational head;                    // sum_{n=1..2N-1} (-1)^n l^n / p_n
  std::size_t checked_prefix = 0;
  Rational growth_K;
  CSeq tail_cseq = CSeq::constant(BigInt(1));
  std::vector<BigInt> tail_terms;   // a_1 .. a_{checked_prefix + 2}

  struct Conditions {
    bool q_at_most_one = false;     // a_n >= c_n
    bool u_growth = false;          // a_{n+1} >= l a_n (a_n + 1)
    bool never_terminates = true;   // every q_n != 0: a_n is finite
  } conditions;
};

/// Builds a certificate for f(-l; seq). Errors: Error(l_exceeds_k) when
/// l > floor(K), Error(growth_violation, index) when the growth or
/// q_n <= 1 check fails, Error(head_index_overflow) when no N with
/// p_{2N} >= l^{2N} exists within the checked prefix.
Certificate certify(const GrowthSeq& seq, std::uint64_t l, std::size_t prefix);

struct CrosscheckResult {
  bool ok = true;
  std::optional<std::size_t> mismatch_index;
};

/// Re-derives the first `terms` tail digits from the certificate: check_T on
/// the digit prefix, then each a_k is recomputed from an exact enclosure of
/// A_k built from the two following terms and must equal the stored one.
CrosscheckResult crosscheck(const Certificate& cert, std::size_t terms);

}  // namespace altsyl

#endif  // ALTSYL_IRRATIONAL_HPP
