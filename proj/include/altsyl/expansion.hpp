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

#ifndef ALTSYL_EXPANSION_HPP
#define ALTSYL_EXPANSION_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "altsyl/cseq.hpp"
#include "altsyl/rational.hpp"

namespace altsyl {

inline constexpr std::size_t kDefaultMaxTerms = 10'000;
inline constexpr std::size_t kAllTerms = std::numeric_limits<std::size_t>::max();

/// State of the expansion recursion before emitting the term at `index`:
/// `remainder` is A_n, always in [0, 1].
struct StepState {
  Rational remainder;
  std::size_t index = 1;
};

struct Step {
  BigInt a;        // a_n = floor(c_n / A_n)
  Rational q;      // q_n = c_n / a_n
  StepState next;  // A_{n+1} = q_n - A_n
};

/// One step of the recursion with multiplier `c`. Returns nullopt when the
/// remainder is zero (the expansion has terminated). Guarantees
/// c/(a+1) < A <= c/a. Throws Error(invalid_argument) for A outside [0, 1].
std::optional<Step> step(const StepState& state, const BigInt& c);

/// Term n of an expansion, as seen through a possibly finite prefix.
struct Digit {
  enum class Kind { term, zero, unknown };
  Kind kind = Kind::unknown;
  BigInt a;  // meaningful for Kind::term

  bool known() const { return kind != Kind::unknown; }
};

/// Canonical expansion alpha = q0 + sum_{n>=1} (-1)^(n-1) c_n / a_n.
///
/// Terminated expansions hold every nonzero term; `terminated() == false`
/// means the stored terms are a prefix of a longer (possibly infinite)
/// expansion. Terms are positive integers.
class Expansion {
 public:
  Expansion(BigInt q0, std::vector<BigInt> terms, CSeq cseq, bool terminated);

  /// Accepts `q0;a1,a2,...` (terminated), `q0;a1,a2;...` (open prefix),
  /// a bare `q0`, or the text form produced by `to_text`.
  static Expansion parse(std::string_view literal, const CSeq& cseq);

  const BigInt& q0() const { return q0_; }
  const std::vector<BigInt>& terms() const { return terms_; }
  const CSeq& cseq() const { return cseq_; }
  bool terminated() const { return terminated_; }
  std::size_t size() const { return terms_.size(); }

  Digit digit(std::size_t n) const;
  /// q_n = c_n / a_n (zero past a terminated end). Throws Error(not_exact)
  /// past the end of an open prefix.
  Rational q(std::size_t n) const;

  /// The first `count` terms; terminated iff this is terminated and
  /// `count >= size()`.
  Expansion prefix(std::size_t count) const;

  /// "q0=0 terms=1,3,21 terminated" or "q0=0 terms=1,3 open".
  std::string to_text() const;
  /// "0;1,3,21" or "0;1,3;..." for an open prefix.
  std::string to_literal() const;

  friend bool operator==(const Expansion& x, const Expansion& y);

 private:
  BigInt q0_;
  std::vector<BigInt> terms_;
  CSeq cseq_;
  bool terminated_;
};

/// Expands a rational exactly. Always terminates for rational input, within
/// (numerator of the fractional part) steps; throws Error(budget_exceeded)
/// only when `max_terms` is below the true length.
Expansion expand_rational(const Rational& alpha, const CSeq& cseq,
                          std::size_t max_terms = kDefaultMaxTerms);

/// The first `count` terms of the expansion of alpha; terminated iff the
/// expansion ends within them.
Expansion expand_prefix(const Rational& alpha, const CSeq& cseq, std::size_t count);

/// q0 + sum_{k=1..m} (-1)^(k-1) c_k/a_k with m = min(upto, size()).
Rational reconstruct(const Expansion& e, std::size_t upto = kAllTerms);

struct Bracket {
  Rational lower;
  Rational upper;
};

/// Encloses A_n using the next `upto` tail terms:
/// A_n = q_n - q_{n+1} + ... +/- q_{n+upto-1} -/+ A_{n+upto}, with A_{n+upto}
/// bracketed by c/(a+1) <= A <= c/a (exact past a terminated end).
Bracket tail_remainder(const Expansion& e, std::size_t n, std::size_t upto);

}  // namespace altsyl

#endif  // ALTSYL_EXPANSION_HPP
