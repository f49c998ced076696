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

#ifndef ALTSYL_REALFIELD_HPP
#define ALTSYL_REALFIELD_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "altsyl/canon.hpp"
#include "altsyl/expansion.hpp"

namespace altsyl {

inline constexpr std::size_t kDefaultRounds = 256;
inline constexpr std::size_t kDefaultDigitCount = 64;
// A stream leaf stops refining once one of its terms exceeds this many bits.
inline constexpr std::size_t kMaxStreamTermBits = std::size_t{1} << 24;

/// 2^-128.
Rational default_precision();

/// Produces a_n for n >= 1, or nullopt once the expansion has terminated
/// (q_n = 0 from then on). Called at most once per index.
using TermGenerator = std::function<std::optional<BigInt>(std::size_t n)>;

/// A constructive real over a fixed multiplier sequence (divisor chain
/// required).
///
/// Reals are immutable DAGs: an exact rational leaf (with its cached
/// canonical expansion), a lazily generated digit stream, or an operation
/// node. Operations on exact leaves collapse to exact leaves eagerly. Stream
/// terms are memoized under a mutex, so a Real may be evaluated from several
/// threads.
class Real {
 public:
  enum class Kind { exact, stream, node };
  enum class Op { add, neg, mul, inv };

  static Real exact(const Rational& value, const CSeq& cseq);
  /// Terminated expansions only; rejects expansions failing check_T with
  /// Error(invalid_expansion) and open prefixes with Error(not_exact).
  static Real from_expansion(const Expansion& e);
  /// A digit stream (q0; a_1, a_2, ...). Validity of the generated terms is
  /// checked by consumers that need it (sup_finite), on the prefix they use.
  static Real stream(BigInt q0, TermGenerator terms, const CSeq& cseq);

  Kind kind() const;
  const CSeq& cseq() const;

  /// Value of an exact leaf; nullptr otherwise.
  const Rational* exact_value() const;
  /// Full canonical expansion of an exact leaf, generated on first use.
  /// Rationals with large denominators can have very long expansions.
  std::optional<Expansion> exact_expansion() const;

  /// Operation and operands of a node. Precondition: kind() == Kind::node.
  Op op() const;
  const std::vector<Real>& children() const;

  /// First `count` digits of an exact or stream leaf (terminated if the
  /// expansion ends within them). With `exhausted`, stream generation stops
  /// after a term longer than kMaxStreamTermBits and `*exhausted` is set.
  Expansion leaf_prefix(std::size_t count, bool* exhausted = nullptr) const;

  struct Impl;

 private:
  explicit Real(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  friend Real make_node(Real::Op op, std::vector<Real> children);

  std::shared_ptr<const Impl> impl_;
};

Real add(const Real& x, const Real& y);
Real neg(const Real& x);
Real sub(const Real& x, const Real& y);
Real mul(const Real& x, const Real& y);
/// Inverting an exact zero throws Error(inversion_of_zero); for other
/// operands the check is deferred to evaluation.
Real inv(const Real& x);
Real div(const Real& x, const Real& y);

/// X_n: the value of the first n digits (exact and stream leaves only).
Rational truncate(const Real& x, std::size_t n);

struct Enclosure {
  Rational lower;
  Rational upper;
  std::size_t terms_used = 1;
};

/// Refines `x` round by round (round r reads r digits of every stream leaf)
/// until upper - lower <= precision. Throws Error(budget_exceeded) after
/// `budget` rounds, and Error(inversion_of_zero) when an inverted operand
/// encloses to exactly [0, 0].
Enclosure enclose(const Real& x, const Rational& precision,
                  std::size_t budget = kDefaultRounds);

struct Undecided {
  std::size_t index;  // 0 for q0, n for a_n
};

using DigitsResult = std::variant<Expansion, Undecided>;

/// q0 and a_1..a_count of x. For nodes, a digit is emitted only when the
/// current enclosure certifies c/(a+1) < A_n <= c/a for every point, or the
/// enclosure has collapsed to a single rational. Stream leaves report
/// Undecided past a term longer than kMaxStreamTermBits.
DigitsResult digits(const Real& x, std::size_t count = kDefaultDigitCount,
                    std::size_t budget = kDefaultRounds);

/// Order with budget; Ordering::undecided when `budget` rounds cannot
/// separate x - y from zero.
Ordering compare(const Real& x, const Real& y, std::size_t budget = kDefaultRounds);

/// Supremum / infimum of a finite nonempty set by the digitwise
/// construction: fix the extreme q0, then alternately keep the members with
/// the largest and smallest q_k. Throws Error(invalid_expansion) for a member
/// whose digits fail check_T, Error(undecided, index = k) when the members
/// cannot be separated within `budget` digits.
Real sup_finite(std::span<const Real> xs, std::size_t budget = kDefaultDigitCount);
Real inf_finite(std::span<const Real> xs, std::size_t budget = kDefaultDigitCount);

/// n -> (a_n, b_n) for n >= 1.
using PairSequence = std::function<std::pair<Rational, Rational>(std::size_t n)>;

/// Finite evidence for "a_n - b_n tends to zero".
struct LEvidence {
  /// first_n[m - 1]: least N with |a_n - b_n| < 1/m for all N <= n <= probe.
  std::vector<std::optional<std::size_t>> first_n;
  /// Smallest m without such an N (counter-evidence), if any.
  std::optional<std::size_t> counter_m;

  bool holds() const { return !counter_m.has_value(); }
};

LEvidence check_L(const PairSequence& pairs, std::size_t m_max, std::size_t n_probe);

}  // namespace altsyl

#endif  // ALTSYL_REALFIELD_HPP
