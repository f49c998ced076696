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

#ifndef ALTSYL_CSEQ_HPP
#define ALTSYL_CSEQ_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "altsyl/rational.hpp"

namespace altsyl {

// c_n = k for every n.
struct ConstantRule {
  BigInt k;
  bool operator==(const ConstantRule& o) const { return k == o.k; }
};

// c_n = l^(n + shift). Rendered as `pow:<l>` or `pow:<l>+<shift>`.
struct GeometricRule {
  BigInt l;
  std::uint64_t shift = 0;
  bool operator==(const GeometricRule& o) const {
    return l == o.l && shift == o.shift;
  }
};

using TailRule = std::variant<ConstantRule, GeometricRule>;

// c_1..c_m taken from `prefix`; later indices come from `tail` evaluated at
// the absolute index n. Without a tail the last listed value repeats.
struct ExplicitRule {
  std::vector<BigInt> prefix;
  std::optional<TailRule> tail;
  bool operator==(const ExplicitRule& o) const {
    return prefix == o.prefix && tail == o.tail;
  }
};

using SeqRule = std::variant<ConstantRule, GeometricRule, ExplicitRule>;

/// The multiplier sequence {c_n}, n >= 1.
///
/// Values are memoized in a cache shared by copies of the same CSeq; the cache
/// is guarded by a mutex, so `eval` may be called concurrently and every value
/// is computed once.
///
/// When `divisor_chain_required()` is set, `eval(n)` verifies c_{k-1} | c_k
/// for every k <= n not yet verified and throws
/// Error(divisor_chain_violation, index = k) at the first failure.
class CSeq {
 public:
  explicit CSeq(SeqRule rule, bool divisor_chain_required = false);

  static CSeq constant(const BigInt& k);
  static CSeq geometric(const BigInt& l, std::uint64_t shift = 0);
  /// Grammar: `const:<k>` | `pow:<l>[+<s>]` |
  /// `list:<k1>,<k2>,...[;tail:(const:<k>|pow:<l>[+<s>])]`.
  static CSeq parse(std::string_view text, bool divisor_chain_required = false);

  const SeqRule& rule() const { return rule_; }
  bool divisor_chain_required() const { return chain_required_; }
  CSeq with_divisor_chain(bool required) const;

  /// c_n for n >= 1.
  BigInt eval(std::size_t n) const;

  /// First k in [2, upto] with c_{k-1} not dividing c_k, independent of the
  /// divisor-chain flag.
  std::optional<std::size_t> first_chain_violation(std::size_t upto) const;

  std::string render() const;

  /// Rule equality; the divisor-chain flag is not part of the identity.
  friend bool operator==(const CSeq& x, const CSeq& y) { return x.rule_ == y.rule_; }

 private:
  struct Cache;

  BigInt compute(std::size_t n) const;
  BigInt cached(std::size_t n) const;

  SeqRule rule_;
  bool chain_required_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace altsyl

#endif  // ALTSYL_CSEQ_HPP
