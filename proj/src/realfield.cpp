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

#include "altsyl/realfield.hpp"

#include <algorithm>
#include <mutex>

#include "altsyl/error.hpp"

namespace altsyl {

namespace {

class StreamState {
 public:
  // With `lookahead`, one term past a requested prefix is generated so that
  // a prefix ending exactly at the last term is reported as terminated.
  StreamState(BigInt q0, TermGenerator gen, CSeq cseq, bool lookahead)
      : q0_(std::move(q0)), gen_(std::move(gen)), cseq_(std::move(cseq)),
        lookahead_(lookahead) {}

  // Up to `count` digits. With `guarded`, generation stops once the last
  // known term exceeds kMaxStreamTermBits and `*exhausted` is set.
  Expansion prefix(std::size_t count, bool guarded = false,
                   bool* exhausted = nullptr) {
    std::lock_guard lock(mutex_);
    const std::size_t want =
        lookahead_ && count != kAllTerms ? count + 1 : count;
    while (terms_.size() < want && !ended_) {
      if (guarded && !terms_.empty() &&
          mpz_sizeinbase(terms_.back().get_mpz_t(), 2) > kMaxStreamTermBits) {
        if (exhausted) *exhausted = true;
        break;
      }
      const std::size_t n = terms_.size() + 1;
      auto t = gen_(n);
      if (!t) {
        ended_ = true;
        break;
      }
      if (*t < 1) {
        throw Error(ErrorCode::invalid_expansion,
                    "stream term a_" + std::to_string(n) + " is not positive", n);
      }
      terms_.push_back(std::move(*t));
    }
    const std::size_t m = std::min(count, terms_.size());
    return Expansion(q0_, std::vector<BigInt>(terms_.begin(), terms_.begin() + m),
                     cseq_, ended_ && m == terms_.size());
  }

 private:
  BigInt q0_;
  TermGenerator gen_;
  CSeq cseq_;
  std::mutex mutex_;
  bool lookahead_;
  std::vector<BigInt> terms_;
  bool ended_ = false;
};

}  // namespace

struct Real::Impl {
  explicit Impl(CSeq c) : cseq(std::move(c)) {}

  CSeq cseq;
  Kind kind = Kind::exact;
  std::optional<Rational> value;
  std::shared_ptr<StreamState> stream;  // digits of exact and stream leaves
  Op op = Op::add;
  std::vector<Real> children;
};

Rational default_precision() {
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, 128);
  return Rational(BigInt(1), den);
}

Real Real::exact(const Rational& value, const CSeq& cseq) {
  auto impl = std::make_shared<Impl>(cseq.with_divisor_chain(true));
  impl->kind = Kind::exact;
  impl->value = value;
  const BigInt q0 = value.floor();
  auto state = std::make_shared<StepState>(StepState{value - Rational(q0), 1});
  const CSeq c = impl->cseq;
  impl->stream = std::make_shared<StreamState>(
      q0,
      [state, c](std::size_t n) -> std::optional<BigInt> {
        auto s = step(*state, c.eval(n));
        if (!s) return std::nullopt;
        *state = std::move(s->next);
        return std::move(s->a);
      },
      impl->cseq, true);
  return Real(std::move(impl));
}

Real Real::from_expansion(const Expansion& e) {
  if (!e.terminated()) {
    throw Error(ErrorCode::not_exact,
                "an open prefix does not determine a real; use a stream");
  }
  const TCheckReport report = check_T(e);
  if (!report.valid) {
    throw Error(ErrorCode::invalid_expansion,
                "expansion violates " + std::string(condition_name(*report.violated)) +
                    " at index " + std::to_string(report.index.value_or(0)),
                report.index.value_or(0));
  }
  return exact(reconstruct(e), e.cseq());
}

Real Real::stream(BigInt q0, TermGenerator terms, const CSeq& cseq) {
  auto impl = std::make_shared<Impl>(cseq.with_divisor_chain(true));
  impl->kind = Kind::stream;
  impl->stream =
      std::make_shared<StreamState>(std::move(q0), std::move(terms), impl->cseq, false);
  return Real(std::move(impl));
}

Real::Kind Real::kind() const { return impl_->kind; }
const CSeq& Real::cseq() const { return impl_->cseq; }

const Rational* Real::exact_value() const {
  return impl_->value ? &*impl_->value : nullptr;
}

std::optional<Expansion> Real::exact_expansion() const {
  if (!impl_->value) return std::nullopt;
  return impl_->stream->prefix(kAllTerms);
}

Real::Op Real::op() const { return impl_->op; }
const std::vector<Real>& Real::children() const { return impl_->children; }

Expansion Real::leaf_prefix(std::size_t count, bool* exhausted) const {
  switch (impl_->kind) {
    case Kind::exact:
    case Kind::stream:
      return impl_->stream->prefix(count, exhausted != nullptr, exhausted);
    case Kind::node:
      break;
  }
  throw Error(ErrorCode::invalid_argument, "operation nodes have no stored digits");
}

Real make_node(Real::Op op, std::vector<Real> children) {
  for (const auto& c : children) {
    if (!(c.cseq() == children.front().cseq())) {
      throw Error(ErrorCode::cseq_mismatch, "operands use different cseqs");
    }
  }
  auto impl = std::make_shared<Real::Impl>(children.front().cseq());
  impl->kind = Real::Kind::node;
  impl->op = op;
  impl->children = std::move(children);
  return Real(std::move(impl));
}

namespace {

void require_same_cseq(const Real& x, const Real& y) {
  if (!(x.cseq() == y.cseq())) {
    throw Error(ErrorCode::cseq_mismatch, "operands use different cseqs");
  }
}

}  // namespace

Real add(const Real& x, const Real& y) {
  require_same_cseq(x, y);
  if (x.exact_value() && y.exact_value()) {
    return Real::exact(*x.exact_value() + *y.exact_value(), x.cseq());
  }
  return make_node(Real::Op::add, {x, y});
}

Real neg(const Real& x) {
  if (x.exact_value()) {
    return Real::exact(-*x.exact_value(), x.cseq());
  }
  return make_node(Real::Op::neg, {x});
}

Real sub(const Real& x, const Real& y) { return add(x, neg(y)); }

Real mul(const Real& x, const Real& y) {
  require_same_cseq(x, y);
  if (x.exact_value() && y.exact_value()) {
    return Real::exact(*x.exact_value() * *y.exact_value(), x.cseq());
  }
  return make_node(Real::Op::mul, {x, y});
}

Real inv(const Real& x) {
  if (const Rational* v = x.exact_value()) {
    if (v->is_zero()) {
      throw Error(ErrorCode::inversion_of_zero, "inverse of zero");
    }
    return Real::exact(v->reciprocal(), x.cseq());
  }
  return make_node(Real::Op::inv, {x});
}

Real div(const Real& x, const Real& y) { return mul(x, inv(y)); }

Rational truncate(const Real& x, std::size_t n) {
  return reconstruct(x.leaf_prefix(n), n);
}

namespace {

struct Round {
  std::optional<Bracket> iv;  // nullopt: unbounded at this round
  std::size_t terms_used = 1;
  bool exhausted = false;
};

Bracket negate(const Bracket& b) { return {-b.upper, -b.lower}; }

bool nonneg(const Bracket& b) { return b.lower.sign() >= 0; }
bool nonpos(const Bracket& b) { return b.upper.sign() <= 0; }

Bracket multiply(const Bracket& x, const Bracket& y) {
  if (nonneg(x) && nonneg(y)) {
    return {x.lower * y.lower, x.upper * y.upper};
  }
  if (nonpos(x) && nonpos(y)) {
    return multiply(negate(x), negate(y));
  }
  if (nonpos(x) && nonneg(y)) {
    return negate(multiply(negate(x), y));
  }
  if (nonneg(x) && nonpos(y)) {
    return negate(multiply(x, negate(y)));
  }
  // Sign of an operand not resolved at this round.
  const Rational p[] = {x.lower * y.lower, x.lower * y.upper, x.upper * y.lower,
                        x.upper * y.upper};
  return {*std::min_element(std::begin(p), std::end(p)),
          *std::max_element(std::begin(p), std::end(p))};
}

std::optional<Bracket> invert(const Bracket& x) {
  if (x.lower.is_zero() && x.upper.is_zero()) {
    throw Error(ErrorCode::inversion_of_zero, "inverse of zero");
  }
  if (x.lower.sign() > 0) {
    return Bracket{x.upper.reciprocal(), x.lower.reciprocal()};
  }
  if (x.upper.sign() < 0) {
    return negate(*invert(negate(x)));
  }
  return std::nullopt;
}

Round eval_round(const Real& x, std::size_t r) {
  Round out;
  switch (x.kind()) {
    case Real::Kind::exact:
      out.iv = Bracket{*x.exact_value(), *x.exact_value()};
      return out;
    case Real::Kind::stream: {
      const Expansion p = x.leaf_prefix(r, &out.exhausted);
      out.terms_used = std::max<std::size_t>(p.size(), 1);
      if (p.terminated()) {
        const Rational v = reconstruct(p);
        out.iv = Bracket{v, v};
        out.exhausted = false;
        return out;
      }
      const std::size_t m = p.size();
      Rational a = reconstruct(p, m);
      Rational b = m == 0 ? Rational(p.q0()) + Rational(1) : reconstruct(p, m - 1);
      if (b < a) std::swap(a, b);
      out.iv = Bracket{std::move(a), std::move(b)};
      return out;
    }
    case Real::Kind::node:
      break;
  }
  std::vector<Round> kids;
  for (const auto& c : x.children()) {
    kids.push_back(eval_round(c, r));
    out.terms_used = std::max(out.terms_used, kids.back().terms_used);
    out.exhausted = out.exhausted || kids.back().exhausted;
  }
  for (const auto& k : kids) {
    if (!k.iv) return out;
  }
  switch (x.op()) {
    case Real::Op::add:
      out.iv = Bracket{kids[0].iv->lower + kids[1].iv->lower,
                       kids[0].iv->upper + kids[1].iv->upper};
      break;
    case Real::Op::neg:
      out.iv = negate(*kids[0].iv);
      break;
    case Real::Op::mul:
      out.iv = multiply(*kids[0].iv, *kids[1].iv);
      break;
    case Real::Op::inv:
      out.iv = invert(*kids[0].iv);
      break;
  }
  return out;
}

}  // namespace

Enclosure enclose(const Real& x, const Rational& precision, std::size_t budget) {
  if (precision.sign() <= 0) {
    throw Error(ErrorCode::invalid_argument, "precision must be positive");
  }
  for (std::size_t r = 1; r <= budget; ++r) {
    Round rd = eval_round(x, r);
    if (rd.iv && rd.iv->upper - rd.iv->lower <= precision) {
      return Enclosure{std::move(rd.iv->lower), std::move(rd.iv->upper),
                       rd.terms_used};
    }
    if (rd.exhausted) break;
  }
  throw Error(ErrorCode::budget_exceeded,
              "enclosure did not reach the requested precision", budget);
}

namespace {

// Digits certified by every point of [lower, upper].
DigitsResult extract(const Bracket& iv, const CSeq& cseq, std::size_t count) {
  const BigInt q0 = iv.lower.floor();
  if (iv.upper.floor() != q0) {
    return Undecided{0};
  }
  Rational lo = iv.lower - Rational(q0);
  Rational hi = iv.upper - Rational(q0);
  std::vector<BigInt> terms;
  for (std::size_t n = 1; n <= count; ++n) {
    if (lo.sign() <= 0) {
      return Undecided{n};
    }
    const BigInt c = cseq.eval(n);
    BigInt a;
    const BigInt num = c * hi.denominator();
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), hi.numerator().get_mpz_t());
    // hi <= c/a by the choice of a; the whole interval shares the digit iff
    // c/(a+1) < lo as well.
    if (!(Rational(c, a + 1) < lo)) {
      return Undecided{n};
    }
    const Rational q(c, a);
    Rational next_lo = q - hi;
    hi = q - lo;
    lo = std::move(next_lo);
    terms.push_back(std::move(a));
  }
  return Expansion(q0, std::move(terms), cseq, false);
}

}  // namespace

DigitsResult digits(const Real& x, std::size_t count, std::size_t budget) {
  if (x.kind() != Real::Kind::node) {
    bool exhausted = false;
    Expansion p = x.leaf_prefix(count, &exhausted);
    if (exhausted && p.size() < count) return Undecided{p.size() + 1};
    return p;
  }
  std::size_t best = 0;
  for (std::size_t r = 1; r <= budget; ++r) {
    const Round rd = eval_round(x, r);
    if (rd.iv) {
      if (rd.iv->lower == rd.iv->upper) {
        return expand_prefix(rd.iv->lower, x.cseq(), count);
      }
      DigitsResult res = extract(*rd.iv, x.cseq(), count);
      if (std::holds_alternative<Expansion>(res)) {
        return res;
      }
      best = std::max(best, std::get<Undecided>(res).index);
    }
    if (rd.exhausted) break;
  }
  return Undecided{best};
}

Ordering compare(const Real& x, const Real& y, std::size_t budget) {
  const Real d = sub(x, y);
  for (std::size_t r = 1; r <= budget; ++r) {
    const Round rd = eval_round(d, r);
    if (rd.iv) {
      if (rd.iv->lower.sign() > 0) return Ordering::greater;
      if (rd.iv->upper.sign() < 0) return Ordering::less;
      if (rd.iv->lower.is_zero() && rd.iv->upper.is_zero()) return Ordering::equal;
    }
    if (rd.exhausted) break;
  }
  return Ordering::undecided;
}

namespace {

// q_k of one member is below q_k of another: zero is lowest, otherwise the
// larger denominator gives the smaller q (c_k is shared).
bool q_less(const Digit& x, const Digit& y) {
  if (x.kind == Digit::Kind::zero) return y.kind != Digit::Kind::zero;
  if (y.kind == Digit::Kind::zero) return false;
  return x.a > y.a;
}

// Digits of one member, fetched only as deep as the elimination needs and
// validated with check_T each time they grow.
class MemberDigits {
 public:
  MemberDigits(const Real& x, std::size_t budget) : x_(x), budget_(budget) {}

  // Digit k (0 for q0) if it could be obtained within the budget.
  Digit at(std::size_t k) {
    if (!digits_ || (!digits_->digit(k).known() && !stuck_)) fetch(k);
    if (k == 0) return Digit{Digit::Kind::term, digits_->q0()};
    return digits_->digit(k);
  }

  const BigInt& q0() {
    at(0);
    return digits_->q0();
  }

 private:
  void fetch(std::size_t k) {
    const std::size_t want = std::max<std::size_t>(2 * k, 4);
    if (x_.kind() != Real::Kind::node) {
      bool exhausted = false;
      digits_ = x_.leaf_prefix(want, &exhausted);
      stuck_ = exhausted;
    } else {
      DigitsResult res = digits(x_, want, budget_);
      if (auto* u = std::get_if<Undecided>(&res)) {
        if (u->index == 0) {
          throw Error(ErrorCode::undecided, "integer part of a member is undecided", 0);
        }
        res = digits(x_, u->index - 1, budget_);
        stuck_ = true;
      }
      digits_ = std::get<Expansion>(std::move(res));
    }
    const TCheckReport report = check_T(*digits_, digits_->size());
    if (!report.valid) {
      throw Error(ErrorCode::invalid_expansion,
                  "member violates " + std::string(condition_name(*report.violated)) +
                      " at index " + std::to_string(report.index.value_or(0)),
                  report.index.value_or(0));
    }
  }

  const Real& x_;
  std::size_t budget_;
  std::optional<Expansion> digits_;
  bool stuck_ = false;
};

Real extreme(std::span<const Real> xs, std::size_t budget, bool supremum) {
  if (xs.empty()) {
    throw Error(ErrorCode::invalid_argument, "sup/inf of an empty set");
  }
  std::vector<MemberDigits> digs;
  digs.reserve(xs.size());
  for (const auto& x : xs) {
    if (!(x.cseq() == xs.front().cseq())) {
      throw Error(ErrorCode::cseq_mismatch, "members use different cseqs");
    }
    digs.emplace_back(x, budget);
  }
  for (auto& d : digs) d.at(1);

  std::vector<std::size_t> alive(xs.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;

  auto keep = [&](auto&& better) {
    std::size_t best = alive.front();
    for (std::size_t i : alive) {
      if (better(i, best)) best = i;
    }
    std::vector<std::size_t> next;
    for (std::size_t i : alive) {
      if (!better(i, best) && !better(best, i)) next.push_back(i);
    }
    alive = std::move(next);
  };

  keep([&](std::size_t i, std::size_t j) {
    return supremum ? digs[i].q0() > digs[j].q0() : digs[i].q0() < digs[j].q0();
  });
  for (std::size_t k = 1; alive.size() > 1; ++k) {
    bool all_exact = true;
    for (std::size_t i : alive) all_exact = all_exact && xs[i].exact_value();
    if (!all_exact && k > budget) {
      throw Error(ErrorCode::undecided,
                  "members agree on the first " + std::to_string(budget) + " digits", k);
    }
    std::vector<Digit> d(xs.size());
    bool all_zero = true;
    for (std::size_t i : alive) {
      d[i] = digs[i].at(k);
      if (!d[i].known()) {
        throw Error(ErrorCode::undecided,
                    "digit " + std::to_string(k) + " of a member is undecided", k);
      }
      all_zero = all_zero && d[i].kind == Digit::Kind::zero;
    }
    if (all_zero) break;
    // Odd k: the larger q_k is the larger number; even k: the smaller one.
    const bool want_large_q = (k % 2 == 1) == supremum;
    keep([&](std::size_t i, std::size_t j) {
      return want_large_q ? q_less(d[j], d[i]) : q_less(d[i], d[j]);
    });
  }
  return xs[alive.front()];
}

}  // namespace

Real sup_finite(std::span<const Real> xs, std::size_t budget) {
  return extreme(xs, budget, true);
}

Real inf_finite(std::span<const Real> xs, std::size_t budget) {
  return extreme(xs, budget, false);
}

LEvidence check_L(const PairSequence& pairs, std::size_t m_max, std::size_t n_probe) {
  std::vector<Rational> tail_max(n_probe + 2, Rational(0));
  for (std::size_t n = 1; n <= n_probe; ++n) {
    const auto [a, b] = pairs(n);
    tail_max[n] = (a - b).abs();
  }
  for (std::size_t n = n_probe; n >= 1; --n) {
    tail_max[n] = max(tail_max[n], tail_max[n + 1]);
  }
  LEvidence ev;
  ev.first_n.reserve(m_max);
  std::size_t n = 1;
  for (std::size_t m = 1; m <= m_max; ++m) {
    // tail_max is non-increasing in n and the threshold shrinks with m, so the
    // least N only moves forward.
    const Rational bound(BigInt(1), BigInt(static_cast<unsigned long>(m)));
    while (n <= n_probe && !(tail_max[n] < bound)) ++n;
    if (n > n_probe) {
      ev.first_n.emplace_back(std::nullopt);
      if (!ev.counter_m) ev.counter_m = m;
    } else {
      ev.first_n.emplace_back(n);
    }
  }
  return ev;
}

}  // namespace altsyl
