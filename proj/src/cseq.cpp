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

#include "altsyl/cseq.hpp"

#include <algorithm>
#include <mutex>

#include "altsyl/error.hpp"

namespace altsyl {

struct CSeq::Cache {
  std::mutex mutex;
  std::vector<BigInt> values;       // values[i] = c_{i+1}
  std::size_t chain_verified = 1;   // c_{k-1} | c_k checked for all k <= this
};

namespace {

void require_positive(const BigInt& v, const char* what) {
  if (v < 1) {
    throw Error(ErrorCode::invalid_argument,
                std::string(what) + " must be a positive integer");
  }
}

BigInt eval_tail(const TailRule& rule, std::size_t n) {
  if (const auto* c = std::get_if<ConstantRule>(&rule)) {
    return c->k;
  }
  const auto& g = std::get<GeometricRule>(rule);
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), g.l.get_mpz_t(),
             static_cast<unsigned long>(n + g.shift));
  return r;
}

std::string render_tail(const TailRule& rule) {
  if (const auto* c = std::get_if<ConstantRule>(&rule)) {
    return "const:" + c->k.get_str();
  }
  const auto& g = std::get<GeometricRule>(rule);
  std::string s = "pow:" + g.l.get_str();
  if (g.shift != 0) {
    s += "+" + std::to_string(g.shift);
  }
  return s;
}

void validate_tail(const TailRule& rule) {
  if (const auto* c = std::get_if<ConstantRule>(&rule)) {
    require_positive(c->k, "const value");
  } else {
    require_positive(std::get<GeometricRule>(rule).l, "pow base");
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SeqRule parse() {
    SeqRule rule;
    if (consume("list:")) {
      ExplicitRule ex;
      ex.prefix.push_back(positive());
      while (consume(",")) {
        ex.prefix.push_back(positive());
      }
      if (consume(";")) {
        expect("tail:");
        ex.tail = tail();
      }
      rule = std::move(ex);
    } else if (at("const:") || at("pow:")) {
      const TailRule t = tail();
      if (const auto* c = std::get_if<ConstantRule>(&t)) {
        rule = *c;
      } else {
        rule = std::get<GeometricRule>(t);
      }
    } else {
      throw ParseError(pos_, "'const:', 'pow:' or 'list:'");
    }
    if (pos_ != text_.size()) {
      throw ParseError(pos_, "end of input");
    }
    return rule;
  }

 private:
  bool at(std::string_view token) const {
    return text_.substr(pos_, token.size()) == token;
  }

  bool consume(std::string_view token) {
    if (!at(token)) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!consume(token)) {
      throw ParseError(pos_, "'" + std::string(token) + "'");
    }
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      ++pos_;
    }
    if (pos_ == start) {
      throw ParseError(pos_, "positive integer");
    }
    return text_.substr(start, pos_ - start);
  }

  BigInt positive() {
    const std::size_t start = pos_;
    BigInt v(std::string(digits()), 10);
    if (v < 1) {
      throw ParseError(start, "positive integer");
    }
    return v;
  }

  TailRule tail() {
    if (consume("const:")) {
      return ConstantRule{positive()};
    }
    if (consume("pow:")) {
      GeometricRule g{positive(), 0};
      if (consume("+")) {
        const std::size_t start = pos_;
        const std::string s(digits());
        if (s.size() > 18) {
          throw ParseError(start, "shift below 10^18");
        }
        g.shift = std::stoull(s);
      }
      return g;
    }
    throw ParseError(pos_, "'const:' or 'pow:'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

CSeq::CSeq(SeqRule rule, bool divisor_chain_required)
    : rule_(std::move(rule)),
      chain_required_(divisor_chain_required),
      cache_(std::make_shared<Cache>()) {
  std::visit(
      [](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, ExplicitRule>) {
          if (r.prefix.empty()) {
            throw Error(ErrorCode::invalid_argument, "list rule needs a value");
          }
          for (const auto& v : r.prefix) require_positive(v, "list value");
          if (r.tail) validate_tail(*r.tail);
        } else {
          validate_tail(TailRule(r));
        }
      },
      rule_);
}

CSeq CSeq::constant(const BigInt& k) { return CSeq(ConstantRule{k}); }

CSeq CSeq::geometric(const BigInt& l, std::uint64_t shift) {
  return CSeq(GeometricRule{l, shift});
}

CSeq CSeq::parse(std::string_view text, bool divisor_chain_required) {
  return CSeq(Parser(text).parse(), divisor_chain_required);
}

CSeq CSeq::with_divisor_chain(bool required) const {
  CSeq copy(rule_, required);
  return copy;
}

BigInt CSeq::compute(std::size_t n) const {
  if (const auto* ex = std::get_if<ExplicitRule>(&rule_)) {
    if (n <= ex->prefix.size()) {
      return ex->prefix[n - 1];
    }
    return ex->tail ? eval_tail(*ex->tail, n) : ex->prefix.back();
  }
  if (const auto* c = std::get_if<ConstantRule>(&rule_)) {
    return eval_tail(*c, n);
  }
  return eval_tail(std::get<GeometricRule>(rule_), n);
}

BigInt CSeq::cached(std::size_t n) const {
  std::lock_guard lock(cache_->mutex);
  auto& values = cache_->values;
  while (values.size() < n) {
    values.push_back(compute(values.size() + 1));
  }
  return values[n - 1];
}

BigInt CSeq::eval(std::size_t n) const {
  if (n == 0) {
    throw Error(ErrorCode::invalid_argument, "cseq index starts at 1");
  }
  BigInt value = cached(n);
  if (chain_required_) {
    std::size_t verified;
    {
      std::lock_guard lock(cache_->mutex);
      verified = cache_->chain_verified;
    }
    for (std::size_t k = std::max<std::size_t>(verified + 1, 2); k <= n; ++k) {
      if (!mpz_divisible_p(cached(k).get_mpz_t(), cached(k - 1).get_mpz_t())) {
        throw Error(ErrorCode::divisor_chain_violation,
                    "divisor chain violated: c_" + std::to_string(k - 1) +
                        " does not divide c_" + std::to_string(k),
                    k);
      }
      std::lock_guard lock(cache_->mutex);
      cache_->chain_verified = std::max(cache_->chain_verified, k);
    }
  }
  return value;
}

std::optional<std::size_t> CSeq::first_chain_violation(std::size_t upto) const {
  if (upto < 2) return std::nullopt;
  BigInt prev = cached(1);
  for (std::size_t k = 2; k <= upto; ++k) {
    BigInt cur = cached(k);
    if (!mpz_divisible_p(cur.get_mpz_t(), prev.get_mpz_t())) {
      return k;
    }
    prev = std::move(cur);
  }
  return std::nullopt;
}

std::string CSeq::render() const {
  if (const auto* ex = std::get_if<ExplicitRule>(&rule_)) {
    std::string s = "list:";
    for (std::size_t i = 0; i < ex->prefix.size(); ++i) {
      if (i) s += ",";
      s += ex->prefix[i].get_str();
    }
    if (ex->tail) {
      s += ";tail:" + render_tail(*ex->tail);
    }
    return s;
  }
  if (const auto* c = std::get_if<ConstantRule>(&rule_)) {
    return render_tail(*c);
  }
  return render_tail(std::get<GeometricRule>(rule_));
}

}  // namespace altsyl
