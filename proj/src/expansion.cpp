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

#include "altsyl/expansion.hpp"

#include <utility>

#include "altsyl/error.hpp"

namespace altsyl {

std::optional<Step> step(const StepState& state, const BigInt& c) {
  const Rational& A = state.remainder;
  if (A.sign() < 0 || A > Rational(1)) {
    throw Error(ErrorCode::invalid_argument, "remainder must lie in [0, 1]");
  }
  if (A.is_zero()) {
    return std::nullopt;
  }
  // floor(c / A) with A = p/q is floor(c*q / p).
  BigInt a;
  const BigInt num = c * A.denominator();
  mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), A.numerator().get_mpz_t());
  Rational q(c, a);
  Rational next = q - A;
  return Step{std::move(a), std::move(q), StepState{std::move(next), state.index + 1}};
}

Expansion::Expansion(BigInt q0, std::vector<BigInt> terms, CSeq cseq,
                     bool terminated)
    : q0_(std::move(q0)),
      terms_(std::move(terms)),
      cseq_(std::move(cseq)),
      terminated_(terminated) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i] < 1) {
      throw Error(ErrorCode::invalid_expansion,
                  "term a_" + std::to_string(i + 1) + " must be positive", i + 1);
    }
  }
}

namespace {

std::vector<BigInt> parse_terms(std::string_view text, std::size_t offset) {
  std::vector<BigInt> terms;
  if (text.empty()) return terms;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos
                                              ? std::string_view::npos
                                              : comma - start);
    if (piece.empty() || piece[0] == '-' || piece[0] == '+') {
      throw ParseError(offset + start, "positive integer");
    }
    BigInt v = parse_integer(piece, offset + start);
    if (v < 1) {
      throw ParseError(offset + start, "positive integer");
    }
    terms.push_back(std::move(v));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return terms;
}

// "q0=<int> terms=<list> terminated|open"
Expansion parse_text_form(std::string_view text, const CSeq& cseq) {
  const auto sp1 = text.find(' ');
  if (sp1 == std::string_view::npos) throw ParseError(text.size(), "' terms='");
  const BigInt q0 = parse_integer(text.substr(3, sp1 - 3), 3);
  const auto rest = text.substr(sp1 + 1);
  if (rest.substr(0, 6) != "terms=") throw ParseError(sp1 + 1, "'terms='");
  const auto sp2 = rest.find(' ');
  if (sp2 == std::string_view::npos) throw ParseError(text.size(), "' terminated' or ' open'");
  const auto flag = rest.substr(sp2 + 1);
  bool terminated;
  if (flag == "terminated") {
    terminated = true;
  } else if (flag == "open") {
    terminated = false;
  } else {
    throw ParseError(sp1 + 1 + sp2 + 1, "'terminated' or 'open'");
  }
  return Expansion(q0, parse_terms(rest.substr(6, sp2 - 6), sp1 + 7), cseq,
                   terminated);
}

}  // namespace

Expansion Expansion::parse(std::string_view literal, const CSeq& cseq) {
  if (literal.substr(0, 3) == "q0=") {
    return parse_text_form(literal, cseq);
  }
  const auto semi = literal.find(';');
  if (semi == std::string_view::npos) {
    return Expansion(parse_integer(literal), {}, cseq, true);
  }
  const BigInt q0 = parse_integer(literal.substr(0, semi));
  auto rest = literal.substr(semi + 1);
  bool terminated = true;
  const auto semi2 = rest.find(';');
  if (semi2 != std::string_view::npos) {
    if (rest.substr(semi2 + 1) != "...") {
      throw ParseError(semi + 1 + semi2 + 1, "'...'");
    }
    terminated = false;
    rest = rest.substr(0, semi2);
  } else if (rest.empty()) {
    throw ParseError(semi + 1, "positive integer");
  }
  return Expansion(q0, parse_terms(rest, semi + 1), cseq, terminated);
}

Digit Expansion::digit(std::size_t n) const {
  if (n >= 1 && n <= terms_.size()) {
    return Digit{Digit::Kind::term, terms_[n - 1]};
  }
  return Digit{terminated_ ? Digit::Kind::zero : Digit::Kind::unknown, BigInt(0)};
}

Rational Expansion::q(std::size_t n) const {
  const Digit d = digit(n);
  switch (d.kind) {
    case Digit::Kind::term:
      return Rational(cseq_.eval(n), d.a);
    case Digit::Kind::zero:
      return Rational(0);
    case Digit::Kind::unknown:
      break;
  }
  throw Error(ErrorCode::not_exact,
              "term " + std::to_string(n) + " lies past an open prefix", n);
}

Expansion Expansion::prefix(std::size_t count) const {
  if (count >= terms_.size()) {
    return *this;
  }
  return Expansion(q0_, std::vector<BigInt>(terms_.begin(), terms_.begin() + count),
                   cseq_, false);
}

namespace {

std::string join_terms(const std::vector<BigInt>& terms) {
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) s += ',';
    s += terms[i].get_str();
  }
  return s;
}

}  // namespace

std::string Expansion::to_text() const {
  return "q0=" + q0_.get_str() + " terms=" + join_terms(terms_) +
         (terminated_ ? " terminated" : " open");
}

std::string Expansion::to_literal() const {
  std::string s = q0_.get_str();
  if (!terms_.empty() || !terminated_) {
    s += ";" + join_terms(terms_);
  }
  if (!terminated_) s += ";...";
  return s;
}

bool operator==(const Expansion& x, const Expansion& y) {
  return x.q0_ == y.q0_ && x.terminated_ == y.terminated_ &&
         x.terms_ == y.terms_ && x.cseq_ == y.cseq_;
}

Expansion expand_rational(const Rational& alpha, const CSeq& cseq,
                          std::size_t max_terms) {
  BigInt q0 = alpha.floor();
  StepState state{alpha - Rational(q0), 1};
  std::vector<BigInt> terms;
  while (!state.remainder.is_zero()) {
    if (terms.size() >= max_terms) {
      throw Error(ErrorCode::budget_exceeded,
                  "expansion did not terminate within " +
                      std::to_string(max_terms) + " terms",
                  max_terms);
    }
    auto s = step(state, cseq.eval(state.index));
    terms.push_back(std::move(s->a));
    state = std::move(s->next);
  }
  return Expansion(std::move(q0), std::move(terms), cseq, true);
}

Expansion expand_prefix(const Rational& alpha, const CSeq& cseq, std::size_t count) {
  BigInt q0 = alpha.floor();
  StepState state{alpha - Rational(q0), 1};
  std::vector<BigInt> terms;
  while (!state.remainder.is_zero() && terms.size() < count) {
    auto s = step(state, cseq.eval(state.index));
    terms.push_back(std::move(s->a));
    state = std::move(s->next);
  }
  const bool ended = state.remainder.is_zero();
  return Expansion(std::move(q0), std::move(terms), cseq, ended);
}

Rational reconstruct(const Expansion& e, std::size_t upto) {
  const std::size_t m = std::min(upto, e.size());
  mpq_class sum(e.q0());
  for (std::size_t k = 1; k <= m; ++k) {
    mpq_class term(e.cseq().eval(k), e.terms()[k - 1]);
    term.canonicalize();
    if (k % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return Rational(sum.get_num(), sum.get_den());
}

Bracket tail_remainder(const Expansion& e, std::size_t n, std::size_t upto) {
  if (n == 0) {
    throw Error(ErrorCode::invalid_argument, "remainder index starts at 1");
  }
  Rational partial(0);
  std::size_t used = 0;
  for (; used < upto; ++used) {
    const std::size_t k = n + used;
    const Digit d = e.digit(k);
    if (d.kind != Digit::Kind::term) break;
    const Rational qk(e.cseq().eval(k), d.a);
    partial += (used % 2 == 0) ? qk : -qk;
  }
  // Enclose A_{n+used}.
  const std::size_t k = n + used;
  const Digit d = e.digit(k);
  Rational lo(0), hi(0);
  switch (d.kind) {
    case Digit::Kind::zero:
      break;
    case Digit::Kind::unknown:
      hi = Rational(1);
      break;
    case Digit::Kind::term: {
      const BigInt c = e.cseq().eval(k);
      hi = Rational(c, d.a);
      lo = (e.terminated() && k == e.size()) ? hi : Rational(c, d.a + 1);
      break;
    }
  }
  if (used % 2 == 0) {
    return {partial + lo, partial + hi};
  }
  return {partial - hi, partial - lo};
}

}  // namespace altsyl
