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

#include "altsyl/irrational.hpp"

#include <mutex>
#include <string>

#include "altsyl/canon.hpp"
#include "altsyl/error.hpp"
#include "altsyl/expansion.hpp"

namespace altsyl {

struct GrowthSeq::State {
  Rational K;
  bool explicit_only = false;
  std::mutex mutex;
  std::vector<BigInt> terms;
};

namespace {

BigInt ceil_div(const BigInt& num, const BigInt& den) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

BigInt power(std::uint64_t base, std::size_t exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

void require_K(const Rational& K) {
  if (K < Rational(1)) {
    throw Error(ErrorCode::invalid_argument, "growth factor K must be >= 1");
  }
}

}  // namespace

GrowthSeq GrowthSeq::from_terms(std::vector<BigInt> terms, const Rational& K) {
  require_K(K);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i] < 1) {
      throw Error(ErrorCode::invalid_argument,
                  "term p_" + std::to_string(i + 1) + " must be positive", i + 1);
    }
  }
  auto s = std::make_shared<State>();
  s->K = K;
  s->explicit_only = true;
  s->terms = std::move(terms);
  return GrowthSeq(std::move(s));
}

GrowthSeq GrowthSeq::recurrence(const BigInt& first, const Rational& K) {
  require_K(K);
  if (first < 1) {
    throw Error(ErrorCode::invalid_argument, "first term must be positive");
  }
  auto s = std::make_shared<State>();
  s->K = K;
  s->terms.push_back(first);
  return GrowthSeq(std::move(s));
}

GrowthSeq GrowthSeq::named(std::string_view name) {
  if (name == "sylvester") {
    return recurrence(BigInt(2), Rational(1));
  }
  constexpr std::string_view prefix = "sylvesterK:";
  if (name.substr(0, prefix.size()) == prefix) {
    const BigInt k = parse_integer(name.substr(prefix.size()), prefix.size());
    if (k < 1) throw ParseError(prefix.size(), "positive integer");
    return recurrence(BigInt(1), Rational(k));
  }
  throw ParseError(0, "'sylvester' or 'sylvesterK:<k>'");
}

const Rational& GrowthSeq::K() const { return state_->K; }

BigInt GrowthSeq::term(std::size_t n) const {
  if (n == 0) {
    throw Error(ErrorCode::invalid_argument, "sequence index starts at 1");
  }
  std::lock_guard lock(state_->mutex);
  auto& t = state_->terms;
  if (state_->explicit_only && n > t.size()) {
    throw Error(ErrorCode::invalid_argument,
                "explicit sequence has only " + std::to_string(t.size()) + " terms", n);
  }
  while (t.size() < n) {
    const BigInt& p = t.back();
    t.push_back(ceil_div(state_->K.numerator() * p * (p + 1), state_->K.denominator()));
  }
  return t[n - 1];
}

std::vector<BigInt> GrowthSeq::prefix(std::size_t count) const {
  std::vector<BigInt> out;
  out.reserve(count);
  for (std::size_t n = 1; n <= count; ++n) out.push_back(term(n));
  return out;
}

PKResult check_PK(std::span<const BigInt> terms, const Rational& K, std::size_t probe) {
  if (probe < 2) {
    throw Error(ErrorCode::invalid_argument, "probe must be at least 2");
  }
  if (terms.size() < probe) {
    throw Error(ErrorCode::invalid_argument,
                "need " + std::to_string(probe) + " terms to probe");
  }
  std::size_t last_violation = 0;
  for (std::size_t n = 1; n < probe; ++n) {
    const BigInt& p = terms[n - 1];
    if (terms[n] * K.denominator() < K.numerator() * p * (p + 1)) {
      last_violation = n;
    }
  }
  if (last_violation == probe - 1) {
    return PKResult{false, last_violation};
  }
  return PKResult{true, last_violation + 1};
}

PKResult check_PK(const GrowthSeq& seq, const Rational& K, std::size_t probe) {
  const auto terms = seq.prefix(probe);
  return check_PK(terms, K, probe);
}

Rational eval_f(const GrowthSeq& seq, const BigInt& z, std::size_t terms) {
  if (terms == 0) {
    throw Error(ErrorCode::invalid_argument, "need at least one term");
  }
  mpq_class sum(0);
  BigInt zn(1);
  for (std::size_t n = 1; n <= terms; ++n) {
    zn *= z;
    mpq_class t(zn, seq.term(n));
    t.canonicalize();
    sum += t;
  }
  return Rational(sum.get_num(), sum.get_den());
}

Certificate certify(const GrowthSeq& seq, std::uint64_t l, std::size_t prefix) {
  if (l == 0 || prefix == 0) {
    throw Error(ErrorCode::invalid_argument, "l and prefix must be positive");
  }
  const Rational& K = seq.K();
  if (K.floor() < BigInt(static_cast<unsigned long>(l))) {
    throw Error(ErrorCode::l_exceeds_k,
                "l = " + std::to_string(l) + " exceeds floor(K) = " + K.floor().get_str());
  }
  const std::size_t probe = prefix + 1;
  const PKResult pk = check_PK(seq, K, probe);
  if (!pk.member) {
    throw Error(ErrorCode::growth_violation,
                "sequence is not in P(K) within the probe: violation at n = " +
                    std::to_string(pk.index),
                pk.index);
  }

  std::size_t N = pk.index;
  while (2 * N <= probe && seq.term(2 * N) < power(l, 2 * N)) ++N;
  if (2 * N > probe) {
    throw Error(ErrorCode::head_index_overflow,
                "no N with p_{2N} >= l^{2N} within the checked prefix", probe);
  }

  Certificate cert;
  cert.l = l;
  cert.N = N;
  cert.checked_prefix = prefix;
  cert.growth_K = K;
  cert.tail_cseq = CSeq::geometric(BigInt(static_cast<unsigned long>(l)), 2 * N - 1)
                       .with_divisor_chain(true);

  mpq_class head(0);
  for (std::size_t n = 1; n <= 2 * N - 1; ++n) {
    mpq_class t(power(l, n), seq.term(n));
    t.canonicalize();
    if (n % 2 == 1) head -= t; else head += t;
  }
  cert.head = Rational(head.get_num(), head.get_den());

  cert.tail_terms.reserve(prefix + 2);
  for (std::size_t n = 1; n <= prefix + 2; ++n) {
    cert.tail_terms.push_back(seq.term(n + 2 * N - 1));
  }
  for (std::size_t n = 1; n <= prefix; ++n) {
    const BigInt& a = cert.tail_terms[n - 1];
    if (a < cert.tail_cseq.eval(n)) {
      throw Error(ErrorCode::growth_violation,
                  "tail term a_" + std::to_string(n) + " is below c_" + std::to_string(n), n);
    }
    if (cert.tail_terms[n] < BigInt(static_cast<unsigned long>(l)) * a * (a + 1)) {
      throw Error(ErrorCode::growth_violation,
                  "tail growth fails at n = " + std::to_string(n), n);
    }
  }
  cert.conditions.q_at_most_one = true;
  cert.conditions.u_growth = true;
  return cert;
}

CrosscheckResult crosscheck(const Certificate& cert, std::size_t terms) {
  if (terms == 0 || terms > cert.checked_prefix ||
      cert.tail_terms.size() < terms + 2) {
    throw Error(ErrorCode::invalid_argument,
                "crosscheck needs 1 <= terms <= checked_prefix");
  }
  const Expansion tail(BigInt(0),
                       std::vector<BigInt>(cert.tail_terms.begin(),
                                           cert.tail_terms.begin() + terms + 2),
                       cert.tail_cseq, false);
  const TCheckReport report = check_T(tail, terms);
  if (!report.valid) {
    return CrosscheckResult{false, report.index};
  }
  for (std::size_t k = 1; k <= terms; ++k) {
    const Bracket b = tail_remainder(tail, k, 2);
    const BigInt c = cert.tail_cseq.eval(k);
    if (b.lower.sign() <= 0) return CrosscheckResult{false, k};
    BigInt a;
    const BigInt num = c * b.upper.denominator();
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), b.upper.numerator().get_mpz_t());
    if (!(Rational(c, a + 1) < b.lower) || a != cert.tail_terms[k - 1]) {
      return CrosscheckResult{false, k};
    }
  }
  return CrosscheckResult{true, std::nullopt};
}

}  // namespace altsyl
