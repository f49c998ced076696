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

#include "altsyl/altsyl.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>

#include "altsyl/canon.hpp"
#include "altsyl/error.hpp"
#include "altsyl/expansion.hpp"
#include "altsyl/irrational.hpp"
#include "altsyl/json.hpp"
#include "altsyl/realfield.hpp"

struct altsyl_cseq { altsyl::CSeq value; };
struct altsyl_expansion { altsyl::Expansion value; };
struct altsyl_real { altsyl::Real value; };
struct altsyl_growth_seq { altsyl::GrowthSeq value; };
struct altsyl_certificate { altsyl::Certificate value; };

namespace {

thread_local std::string last_error;
thread_local std::size_t last_index = 0;

altsyl_status to_status(altsyl::ErrorCode code) {
  using altsyl::ErrorCode;
  switch (code) {
    case ErrorCode::parse: return ALTSYL_ERR_PARSE;
    case ErrorCode::division_by_zero: return ALTSYL_ERR_DIVISION_BY_ZERO;
    case ErrorCode::divisor_chain_violation: return ALTSYL_ERR_DIVISOR_CHAIN;
    case ErrorCode::budget_exceeded: return ALTSYL_ERR_BUDGET_EXCEEDED;
    case ErrorCode::undecided: return ALTSYL_ERR_UNDECIDED;
    case ErrorCode::inversion_of_zero: return ALTSYL_ERR_INVERSION_OF_ZERO;
    case ErrorCode::invalid_argument: return ALTSYL_ERR_INVALID_ARGUMENT;
    case ErrorCode::cseq_mismatch: return ALTSYL_ERR_CSEQ_MISMATCH;
    case ErrorCode::not_exact: return ALTSYL_ERR_NOT_EXACT;
    case ErrorCode::invalid_expansion: return ALTSYL_ERR_INVALID_EXPANSION;
    case ErrorCode::l_exceeds_k: return ALTSYL_ERR_L_EXCEEDS_K;
    case ErrorCode::growth_violation: return ALTSYL_ERR_GROWTH_VIOLATION;
    case ErrorCode::head_index_overflow: return ALTSYL_ERR_HEAD_INDEX_OVERFLOW;
  }
  return ALTSYL_ERR_INTERNAL;
}

altsyl_status fail(altsyl_status status, std::string message, std::size_t index = 0) {
  last_error = std::move(message);
  last_index = index;
  return status;
}

template <class F>
altsyl_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    last_index = 0;
    return ALTSYL_OK;
  } catch (const altsyl::Error& e) {
    return fail(to_status(e.code()), e.what(), e.index());
  } catch (const std::bad_alloc&) {
    return fail(ALTSYL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ALTSYL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ALTSYL_ERR_INTERNAL, "unknown exception");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class T>
const T& deref(const T* p) {
  if (!p) {
    throw altsyl::Error(altsyl::ErrorCode::invalid_argument, "null handle");
  }
  return *p;
}

const char* text(const char* s) {
  if (!s) {
    throw altsyl::Error(altsyl::ErrorCode::invalid_argument, "null string");
  }
  return s;
}

template <class T>
void require_out(T* out) {
  if (!out) {
    throw altsyl::Error(altsyl::ErrorCode::invalid_argument, "null output pointer");
  }
}

std::size_t as_size(uint64_t v) {
  return v == ALTSYL_ALL_TERMS ? altsyl::kAllTerms : static_cast<std::size_t>(v);
}

altsyl_ordering to_c(altsyl::Ordering o) {
  switch (o) {
    case altsyl::Ordering::less: return ALTSYL_LESS;
    case altsyl::Ordering::equal: return ALTSYL_EQUAL;
    case altsyl::Ordering::greater: return ALTSYL_GREATER;
    case altsyl::Ordering::undecided: break;
  }
  return ALTSYL_UNDECIDED;
}

}  // namespace

extern "C" {

const char* altsyl_status_name(altsyl_status status) {
  switch (status) {
    case ALTSYL_OK: return "ok";
    case ALTSYL_ERR_PARSE: return "parse_error";
    case ALTSYL_ERR_DIVISION_BY_ZERO: return "division_by_zero";
    case ALTSYL_ERR_DIVISOR_CHAIN: return "divisor_chain_violation";
    case ALTSYL_ERR_BUDGET_EXCEEDED: return "budget_exceeded";
    case ALTSYL_ERR_UNDECIDED: return "undecided";
    case ALTSYL_ERR_INVERSION_OF_ZERO: return "inversion_of_zero";
    case ALTSYL_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case ALTSYL_ERR_CSEQ_MISMATCH: return "cseq_mismatch";
    case ALTSYL_ERR_NOT_EXACT: return "not_exact";
    case ALTSYL_ERR_INVALID_EXPANSION: return "invalid_expansion";
    case ALTSYL_ERR_L_EXCEEDS_K: return "l_exceeds_k";
    case ALTSYL_ERR_GROWTH_VIOLATION: return "growth_violation";
    case ALTSYL_ERR_HEAD_INDEX_OVERFLOW: return "head_index_overflow";
    case ALTSYL_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* altsyl_last_error(void) { return last_error.c_str(); }
size_t altsyl_last_error_index(void) { return last_index; }
void altsyl_string_free(char* s) { std::free(s); }

altsyl_status altsyl_rational_normalize(const char* t, char** out) {
  return guarded([&] {
    require_out(out);
    *out = dup(altsyl::Rational::parse(text(t)).to_string());
  });
}

altsyl_status altsyl_rational_floor(const char* t, char** out) {
  return guarded([&] {
    require_out(out);
    *out = dup(altsyl::Rational::parse(text(t)).floor().get_str());
  });
}

altsyl_status altsyl_rational_arith(char op, const char* x, const char* y, char** out) {
  return guarded([&] {
    require_out(out);
    const auto a = altsyl::Rational::parse(text(x));
    const auto b = altsyl::Rational::parse(text(y));
    altsyl::Rational r;
    switch (op) {
      case '+': r = a + b; break;
      case '-': r = a - b; break;
      case '*': r = a * b; break;
      case '/': r = a / b; break;
      default:
        throw altsyl::Error(altsyl::ErrorCode::invalid_argument,
                            std::string("unknown operator '") + op + "'");
    }
    *out = dup(r.to_string());
  });
}

altsyl_status altsyl_rational_cmp(const char* x, const char* y, int* out) {
  return guarded([&] {
    require_out(out);
    const auto c = altsyl::cmp(altsyl::Rational::parse(text(x)),
                               altsyl::Rational::parse(text(y)));
    *out = c < 0 ? -1 : (c > 0 ? 1 : 0);
  });
}

altsyl_status altsyl_cseq_parse(const char* t, int require_chain, altsyl_cseq** out) {
  return guarded([&] {
    require_out(out);
    *out = new altsyl_cseq{altsyl::CSeq::parse(text(t), require_chain != 0)};
  });
}

void altsyl_cseq_free(altsyl_cseq* cseq) { delete cseq; }

altsyl_status altsyl_cseq_eval(const altsyl_cseq* cseq, uint64_t n, char** out) {
  return guarded([&] {
    require_out(out);
    *out = dup(deref(cseq).value.eval(as_size(n)).get_str());
  });
}

altsyl_status altsyl_cseq_render(const altsyl_cseq* cseq, char** out) {
  return guarded([&] {
    require_out(out);
    *out = dup(deref(cseq).value.render());
  });
}

altsyl_status altsyl_expand_rational(const char* alpha, const altsyl_cseq* cseq,
                                     uint64_t max_terms, altsyl_expansion** out) {
  return guarded([&] {
    require_out(out);
    if (max_terms == 0) {
      throw altsyl::Error(altsyl::ErrorCode::invalid_argument, "max_terms must be positive");
    }
    *out = new altsyl_expansion{altsyl::expand_rational(
        altsyl::Rational::parse(text(alpha)), deref(cseq).value, as_size(max_terms))};
  });
}

altsyl_status altsyl_expansion_parse(const char* literal, const altsyl_cseq* cseq,
                                     altsyl_expansion** out) {
  return guarded([&] {
    require_out(out);
    *out = new altsyl_expansion{altsyl::Expansion::parse(text(literal), deref(cseq).value)};
  });
}

void altsyl_expansion_free(altsyl_expansion* e) { delete e; }

altsyl_status altsyl_expansion_text(const altsyl_expansion* e, char** out) {
  return guarded([&] {
    require_out(out);
    *out = dup(deref(e).value.to_text());
  });
}

altsyl_status altsyl_expansion_json(const altsyl_expansion* e, char** out) {
  return guarded([&] {
    require_out(out);
    *out = dup(altsyl::json::expansion(deref(e).value));
  });
}

altsyl_status altsyl_reconstruct(const altsyl_expansion* e, uint64_t upto, char** out) {
  return guarded([&] {
    require_out(out);
    *out = dup(altsyl::reconstruct(deref(e).value, as_size(upto)).to_string());
  });
}

altsyl_status altsyl_tail_remainder(const altsyl_expansion* e, uint64_t n, uint64_t upto,
                                    char** lower, char** upper) {
  return guarded([&] {
    require_out(lower);
    require_out(upper);
    const auto b = altsyl::tail_remainder(deref(e).value, as_size(n), as_size(upto));
    char* lo = dup(b.lower.to_string());
    try {
      *upper = dup(b.upper.to_string());
    } catch (...) {
      std::free(lo);
      throw;
    }
    *lower = lo;
  });
}

altsyl_status altsyl_check_t(const altsyl_expansion* e, uint64_t upto, int* valid,
                             char** report_json) {
  return guarded([&] {
    const auto r = altsyl::check_T(deref(e).value, as_size(upto));
    if (report_json) *report_json = dup(altsyl::json::report(r));
    if (valid) *valid = r.valid ? 1 : 0;
  });
}

altsyl_status altsyl_refixpoint(const altsyl_expansion* e, int* out) {
  return guarded([&] {
    require_out(out);
    *out = altsyl::refixpoint(deref(e).value) ? 1 : 0;
  });
}

altsyl_status altsyl_compare(const altsyl_expansion* x, const altsyl_expansion* y,
                             uint64_t budget, altsyl_ordering* out) {
  return guarded([&] {
    require_out(out);
    *out = to_c(altsyl::compare(deref(x).value, deref(y).value, as_size(budget)));
  });
}

altsyl_status altsyl_real_from_rational(const char* value, const altsyl_cseq* cseq,
                                        altsyl_real** out) {
  return guarded([&] {
    require_out(out);
    *out = new altsyl_real{
        altsyl::Real::exact(altsyl::Rational::parse(text(value)), deref(cseq).value)};
  });
}

altsyl_status altsyl_real_from_expansion(const altsyl_expansion* e, altsyl_real** out) {
  return guarded([&] {
    require_out(out);
    *out = new altsyl_real{altsyl::Real::from_expansion(deref(e).value)};
  });
}

altsyl_status altsyl_real_from_sequence(const altsyl_growth_seq* seq,
                                        const altsyl_cseq* cseq, altsyl_real** out) {
  return guarded([&] {
    require_out(out);
    altsyl::GrowthSeq s = deref(seq).value;
    *out = new altsyl_real{altsyl::Real::stream(
        altsyl::BigInt(0),
        [s](std::size_t n) -> std::optional<altsyl::BigInt> { return s.term(n); },
        deref(cseq).value)};
  });
}

void altsyl_real_free(altsyl_real* x) { delete x; }

altsyl_status altsyl_real_apply(altsyl_real_op op, const altsyl_real* x,
                                const altsyl_real* y, altsyl_real** out) {
  return guarded([&] {
    require_out(out);
    const altsyl::Real& a = deref(x).value;
    switch (op) {
      case ALTSYL_OP_NEG:
        *out = new altsyl_real{altsyl::neg(a)};
        return;
      case ALTSYL_OP_INV:
        *out = new altsyl_real{altsyl::inv(a)};
        return;
      default:
        break;
    }
    const altsyl::Real& b = deref(y).value;
    switch (op) {
      case ALTSYL_OP_ADD: *out = new altsyl_real{altsyl::add(a, b)}; return;
      case ALTSYL_OP_SUB: *out = new altsyl_real{altsyl::sub(a, b)}; return;
      case ALTSYL_OP_MUL: *out = new altsyl_real{altsyl::mul(a, b)}; return;
      case ALTSYL_OP_DIV: *out = new altsyl_real{altsyl::div(a, b)}; return;
      default:
        throw altsyl::Error(altsyl::ErrorCode::invalid_argument, "unknown operation");
    }
  });
}

altsyl_status altsyl_real_exact_value(const altsyl_real* x, char** out) {
  return guarded([&] {
    require_out(out);
    const altsyl::Rational* v = deref(x).value.exact_value();
    if (!v) {
      throw altsyl::Error(altsyl::ErrorCode::not_exact, "value is not an exact rational leaf");
    }
    *out = dup(v->to_string());
  });
}

altsyl_status altsyl_real_enclose(const altsyl_real* x, const char* precision,
                                  uint64_t budget, char** enclosure_json) {
  return guarded([&] {
    require_out(enclosure_json);
    const auto e = altsyl::enclose(deref(x).value, altsyl::Rational::parse(text(precision)),
                                   as_size(budget));
    *enclosure_json = dup(altsyl::json::enclosure(e));
  });
}

altsyl_status altsyl_real_digits(const altsyl_real* x, uint64_t count, uint64_t budget,
                                 altsyl_expansion** out) {
  return guarded([&] {
    require_out(out);
    auto res = altsyl::digits(deref(x).value, as_size(count), as_size(budget));
    if (auto* u = std::get_if<altsyl::Undecided>(&res)) {
      throw altsyl::Error(altsyl::ErrorCode::undecided,
                          "digit " + std::to_string(u->index) + " is undecided within budget",
                          u->index);
    }
    *out = new altsyl_expansion{std::get<altsyl::Expansion>(std::move(res))};
  });
}

altsyl_status altsyl_real_compare(const altsyl_real* x, const altsyl_real* y,
                                  uint64_t budget, altsyl_ordering* out) {
  return guarded([&] {
    require_out(out);
    *out = to_c(altsyl::compare(deref(x).value, deref(y).value, as_size(budget)));
  });
}

altsyl_status altsyl_real_extreme(const altsyl_real* const* xs, size_t count,
                                  uint64_t budget, int infimum, altsyl_real** out) {
  return guarded([&] {
    require_out(out);
    if (!xs && count) {
      throw altsyl::Error(altsyl::ErrorCode::invalid_argument, "null member array");
    }
    std::vector<altsyl::Real> members;
    members.reserve(count);
    for (size_t i = 0; i < count; ++i) members.push_back(deref(xs[i]).value);
    *out = new altsyl_real{infimum ? altsyl::inf_finite(members, as_size(budget))
                                   : altsyl::sup_finite(members, as_size(budget))};
  });
}

altsyl_status altsyl_growth_seq_named(const char* name, altsyl_growth_seq** out) {
  return guarded([&] {
    require_out(out);
    *out = new altsyl_growth_seq{altsyl::GrowthSeq::named(text(name))};
  });
}

altsyl_status altsyl_growth_seq_from_terms(const char* terms, const char* K,
                                           altsyl_growth_seq** out) {
  return guarded([&] {
    require_out(out);
    // Reuse the expansion literal grammar for the comma-separated list.
    const auto list = altsyl::Expansion::parse(std::string("0;") + text(terms),
                                               altsyl::CSeq::constant(altsyl::BigInt(1)));
    *out = new altsyl_growth_seq{
        altsyl::GrowthSeq::from_terms(list.terms(), altsyl::Rational::parse(text(K)))};
  });
}

void altsyl_growth_seq_free(altsyl_growth_seq* seq) { delete seq; }

altsyl_status altsyl_check_pk(const altsyl_growth_seq* seq, const char* K, uint64_t probe,
                              int* member, uint64_t* index) {
  return guarded([&] {
    require_out(member);
    require_out(index);
    const auto r = altsyl::check_PK(deref(seq).value, altsyl::Rational::parse(text(K)),
                                    as_size(probe));
    *member = r.member ? 1 : 0;
    *index = r.index;
  });
}

altsyl_status altsyl_eval_f(const altsyl_growth_seq* seq, const char* z, uint64_t terms,
                            char** out) {
  return guarded([&] {
    require_out(out);
    *out = dup(altsyl::eval_f(deref(seq).value, altsyl::parse_integer(text(z)),
                              as_size(terms))
                   .to_string());
  });
}

altsyl_status altsyl_certify(const altsyl_growth_seq* seq, uint64_t l, uint64_t prefix,
                             altsyl_certificate** out) {
  return guarded([&] {
    require_out(out);
    *out = new altsyl_certificate{altsyl::certify(deref(seq).value, l, as_size(prefix))};
  });
}

void altsyl_certificate_free(altsyl_certificate* cert) { delete cert; }

altsyl_status altsyl_certificate_json(const altsyl_certificate* cert, char** out) {
  return guarded([&] {
    require_out(out);
    *out = dup(altsyl::json::certificate(deref(cert).value));
  });
}

altsyl_status altsyl_crosscheck(const altsyl_certificate* cert, uint64_t terms, int* ok,
                                uint64_t* mismatch_index) {
  return guarded([&] {
    require_out(ok);
    const auto r = altsyl::crosscheck(deref(cert).value, as_size(terms));
    *ok = r.ok ? 1 : 0;
    if (mismatch_index) *mismatch_index = r.mismatch_index.value_or(0);
  });
}

}  // extern "C"
