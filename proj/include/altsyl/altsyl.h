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

/* C interface to the altsyl library.
 *
 * Every object is an opaque handle released with its *_free function; every
 * returned string is heap-allocated and released with altsyl_string_free.
 * Functions return ALTSYL_OK or an error status; the message of the last
 * failure on the calling thread is available from altsyl_last_error(), and
 * the term/position index it refers to from altsyl_last_error_index().
 *
 * Numbers cross the boundary as text: integers in decimal, rationals as
 * "p/q" (or "p"). Handles are immutable after creation and may be shared
 * across threads. */
#ifndef ALTSYL_ALTSYL_H
#define ALTSYL_ALTSYL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ALTSYL_BUILDING)
#    define ALTSYL_API __declspec(dllexport)
#  else
#    define ALTSYL_API __declspec(dllimport)
#  endif
#else
#  define ALTSYL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define ALTSYL_ALL_TERMS UINT64_MAX

typedef enum altsyl_status {
  ALTSYL_OK = 0,
  ALTSYL_ERR_PARSE = 1,
  ALTSYL_ERR_DIVISION_BY_ZERO = 2,
  ALTSYL_ERR_DIVISOR_CHAIN = 3,
  ALTSYL_ERR_BUDGET_EXCEEDED = 4,
  ALTSYL_ERR_UNDECIDED = 5,
  ALTSYL_ERR_INVERSION_OF_ZERO = 6,
  ALTSYL_ERR_INVALID_ARGUMENT = 7,
  ALTSYL_ERR_CSEQ_MISMATCH = 8,
  ALTSYL_ERR_NOT_EXACT = 9,
  ALTSYL_ERR_INVALID_EXPANSION = 10,
  ALTSYL_ERR_L_EXCEEDS_K = 11,
  ALTSYL_ERR_GROWTH_VIOLATION = 12,
  ALTSYL_ERR_HEAD_INDEX_OVERFLOW = 13,
  ALTSYL_ERR_INTERNAL = 99
} altsyl_status;

typedef enum altsyl_ordering {
  ALTSYL_LESS = -1,
  ALTSYL_EQUAL = 0,
  ALTSYL_GREATER = 1,
  ALTSYL_UNDECIDED = 2
} altsyl_ordering;

typedef enum altsyl_real_op {
  ALTSYL_OP_ADD,
  ALTSYL_OP_SUB,
  ALTSYL_OP_MUL,
  ALTSYL_OP_DIV,
  ALTSYL_OP_NEG,
  ALTSYL_OP_INV
} altsyl_real_op;

typedef struct altsyl_cseq altsyl_cseq;
typedef struct altsyl_expansion altsyl_expansion;
typedef struct altsyl_real altsyl_real;
typedef struct altsyl_growth_seq altsyl_growth_seq;
typedef struct altsyl_certificate altsyl_certificate;

ALTSYL_API const char* altsyl_status_name(altsyl_status status);
ALTSYL_API const char* altsyl_last_error(void);
ALTSYL_API size_t altsyl_last_error_index(void);
ALTSYL_API void altsyl_string_free(char* s);

/* Rationals. op is one of '+', '-', '*', '/'. */
ALTSYL_API altsyl_status altsyl_rational_normalize(const char* text, char** out);
ALTSYL_API altsyl_status altsyl_rational_floor(const char* text, char** out);
ALTSYL_API altsyl_status altsyl_rational_arith(char op, const char* x, const char* y,
                                               char** out);
ALTSYL_API altsyl_status altsyl_rational_cmp(const char* x, const char* y, int* out);

/* Multiplier sequences. */
ALTSYL_API altsyl_status altsyl_cseq_parse(const char* text, int require_chain,
                                           altsyl_cseq** out);
ALTSYL_API void altsyl_cseq_free(altsyl_cseq* cseq);
ALTSYL_API altsyl_status altsyl_cseq_eval(const altsyl_cseq* cseq, uint64_t n, char** out);
ALTSYL_API altsyl_status altsyl_cseq_render(const altsyl_cseq* cseq, char** out);

/* Expansions. */
ALTSYL_API altsyl_status altsyl_expand_rational(const char* alpha, const altsyl_cseq* cseq,
                                                uint64_t max_terms, altsyl_expansion** out);
ALTSYL_API altsyl_status altsyl_expansion_parse(const char* literal, const altsyl_cseq* cseq,
                                                altsyl_expansion** out);
ALTSYL_API void altsyl_expansion_free(altsyl_expansion* e);
/* "q0=0 terms=1,3,21 terminated" */
ALTSYL_API altsyl_status altsyl_expansion_text(const altsyl_expansion* e, char** out);
ALTSYL_API altsyl_status altsyl_expansion_json(const altsyl_expansion* e, char** out);
ALTSYL_API altsyl_status altsyl_reconstruct(const altsyl_expansion* e, uint64_t upto,
                                            char** out);
ALTSYL_API altsyl_status altsyl_tail_remainder(const altsyl_expansion* e, uint64_t n,
                                               uint64_t upto, char** lower, char** upper);

/* Canonical sequences and order. */
ALTSYL_API altsyl_status altsyl_check_t(const altsyl_expansion* e, uint64_t upto,
                                        int* valid, char** report_json);
ALTSYL_API altsyl_status altsyl_refixpoint(const altsyl_expansion* e, int* out);
ALTSYL_API altsyl_status altsyl_compare(const altsyl_expansion* x, const altsyl_expansion* y,
                                        uint64_t budget, altsyl_ordering* out);

/* Constructive reals. */
ALTSYL_API altsyl_status altsyl_real_from_rational(const char* value, const altsyl_cseq* cseq,
                                                   altsyl_real** out);
ALTSYL_API altsyl_status altsyl_real_from_expansion(const altsyl_expansion* e,
                                                    altsyl_real** out);
/* The digit stream (0; p_1, p_2, ...). */
ALTSYL_API altsyl_status altsyl_real_from_sequence(const altsyl_growth_seq* seq,
                                                   const altsyl_cseq* cseq,
                                                   altsyl_real** out);
ALTSYL_API void altsyl_real_free(altsyl_real* x);
/* y is ignored for ALTSYL_OP_NEG and ALTSYL_OP_INV. */
ALTSYL_API altsyl_status altsyl_real_apply(altsyl_real_op op, const altsyl_real* x,
                                           const altsyl_real* y, altsyl_real** out);
/* ALTSYL_ERR_NOT_EXACT unless x is an exact leaf. */
ALTSYL_API altsyl_status altsyl_real_exact_value(const altsyl_real* x, char** out);
ALTSYL_API altsyl_status altsyl_real_enclose(const altsyl_real* x, const char* precision,
                                             uint64_t budget, char** enclosure_json);
/* On ALTSYL_ERR_UNDECIDED, altsyl_last_error_index() is the undecided digit. */
ALTSYL_API altsyl_status altsyl_real_digits(const altsyl_real* x, uint64_t count,
                                            uint64_t budget, altsyl_expansion** out);
ALTSYL_API altsyl_status altsyl_real_compare(const altsyl_real* x, const altsyl_real* y,
                                             uint64_t budget, altsyl_ordering* out);
ALTSYL_API altsyl_status altsyl_real_extreme(const altsyl_real* const* xs, size_t count,
                                             uint64_t budget, int infimum,
                                             altsyl_real** out);

/* Irrationality certificates. */
ALTSYL_API altsyl_status altsyl_growth_seq_named(const char* name, altsyl_growth_seq** out);
/* terms: comma-separated positive integers; K: rational >= 1. */
ALTSYL_API altsyl_status altsyl_growth_seq_from_terms(const char* terms, const char* K,
                                                      altsyl_growth_seq** out);
ALTSYL_API void altsyl_growth_seq_free(altsyl_growth_seq* seq);
ALTSYL_API altsyl_status altsyl_check_pk(const altsyl_growth_seq* seq, const char* K,
                                         uint64_t probe, int* member, uint64_t* index);
ALTSYL_API altsyl_status altsyl_eval_f(const altsyl_growth_seq* seq, const char* z,
                                       uint64_t terms, char** out);
ALTSYL_API altsyl_status altsyl_certify(const altsyl_growth_seq* seq, uint64_t l,
                                        uint64_t prefix, altsyl_certificate** out);
ALTSYL_API void altsyl_certificate_free(altsyl_certificate* cert);
ALTSYL_API altsyl_status altsyl_certificate_json(const altsyl_certificate* cert, char** out);
ALTSYL_API altsyl_status altsyl_crosscheck(const altsyl_certificate* cert, uint64_t terms,
                                           int* ok, uint64_t* mismatch_index);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* ALTSYL_ALTSYL_H */
