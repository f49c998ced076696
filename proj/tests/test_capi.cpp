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

#include <altsyl/altsyl.h>

#include <cstring>
#include <string>

#include "doctest.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  altsyl_string_free(s);
  return out;
}

altsyl_cseq* cseq(const char* text) {
  altsyl_cseq* c = nullptr;
  REQUIRE(altsyl_cseq_parse(text, 0, &c) == ALTSYL_OK);
  return c;
}

}  // namespace

TEST_CASE("rational helpers") {
  char* out = nullptr;
  REQUIRE(altsyl_rational_normalize("6/-4", &out) == ALTSYL_ERR_PARSE);
  REQUIRE(altsyl_rational_normalize("-6/4", &out) == ALTSYL_OK);
  CHECK(take(out) == "-3/2");
  REQUIRE(altsyl_rational_floor("-7/2", &out) == ALTSYL_OK);
  CHECK(take(out) == "-4");
  REQUIRE(altsyl_rational_arith('-', "1/3", "2/7", &out) == ALTSYL_OK);
  CHECK(take(out) == "1/21");
  CHECK(altsyl_rational_arith('/', "1", "0", &out) == ALTSYL_ERR_DIVISION_BY_ZERO);
  CHECK(std::string(altsyl_last_error()).size() > 0);
  CHECK(altsyl_rational_arith('%', "1", "2", &out) == ALTSYL_ERR_INVALID_ARGUMENT);
  int c = 7;
  REQUIRE(altsyl_rational_cmp("1/3", "2/7", &c) == ALTSYL_OK);
  CHECK(c == 1);
  CHECK(std::string(altsyl_last_error()).empty());
}

TEST_CASE("expansion round trip") {
  altsyl_cseq* one = cseq("const:1");
  altsyl_expansion* e = nullptr;
  REQUIRE(altsyl_expand_rational("5/7", one, 100, &e) == ALTSYL_OK);
  char* text = nullptr;
  REQUIRE(altsyl_expansion_text(e, &text) == ALTSYL_OK);
  const std::string t = take(text);
  CHECK(t == "q0=0 terms=1,3,21 terminated");
  char* json = nullptr;
  REQUIRE(altsyl_expansion_json(e, &json) == ALTSYL_OK);
  CHECK(take(json) ==
        "{\"q0\": 0, \"terms\": [1, 3, 21], \"terminated\": true, \"cseq\": \"const:1\"}");

  altsyl_expansion* back = nullptr;
  REQUIRE(altsyl_expansion_parse(t.c_str(), one, &back) == ALTSYL_OK);
  char* value = nullptr;
  REQUIRE(altsyl_reconstruct(back, ALTSYL_ALL_TERMS, &value) == ALTSYL_OK);
  CHECK(take(value) == "5/7");
  REQUIRE(altsyl_reconstruct(back, 2, &value) == ALTSYL_OK);
  CHECK(take(value) == "2/3");

  char* lo = nullptr;
  char* hi = nullptr;
  REQUIRE(altsyl_tail_remainder(back, 2, ALTSYL_ALL_TERMS, &lo, &hi) == ALTSYL_OK);
  CHECK(take(lo) == "2/7");
  CHECK(take(hi) == "2/7");

  CHECK(altsyl_expand_rational("5/7", one, 2, &e) == ALTSYL_ERR_BUDGET_EXCEEDED);
  altsyl_expansion_free(e);
  altsyl_expansion_free(back);
  altsyl_cseq_free(one);
}

TEST_CASE("validation and order") {
  altsyl_cseq* one = cseq("const:1");
  altsyl_expansion* x = nullptr;
  altsyl_expansion* y = nullptr;
  REQUIRE(altsyl_expansion_parse("0;1,2", one, &x) == ALTSYL_OK);
  int valid = 1;
  char* report = nullptr;
  REQUIRE(altsyl_check_t(x, ALTSYL_ALL_TERMS, &valid, &report) == ALTSYL_OK);
  CHECK(valid == 0);
  CHECK(take(report) ==
        "{\"valid\": false, \"violated\": \"C6\", \"index\": 1, \"checked_upto\": 2}");
  int fix = 1;
  REQUIRE(altsyl_refixpoint(x, &fix) == ALTSYL_OK);
  CHECK(fix == 0);

  REQUIRE(altsyl_expansion_parse("0;1,3", one, &y) == ALTSYL_OK);
  altsyl_ordering ord = ALTSYL_UNDECIDED;
  REQUIRE(altsyl_compare(x, y, 10, &ord) == ALTSYL_OK);
  CHECK(ord == ALTSYL_LESS);
  altsyl_expansion_free(x);
  altsyl_expansion_free(y);

  altsyl_real* r = nullptr;
  REQUIRE(altsyl_expansion_parse("0;1", one, &x) == ALTSYL_OK);
  CHECK(altsyl_real_from_expansion(x, &r) == ALTSYL_ERR_INVALID_EXPANSION);
  altsyl_expansion_free(x);
  altsyl_cseq_free(one);
}

TEST_CASE("divisor chain through the C API") {
  altsyl_cseq* c = nullptr;
  REQUIRE(altsyl_cseq_parse("list:2,3", 1, &c) == ALTSYL_OK);
  char* v = nullptr;
  CHECK(altsyl_cseq_eval(c, 2, &v) == ALTSYL_ERR_DIVISOR_CHAIN);
  CHECK(altsyl_last_error_index() == 2);
  REQUIRE(altsyl_cseq_render(c, &v) == ALTSYL_OK);
  CHECK(take(v) == "list:2,3");
  altsyl_cseq_free(c);
  CHECK(altsyl_cseq_parse("list:2,", 0, &c) == ALTSYL_ERR_PARSE);
}

TEST_CASE("real arithmetic") {
  altsyl_cseq* one = cseq("const:1");
  altsyl_real* a = nullptr;
  altsyl_real* b = nullptr;
  altsyl_real* s = nullptr;
  REQUIRE(altsyl_real_from_rational("5/7", one, &a) == ALTSYL_OK);
  REQUIRE(altsyl_real_from_rational("1/2", one, &b) == ALTSYL_OK);
  REQUIRE(altsyl_real_apply(ALTSYL_OP_ADD, a, b, &s) == ALTSYL_OK);
  char* v = nullptr;
  REQUIRE(altsyl_real_exact_value(s, &v) == ALTSYL_OK);
  CHECK(take(v) == "17/14");
  altsyl_expansion* d = nullptr;
  REQUIRE(altsyl_real_digits(s, 5, 16, &d) == ALTSYL_OK);
  char* text = nullptr;
  REQUIRE(altsyl_expansion_text(d, &text) == ALTSYL_OK);
  CHECK(take(text) == "q0=1 terms=4,28 terminated");
  altsyl_expansion_free(d);

  altsyl_real* n = nullptr;
  REQUIRE(altsyl_real_apply(ALTSYL_OP_NEG, b, nullptr, &n) == ALTSYL_OK);
  REQUIRE(altsyl_real_exact_value(n, &v) == ALTSYL_OK);
  CHECK(take(v) == "-1/2");

  altsyl_real* zero = nullptr;
  altsyl_real* inv = nullptr;
  REQUIRE(altsyl_real_from_rational("0", one, &zero) == ALTSYL_OK);
  CHECK(altsyl_real_apply(ALTSYL_OP_INV, zero, nullptr, &inv) ==
        ALTSYL_ERR_INVERSION_OF_ZERO);
  CHECK(altsyl_real_apply(ALTSYL_OP_ADD, a, nullptr, &inv) == ALTSYL_ERR_INVALID_ARGUMENT);

  const altsyl_real* members[] = {a, b, s};
  altsyl_real* top = nullptr;
  REQUIRE(altsyl_real_extreme(members, 3, 32, 0, &top) == ALTSYL_OK);
  REQUIRE(altsyl_real_exact_value(top, &v) == ALTSYL_OK);
  CHECK(take(v) == "17/14");
  altsyl_real_free(top);
  REQUIRE(altsyl_real_extreme(members, 3, 32, 1, &top) == ALTSYL_OK);
  REQUIRE(altsyl_real_exact_value(top, &v) == ALTSYL_OK);
  CHECK(take(v) == "1/2");
  altsyl_real_free(top);

  char* enc = nullptr;
  REQUIRE(altsyl_real_enclose(s, "1/100", 8, &enc) == ALTSYL_OK);
  CHECK(take(enc) == "{\"lower\": \"17/14\", \"upper\": \"17/14\", \"terms_used\": 1}");

  for (altsyl_real* r : {a, b, s, n, zero}) altsyl_real_free(r);
  altsyl_cseq_free(one);
}

TEST_CASE("streams and undecided digits") {
  altsyl_cseq* one = cseq("const:1");
  altsyl_growth_seq* seq = nullptr;
  REQUIRE(altsyl_growth_seq_named("sylvester", &seq) == ALTSYL_OK);
  altsyl_real* s = nullptr;
  REQUIRE(altsyl_real_from_sequence(seq, one, &s) == ALTSYL_OK);
  char* v = nullptr;
  CHECK(altsyl_real_exact_value(s, &v) == ALTSYL_ERR_NOT_EXACT);
  altsyl_real* diff = nullptr;
  REQUIRE(altsyl_real_apply(ALTSYL_OP_SUB, s, s, &diff) == ALTSYL_OK);
  altsyl_expansion* d = nullptr;
  CHECK(altsyl_real_digits(diff, 2, 10, &d) == ALTSYL_ERR_UNDECIDED);
  CHECK(altsyl_last_error_index() == 0);
  altsyl_ordering ord = ALTSYL_LESS;
  REQUIRE(altsyl_real_compare(s, s, 8, &ord) == ALTSYL_OK);
  CHECK(ord == ALTSYL_UNDECIDED);
  altsyl_real_free(diff);
  altsyl_real_free(s);
  altsyl_growth_seq_free(seq);
  altsyl_cseq_free(one);
}

TEST_CASE("certificates") {
  altsyl_growth_seq* seq = nullptr;
  REQUIRE(altsyl_growth_seq_named("sylvester", &seq) == ALTSYL_OK);
  int member = 0;
  uint64_t index = 0;
  REQUIRE(altsyl_check_pk(seq, "1", 6, &member, &index) == ALTSYL_OK);
  CHECK(member == 1);
  CHECK(index == 1);
  char* v = nullptr;
  REQUIRE(altsyl_eval_f(seq, "-1", 3, &v) == ALTSYL_OK);
  CHECK(take(v) == "-5/14");

  altsyl_certificate* cert = nullptr;
  REQUIRE(altsyl_certify(seq, 1, 10, &cert) == ALTSYL_OK);
  REQUIRE(altsyl_certificate_json(cert, &v) == ALTSYL_OK);
  CHECK(take(v) ==
        "{\"l\": 1, \"N\": 1, \"head\": \"-1/2\", \"checked_prefix\": 10, \"growth_K\": \"1\"}");
  int ok = 0;
  uint64_t at = 99;
  REQUIRE(altsyl_crosscheck(cert, 6, &ok, &at) == ALTSYL_OK);
  CHECK(ok == 1);
  CHECK(at == 0);
  altsyl_certificate_free(cert);

  CHECK(altsyl_certify(seq, 2, 10, &cert) == ALTSYL_ERR_L_EXCEEDS_K);
  altsyl_growth_seq_free(seq);

  REQUIRE(altsyl_growth_seq_from_terms("1,2,3,4,5", "1", &seq) == ALTSYL_OK);
  REQUIRE(altsyl_check_pk(seq, "1", 3, &member, &index) == ALTSYL_OK);
  CHECK(member == 0);
  CHECK(index == 2);
  CHECK(altsyl_certify(seq, 1, 3, &cert) == ALTSYL_ERR_GROWTH_VIOLATION);
  altsyl_growth_seq_free(seq);
  CHECK(altsyl_growth_seq_named("nope", &seq) == ALTSYL_ERR_PARSE);
}

TEST_CASE("null arguments are rejected") {
  char* out = nullptr;
  CHECK(altsyl_rational_normalize(nullptr, &out) == ALTSYL_ERR_INVALID_ARGUMENT);
  CHECK(altsyl_rational_normalize("1", nullptr) == ALTSYL_ERR_INVALID_ARGUMENT);
  CHECK(altsyl_expansion_text(nullptr, &out) == ALTSYL_ERR_INVALID_ARGUMENT);
  CHECK(std::strcmp(altsyl_status_name(ALTSYL_ERR_UNDECIDED), "undecided") == 0);
  altsyl_cseq_free(nullptr);
  altsyl_string_free(nullptr);
}
