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

#ifndef ALTSYL_ERROR_HPP
#define ALTSYL_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace altsyl {

enum class ErrorCode {
  parse,
  division_by_zero,
  divisor_chain_violation,
  budget_exceeded,
  undecided,
  inversion_of_zero,
  invalid_argument,
  cseq_mismatch,
  not_exact,
  invalid_expansion,
  l_exceeds_k,
  growth_violation,
  head_index_overflow,
};

// Base of every exception the library throws. `index()` carries the
// position/term index the error refers to, when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::size_t index = 0)
      : std::runtime_error(what), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  std::size_t index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::size_t index_;
};

// Syntax error in the multiplier-sequence grammar or a value literal.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& expected)
      : Error(ErrorCode::parse,
              "parse error at position " + std::to_string(position) +
                  ": expected " + expected,
              position),
        expected_(expected) {}

  std::size_t position() const noexcept { return index(); }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::string expected_;
};

}  // namespace altsyl

#endif  // ALTSYL_ERROR_HPP
