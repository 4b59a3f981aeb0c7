// Copyright 2026 The entroportrait authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ENTROPORTRAIT_ERRORS_HPP
#define ENTROPORTRAIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace entroportrait {

/// Error codes for every contract violation the library reports.
enum class ErrorCode {
  not_square,
  not_hermitian,
  trace_not_one,
  not_positive,
  length_mismatch,
  dimension_mismatch,
  not_a_permutation,
  zero_total,
  zero_column,
  zero_denominator,
  zero_probability_block,
  too_short,
  too_small,
  bad_rank,
  too_large_for_exhaustive,
  invalid_argument,
  parse_error,
  usage_error,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &msg)
      : std::runtime_error(msg), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace entroportrait

#endif // ENTROPORTRAIT_ERRORS_HPP
