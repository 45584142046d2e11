// Copyright 2026 The CPG Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CPG_ERRORS_H_
#define CPG_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cpg {

enum class ErrorCode {
  kEmptyGame,
  kInvalidWeight,
  kInvalidPlayer,
  kPlayerInCoalition,
  kDuplicatePlayer,
  kInvalidPermutation,
  kLengthMismatch,
  kNotAnImputation,
  kBadMixture,
  kLimitExceeded,
  kBadMagic,
  kCountMismatch,
  kNotAnInteger,
  kBadRational,
  kBadTable,
  kUsage,
};

const char* ErrorCodeName(ErrorCode code);

// Base of every error raised by the library. `line` is the 1-based source
// line for parse errors and 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t line = 0,
        std::size_t column = 0);

  ErrorCode code() const { return code_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  ErrorCode code_;
  std::size_t line_;
  std::size_t column_;
};

// A weight below 2. `position` is the 1-based player index for
// programmatic construction, or the source line when parsed from text.
class InvalidWeightError : public Error {
 public:
  InvalidWeightError(std::size_t position, std::string value,
                     std::size_t column = 0);

  std::size_t position() const { return position_; }
  const std::string& value() const { return value_; }

 private:
  std::size_t position_;
  std::string value_;
};

class LimitExceededError : public Error {
 public:
  LimitExceededError(int n, int limit, const std::string& what);

  int n() const { return n_; }
  int limit() const { return limit_; }

 private:
  int n_;
  int limit_;
};

class NotEfficientError : public Error {
 public:
  NotEfficientError(std::string sum, std::string expected);

  const std::string& sum() const { return sum_; }
  const std::string& expected() const { return expected_; }

 private:
  std::string sum_;
  std::string expected_;
};

}  // namespace cpg

#endif  // CPG_ERRORS_H_
