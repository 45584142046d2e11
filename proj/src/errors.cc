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

#include "cpg/errors.h"

#include <utility>

namespace cpg {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyGame: return "EmptyGame";
    case ErrorCode::kInvalidWeight: return "InvalidWeight";
    case ErrorCode::kInvalidPlayer: return "InvalidPlayer";
    case ErrorCode::kPlayerInCoalition: return "PlayerInCoalition";
    case ErrorCode::kDuplicatePlayer: return "DuplicatePlayer";
    case ErrorCode::kInvalidPermutation: return "InvalidPermutation";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kNotAnImputation: return "NotAnImputation";
    case ErrorCode::kBadMixture: return "BadMixture";
    case ErrorCode::kLimitExceeded: return "LimitExceeded";
    case ErrorCode::kBadMagic: return "BadMagic";
    case ErrorCode::kCountMismatch: return "CountMismatch";
    case ErrorCode::kNotAnInteger: return "NotAnInteger";
    case ErrorCode::kBadRational: return "BadRational";
    case ErrorCode::kBadTable: return "BadTable";
    case ErrorCode::kUsage: return "Usage";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::size_t line,
             std::size_t column)
    : std::runtime_error(message), code_(code), line_(line), column_(column) {}

InvalidWeightError::InvalidWeightError(std::size_t position, std::string value,
                                       std::size_t column)
    : Error(ErrorCode::kInvalidWeight,
            (column == 0 ? "player " + std::to_string(position)
                         : "line " + std::to_string(position) + ", column " +
                               std::to_string(column)) +
                ": invalid weight " + value + " (weights must be integers >= 2)",
            column == 0 ? 0 : position, column),
      position_(position),
      value_(std::move(value)) {}

LimitExceededError::LimitExceededError(int n, int limit,
                                       const std::string& what)
    : Error(ErrorCode::kLimitExceeded,
            what + ": n = " + std::to_string(n) + " exceeds limit " +
                std::to_string(limit)),
      n_(n),
      limit_(limit) {}

NotEfficientError::NotEfficientError(std::string sum, std::string expected)
    : Error(ErrorCode::kNotAnImputation,
            "payoffs sum to " + sum + " but the grand coalition value is " +
                expected),
      sum_(std::move(sum)),
      expected_(std::move(expected)) {}

}  // namespace cpg
