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

#ifndef CPG_IO_H_
#define CPG_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "cpg/arith.h"
#include "cpg/game.h"
#include "cpg/solutions.h"
#include "cpg/verify.h"

namespace cpg {

// Game files:
//
//   cpg 1
//   <n>
//   <w_1> <w_2> ... <w_n>      (any whitespace, may span several lines)
//
// Lines starting with '#' and blank lines are skipped wherever they occur.
// Errors carry the 1-based line (and column where one applies).
CpGame ParseGame(std::string_view text);
std::string RenderGame(const CpGame& game);

// Table files:
//
//   tug 1
//   <n>
//   <mask> <value>             (2^n lines, every mask exactly once)
//
// Masks are decimal with player 1 as bit 0; values are "p" or "p/q".
TableGame ParseTable(std::string_view text);
std::string RenderTable(const TableGame& table);

enum class FileKind { kGame, kTable };

// Looks at the magic line only. Throws BadMagic if it is neither.
FileKind DetectFileKind(std::string_view text);

// Whitespace-separated exact rationals.
std::vector<Rational> ParseRationals(std::string_view text);

// Rationals checked against `game`: count must be n (CountMismatch) and the
// sum must equal v(P) (NotEfficientError, carrying both values).
Imputation ParseImputation(std::string_view text, const CpGame& game);

// Comma-separated 1-based indices; the empty string is the empty coalition.
Coalition ParseCoalition(std::string_view list, int n);

// Comma-separated 1-based indices naming every player exactly once.
Permutation ParsePermutation(std::string_view list, int n);

// "PERM@COEF;PERM@COEF;..." with PERM as for ParsePermutation and COEF a
// rational. Coefficient validity is left to WeberMix.
std::vector<MixtureTerm> ParseMixture(std::string_view text, int n);

// "{1,3}" or "∅".
std::string FormatCoalition(const Coalition& coalition);

// Space-separated canonical rationals.
std::string FormatRationals(std::span<const Rational> values);

}  // namespace cpg

#endif  // CPG_IO_H_
