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

#ifndef CPG_ARITH_H_
#define CPG_ARITH_H_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace cpg {

// Exact unbounded integer. Coalition values and weights.
using Integer = mpz_class;

// Exact rational, always kept canonical (reduced, positive denominator).
using Rational = mpq_class;

// Coalition bit encoding: player i (1-based) is bit i-1.
using Mask = std::uint64_t;

// Largest player count representable as a Mask with room for the 2^n
// sentinel used by enumeration loops.
inline constexpr int kMaxMaskPlayers = 62;

// Parses an optionally negative decimal integer ("-12", "7"). Returns false
// on anything else, including empty input, a leading '+', and whitespace.
bool TryParseInteger(std::string_view text, Integer* out);

// Parses "p" or "p/q" where p is an optionally negative decimal integer and
// q a nonzero unsigned decimal integer. The result is canonicalized.
bool TryParseRational(std::string_view text, Rational* out);

std::string ToString(const Integer& value);

// "p" for integral values, "p/q" otherwise.
std::string ToString(const Rational& value);

inline Rational ToRational(const Integer& value) { return Rational(value); }

}  // namespace cpg

#endif  // CPG_ARITH_H_
