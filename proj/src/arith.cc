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

#include "cpg/arith.h"

#include <algorithm>

namespace cpg {
namespace {

bool AllDigits(std::string_view text) {
  return !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

}  // namespace

bool TryParseInteger(std::string_view text, Integer* out) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!AllDigits(digits)) return false;
  // mpz_set_str accepts the leading '-' and the digits we validated.
  return out->set_str(std::string(text), 10) == 0;
}

bool TryParseRational(std::string_view text, Rational* out) {
  const auto slash = text.find('/');
  Integer num;
  if (slash == std::string_view::npos) {
    if (!TryParseInteger(text, &num)) return false;
    *out = Rational(num);
    return true;
  }
  const std::string_view den_text = text.substr(slash + 1);
  Integer den;
  if (!TryParseInteger(text.substr(0, slash), &num) || !AllDigits(den_text) ||
      !TryParseInteger(den_text, &den) || den == 0) {
    return false;
  }
  *out = Rational(num, den);
  out->canonicalize();
  return true;
}

std::string ToString(const Integer& value) { return value.get_str(10); }

std::string ToString(const Rational& value) { return value.get_str(10); }

}  // namespace cpg
