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

#ifndef CPG_LIMITS_H_
#define CPG_LIMITS_H_

namespace cpg {

// Player-count ceilings for the brute-force routines. Exceeding one raises
// LimitExceededError; nothing is ever silently truncated.
struct Limits {
  // 2^n coalition sweeps: core checks, tables, monotone/superadditive,
  // dummies, Banzhaf.
  int enumeration = 20;
  // n! permutation sweeps: Shapley.
  int factorial = 9;
  // 4^n coalition-pair sweeps: convexity.
  int pairwise = 10;

  // Every ceiling set to `n`.
  static Limits Uniform(int n) { return Limits{n, n, n}; }
};

// Throws LimitExceededError if n > limit or n does not fit a coalition mask.
void EnforceLimit(int n, int limit, const char* what);

}  // namespace cpg

#endif  // CPG_LIMITS_H_
