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

#ifndef CPG_SOLUTIONS_H_
#define CPG_SOLUTIONS_H_

#include <optional>
#include <span>
#include <vector>

#include "cpg/arith.h"
#include "cpg/game.h"
#include "cpg/limits.h"

namespace cpg {

// An ordering (a_{x_1}, ..., a_{x_n}) of all players.
class Permutation {
 public:
  // Throws InvalidPermutation unless `order` is a bijection onto 1..size.
  explicit Permutation(std::vector<PlayerId> order);
  Permutation(std::initializer_list<int> order);

  static Permutation Identity(int n);

  std::span<const PlayerId> order() const { return order_; }
  int size() const { return static_cast<int>(order_.size()); }

  // Throws InvalidPermutation if the permutation is not over the game's
  // player set.
  void ValidateFor(const CpGame& game) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<PlayerId> order_;
};

// A payoff vector p_1..p_n. Efficiency (sum equals v(P)) is a property of
// the pairing with a game: use ForGame to construct a checked imputation.
class Imputation {
 public:
  Imputation() = default;
  explicit Imputation(std::vector<Rational> payoffs);

  // Throws LengthMismatch or NotEfficientError.
  static Imputation ForGame(const CpGame& game, std::vector<Rational> payoffs);

  int size() const { return static_cast<int>(payoffs_.size()); }
  std::span<const Rational> payoffs() const { return payoffs_; }
  const Rational& payoff(PlayerId player) const;
  Rational Total() const;

  friend bool operator==(const Imputation&, const Imputation&) = default;

 private:
  std::vector<Rational> payoffs_;
};

// Throws LengthMismatch / NotEfficientError when `imputation` does not
// divide exactly the grand value of `game`.
void CheckEfficient(const CpGame& game, const Imputation& imputation);

// p(C). Zero for the empty coalition.
Rational CoalitionPayoff(const Imputation& imputation,
                         const Coalition& coalition);

// Marginal contributions along `permutation`, indexed by player (entry i-1
// belongs to player i, whatever its position in the ordering). One pass
// with a running product of the weights seen so far:
//   m_{x_1} = w_{x_1},  m_{x_k} = (w_{x_1} ... w_{x_{k-1}}) (w_{x_k} - 1).
// That is n-1 big-integer multiplications, though the cost of each grows
// with the digit count of the running product.
std::vector<Integer> MarginalContributions(const CpGame& game,
                                           const Permutation& permutation);

// The marginal contribution vector. Always in the core.
Imputation MarginalVector(const CpGame& game, const Permutation& permutation);

// Marginal vector of the identity ordering.
Imputation CoreImputation(const CpGame& game);

// e(C) = v(C) - p(C). Throws LengthMismatch if the imputation has the wrong
// number of entries.
Rational Excess(const CpGame& game, const Imputation& imputation,
                const Coalition& coalition);

// True iff e(C) > 0.
bool Blocks(const CpGame& game, const Imputation& imputation,
            const Coalition& coalition);

struct Blocked {
  Coalition witness;
  Rational excess;
};

struct CoreVerdict {
  std::optional<Blocked> blocked;

  bool in_core() const { return !blocked.has_value(); }
};

// Exhaustive core membership test. Coalitions are scanned in increasing
// mask order and the first blocking one is returned. Throws
// NotEfficientError for a non-imputation and LimitExceededError when
// n > limits.enumeration.
CoreVerdict CoreCheck(const CpGame& game, const Imputation& imputation,
                      const Limits& limits = {});

// Average of the marginal vectors of all n! orderings.
Imputation Shapley(const CpGame& game, const Limits& limits = {});

// Raw Banzhaf values: each player's marginal contribution averaged over the
// 2^(n-1) coalitions without them. Not efficient in general.
std::vector<Rational> Banzhaf(const CpGame& game, const Limits& limits = {});

struct MixtureTerm {
  Permutation permutation;
  Rational coefficient;
};

// Convex combination of marginal vectors, a point of the Weber set. Throws
// BadMixture unless every coefficient is >= 0 and they sum to exactly 1.
Imputation WeberMix(const CpGame& game, std::span<const MixtureTerm> mixture);

}  // namespace cpg

#endif  // CPG_SOLUTIONS_H_
