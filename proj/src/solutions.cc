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

#include "cpg/solutions.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "cpg/errors.h"
#include "subset_fold.h"

namespace cpg {
namespace {

void CheckLength(const CpGame& game, const Imputation& imputation) {
  if (imputation.size() != game.num_players()) {
    throw Error(ErrorCode::kLengthMismatch,
                "imputation has " + std::to_string(imputation.size()) +
                    " entries but the game has " +
                    std::to_string(game.num_players()) + " players");
  }
}

Integer Product(const Integer& a, const Integer& b) { return a * b; }
Rational Sum(const Rational& a, const Rational& b) { return a + b; }

}  // namespace

Permutation::Permutation(std::vector<PlayerId> order)
    : order_(std::move(order)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (PlayerId p : order_) {
    if (p.index() < 1 || p.index() > n || seen[p.index()]) {
      throw Error(ErrorCode::kInvalidPermutation,
                  "not a permutation of 1.." + std::to_string(n) +
                      " (offending entry " + std::to_string(p.index()) + ")");
    }
    seen[p.index()] = true;
  }
}

Permutation::Permutation(std::initializer_list<int> order)
    : Permutation([&] {
        std::vector<PlayerId> ids;
        for (int i : order) ids.emplace_back(i);
        return ids;
      }()) {}

Permutation Permutation::Identity(int n) {
  std::vector<PlayerId> order;
  order.reserve(n);
  for (int i = 1; i <= n; ++i) order.emplace_back(i);
  return Permutation(std::move(order));
}

void Permutation::ValidateFor(const CpGame& game) const {
  if (size() != game.num_players()) {
    throw Error(ErrorCode::kInvalidPermutation,
                "permutation has " + std::to_string(size()) +
                    " entries but the game has " +
                    std::to_string(game.num_players()) + " players");
  }
}

Imputation::Imputation(std::vector<Rational> payoffs)
    : payoffs_(std::move(payoffs)) {
  for (Rational& p : payoffs_) p.canonicalize();
}

Imputation Imputation::ForGame(const CpGame& game,
                               std::vector<Rational> payoffs) {
  Imputation result(std::move(payoffs));
  CheckEfficient(game, result);
  return result;
}

const Rational& Imputation::payoff(PlayerId player) const {
  if (player.index() < 1 || player.index() > size()) {
    throw Error(ErrorCode::kInvalidPlayer,
                "invalid player " + std::to_string(player.index()));
  }
  return payoffs_[player.offset()];
}

Rational Imputation::Total() const {
  Rational total = 0;
  for (const Rational& p : payoffs_) total += p;
  return total;
}

void CheckEfficient(const CpGame& game, const Imputation& imputation) {
  CheckLength(game, imputation);
  const Rational total = imputation.Total();
  if (total != game.GrandValue()) {
    throw NotEfficientError(ToString(total), ToString(game.GrandValue()));
  }
}

Rational CoalitionPayoff(const Imputation& imputation,
                         const Coalition& coalition) {
  coalition.Validate(imputation.size());
  Rational total = 0;
  for (PlayerId p : coalition.members()) total += imputation.payoff(p);
  return total;
}

std::vector<Integer> MarginalContributions(const CpGame& game,
                                           const Permutation& permutation) {
  permutation.ValidateFor(game);
  const auto weights = game.weights();
  std::vector<Integer> contributions(weights.size());
  auto order = permutation.order();
  Integer running = weights[order.front().offset()];
  contributions[order.front().offset()] = running;
  for (std::size_t k = 1; k < order.size(); ++k) {
    const Integer& w = weights[order[k].offset()];
    Integer& m = contributions[order[k].offset()];
    m = w - 1;
    m *= running;
    running *= w;
  }
  return contributions;
}

Imputation MarginalVector(const CpGame& game, const Permutation& permutation) {
  std::vector<Integer> contributions = MarginalContributions(game, permutation);
  std::vector<Rational> payoffs;
  payoffs.reserve(contributions.size());
  for (Integer& m : contributions) payoffs.emplace_back(m);
  return Imputation(std::move(payoffs));
}

Imputation CoreImputation(const CpGame& game) {
  return MarginalVector(game, Permutation::Identity(game.num_players()));
}

Rational Excess(const CpGame& game, const Imputation& imputation,
                const Coalition& coalition) {
  CheckLength(game, imputation);
  const Integer value = game.Value(coalition);
  return Rational(value) - CoalitionPayoff(imputation, coalition);
}

bool Blocks(const CpGame& game, const Imputation& imputation,
            const Coalition& coalition) {
  return sgn(Excess(game, imputation, coalition)) > 0;
}

CoreVerdict CoreCheck(const CpGame& game, const Imputation& imputation,
                      const Limits& limits) {
  const int n = game.num_players();
  EnforceLimit(n, limits.enumeration, "core check");
  CheckEfficient(game, imputation);

  const auto values =
      internal::MakeSplitTables(game.weights(), Integer(1), Product);
  const auto payoffs =
      internal::MakeSplitTables(imputation.payoffs(), Rational(0), Sum);
  const int low_bits = values.low_bits;

  Integer value;
  Rational paid;
  for (Mask high = 0; high < values.high.size(); ++high) {
    for (Mask low = (high == 0 ? 1 : 0); low < values.low.size(); ++low) {
      value = values.low[low] * values.high[high];
      paid = payoffs.low[low] + payoffs.high[high];
      if (mpq_cmp_z(paid.get_mpq_t(), value.get_mpz_t()) < 0) {
        const Mask mask = (high << low_bits) | low;
        return CoreVerdict{Blocked{Coalition::FromMask(mask),
                                   Rational(value) - paid}};
      }
    }
  }
  return CoreVerdict{};
}

Imputation Shapley(const CpGame& game, const Limits& limits) {
  const int n = game.num_players();
  EnforceLimit(n, limits.factorial, "shapley");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::vector<Integer> totals(n, Integer(0));
  Integer count = 0;
  do {
    const auto contributions = MarginalContributions(
        game, Permutation(std::vector<PlayerId>(order.begin(), order.end())));
    for (int i = 0; i < n; ++i) totals[i] += contributions[i];
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));

  std::vector<Rational> payoffs;
  payoffs.reserve(n);
  for (const Integer& total : totals) payoffs.emplace_back(total, count);
  return Imputation(std::move(payoffs));
}

std::vector<Rational> Banzhaf(const CpGame& game, const Limits& limits) {
  const int n = game.num_players();
  EnforceLimit(n, limits.enumeration, "banzhaf");

  // sum_{C not containing i} v(C + i) - v(C)
  //   = sum_{S containing i} v(S) - sum_{C not containing i} v(C).
  const auto values =
      internal::MakeSplitTables(game.weights(), Integer(1), Product);
  const int low_bits = values.low_bits;
  std::vector<Integer> with(n, Integer(0));
  std::vector<Integer> without(n, Integer(0));
  Integer value;
  for (Mask high = 0; high < values.high.size(); ++high) {
    for (Mask low = (high == 0 ? 1 : 0); low < values.low.size(); ++low) {
      value = values.low[low] * values.high[high];
      const Mask mask = (high << low_bits) | low;
      for (int i = 0; i < n; ++i) {
        if ((mask >> i) & 1) {
          with[i] += value;
        } else {
          without[i] += value;
        }
      }
    }
  }

  Integer coalitions = 1;
  coalitions <<= n - 1;
  std::vector<Rational> result;
  result.reserve(n);
  for (int i = 0; i < n; ++i) {
    result.emplace_back(Integer(with[i] - without[i]), coalitions);
    result.back().canonicalize();
  }
  return result;
}

Imputation WeberMix(const CpGame& game, std::span<const MixtureTerm> mixture) {
  Rational weight_sum = 0;
  for (const MixtureTerm& term : mixture) {
    if (sgn(term.coefficient) < 0) {
      throw Error(ErrorCode::kBadMixture,
                  "negative mixture coefficient " + ToString(term.coefficient));
    }
    term.permutation.ValidateFor(game);
    weight_sum += term.coefficient;
  }
  if (weight_sum != 1) {
    throw Error(ErrorCode::kBadMixture,
                "mixture coefficients sum to " + ToString(weight_sum) +
                    ", expected 1");
  }

  std::vector<Rational> payoffs(game.num_players(), Rational(0));
  for (const MixtureTerm& term : mixture) {
    if (sgn(term.coefficient) == 0) continue;
    const auto contributions = MarginalContributions(game, term.permutation);
    for (std::size_t i = 0; i < payoffs.size(); ++i) {
      payoffs[i] += term.coefficient * contributions[i];
    }
  }
  return Imputation(std::move(payoffs));
}

}  // namespace cpg
