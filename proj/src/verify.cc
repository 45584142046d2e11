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

#include "cpg/verify.h"

#include <string>
#include <utility>
#include <variant>

#include "cpg/errors.h"
#include "subset_fold.h"

namespace cpg {
namespace {

Integer Product(const Integer& a, const Integer& b) { return a * b; }

// Both numeric representations the oracles run on. Integral tables (every
// CPG) take the mpz path.
using Values = std::variant<std::vector<Integer>, std::vector<Rational>>;

Values Materialize(const GameView& game) {
  const Mask count = Mask{1} << game.num_players();
  std::vector<Rational> values;
  if (const auto* table = dynamic_cast<const TableGame*>(&game)) {
    values = table->values();
  } else {
    values.reserve(count);
    for (Mask m = 0; m < count; ++m) values.push_back(game.Value(m));
  }
  bool integral = true;
  for (const Rational& v : values) {
    if (v.get_den() != 1) {
      integral = false;
      break;
    }
  }
  if (!integral) return values;
  std::vector<Integer> integers;
  integers.reserve(values.size());
  for (const Rational& v : values) integers.push_back(v.get_num());
  return integers;
}

Witness MakeWitness(Mask first, Mask second) {
  return Witness{Coalition::FromMask(first), Coalition::FromMask(second)};
}

template <typename T>
std::optional<Witness> ScanMonotone(const std::vector<T>& v, int n) {
  (void)n;
  for (Mask c = 1; c < v.size(); ++c) {
    for (Mask rest = c; rest != 0; rest &= rest - 1) {
      const Mask sub = c ^ (rest & (~rest + 1));
      if (v[sub] > v[c]) return MakeWitness(sub, c);
    }
  }
  return std::nullopt;
}

template <typename T>
std::optional<Witness> ScanSuperadditive(const std::vector<T>& v, int n) {
  const Mask full = (Mask{1} << n) - 1;
  T lhs;
  for (Mask a = 1; a <= full; ++a) {
    const Mask complement = full ^ a;
    // Subsets of the complement in increasing order.
    for (Mask b = (~complement + 1) & complement; b != 0;
         b = (b - complement) & complement) {
      lhs = v[a] + v[b];
      if (lhs > v[a | b]) return MakeWitness(a, b);
    }
  }
  return std::nullopt;
}

template <typename T>
std::optional<Witness> ScanConvex(const std::vector<T>& v, int n) {
  (void)n;
  T lhs;
  T rhs;
  for (Mask a = 0; a < v.size(); ++a) {
    for (Mask b = 0; b < v.size(); ++b) {
      lhs = v[a | b] + v[a & b];
      rhs = v[a] + v[b];
      if (lhs < rhs) return MakeWitness(a, b);
    }
  }
  return std::nullopt;
}

template <typename T>
std::vector<PlayerId> ScanDummies(const std::vector<T>& v, int n) {
  std::vector<PlayerId> dummies;
  for (int i = 0; i < n; ++i) {
    const Mask bit = Mask{1} << i;
    bool contributes = false;
    for (Mask c = 0; c < v.size() && !contributes; ++c) {
      if ((c & bit) == 0 && v[c | bit] > v[c]) contributes = true;
    }
    if (!contributes) dummies.emplace_back(i + 1);
  }
  return dummies;
}

template <typename Scan>
auto RunOracle(const GameView& game, int limit, const char* what, Scan scan) {
  const int n = game.num_players();
  EnforceLimit(n, limit, what);
  const Values values = Materialize(game);
  return std::visit([&](const auto& v) { return scan(v, n); }, values);
}

}  // namespace

TableGame::TableGame(int n, std::vector<Rational> values)
    : n_(n), values_(std::move(values)) {}

TableGame TableGame::Create(int n, std::vector<Rational> values) {
  if (n < 1) throw Error(ErrorCode::kEmptyGame, "a game needs at least one player");
  if (n > kMaxMaskPlayers || values.size() != (Mask{1} << n)) {
    throw Error(ErrorCode::kBadTable,
                "a table for " + std::to_string(n) + " players needs 2^" +
                    std::to_string(n) + " entries, got " +
                    std::to_string(values.size()));
  }
  for (Rational& v : values) v.canonicalize();
  return TableGame(n, std::move(values));
}

Rational TableGame::Value(Mask coalition) const {
  if (coalition >= values_.size()) {
    throw Error(ErrorCode::kInvalidPlayer,
                "coalition mask " + std::to_string(coalition) +
                    " names players beyond " + std::to_string(n_));
  }
  return values_[coalition];
}

TableGame ToTable(const CpGame& game, const Limits& limits) {
  const int n = game.num_players();
  EnforceLimit(n, limits.enumeration, "table");
  const auto products =
      internal::SubsetFold(game.weights(), Integer(1), Product);
  std::vector<Rational> values;
  values.reserve(products.size());
  values.emplace_back(0);
  for (Mask m = 1; m < products.size(); ++m) values.emplace_back(products[m]);
  return TableGame::Create(n, std::move(values));
}

CheckResult CheckMonotone(const GameView& game, const Limits& limits) {
  return CheckResult{RunOracle(game, limits.enumeration, "monotone check",
                               [](const auto& v, int n) {
                                 return ScanMonotone(v, n);
                               })};
}

CheckResult CheckSuperadditive(const GameView& game, const Limits& limits) {
  return CheckResult{RunOracle(game, limits.enumeration, "superadditive check",
                               [](const auto& v, int n) {
                                 return ScanSuperadditive(v, n);
                               })};
}

CheckResult CheckConvex(const GameView& game, const Limits& limits) {
  return CheckResult{RunOracle(game, limits.pairwise, "convexity check",
                               [](const auto& v, int n) {
                                 return ScanConvex(v, n);
                               })};
}

std::vector<PlayerId> FindDummies(const GameView& game, const Limits& limits) {
  return RunOracle(game, limits.enumeration, "dummy search",
                   [](const auto& v, int n) { return ScanDummies(v, n); });
}

bool WitnessReproduces(const GameView& game, Property property,
                       const Witness& witness) {
  const int n = game.num_players();
  witness.first.Validate(n);
  witness.second.Validate(n);
  const Mask a = witness.first.ToMask();
  const Mask b = witness.second.ToMask();
  switch (property) {
    case Property::kMonotone:
      return (a & b) == a && a != b && game.Value(a) > game.Value(b);
    case Property::kSuperadditive:
      return a != 0 && b != 0 && (a & b) == 0 &&
             game.Value(a) + game.Value(b) > game.Value(a | b);
    case Property::kConvex:
      return game.Value(a | b) <
             game.Value(a) + game.Value(b) - game.Value(a & b);
  }
  return false;
}

CoreVerdict CheckCore(const GameView& game, const Imputation& imputation,
                      const Limits& limits) {
  const int n = game.num_players();
  EnforceLimit(n, limits.enumeration, "core check");
  if (imputation.size() != n) {
    throw Error(ErrorCode::kLengthMismatch,
                "imputation has " + std::to_string(imputation.size()) +
                    " entries but the game has " + std::to_string(n) +
                    " players");
  }
  const Mask full = (Mask{1} << n) - 1;
  const Rational grand = game.Value(full);
  const Rational total = imputation.Total();
  if (total != grand) throw NotEfficientError(ToString(total), ToString(grand));

  const auto paid = internal::SubsetFold(
      imputation.payoffs(), Rational(0),
      [](const Rational& a, const Rational& b) -> Rational { return a + b; });
  for (Mask m = 0; m <= full; ++m) {
    Rational excess = game.Value(m) - paid[m];
    if (sgn(excess) > 0) {
      return CoreVerdict{Blocked{Coalition::FromMask(m), std::move(excess)}};
    }
  }
  return CoreVerdict{};
}

}  // namespace cpg
