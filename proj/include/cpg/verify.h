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

#ifndef CPG_VERIFY_H_
#define CPG_VERIFY_H_

#include <optional>
#include <vector>

#include "cpg/arith.h"
#include "cpg/game.h"
#include "cpg/limits.h"
#include "cpg/solutions.h"

namespace cpg {

// Read-only access to a characteristic function over coalition masks.
// Implementations must be deterministic.
class GameView {
 public:
  virtual ~GameView() = default;

  virtual int num_players() const = 0;
  virtual Rational Value(Mask coalition) const = 0;
};

// Views a CpGame through its characteristic function. Holds a reference;
// the game must outlive the view.
class CpGameView final : public GameView {
 public:
  explicit CpGameView(const CpGame& game) : game_(game) {}

  int num_players() const override { return game_.num_players(); }
  Rational Value(Mask coalition) const override {
    return Rational(game_.ValueOfMask(coalition));
  }

 private:
  const CpGame& game_;
};

// A fully tabulated TU game: one exact value for each of the 2^n masks.
class TableGame final : public GameView {
 public:
  // Throws BadTable unless values.size() == 2^n, and EmptyGame for n < 1.
  static TableGame Create(int n, std::vector<Rational> values);

  int num_players() const override { return n_; }
  Rational Value(Mask coalition) const override;
  const std::vector<Rational>& values() const { return values_; }

  friend bool operator==(const TableGame& a, const TableGame& b) {
    return a.n_ == b.n_ && a.values_ == b.values_;
  }

 private:
  TableGame(int n, std::vector<Rational> values);

  int n_;
  std::vector<Rational> values_;
};

TableGame ToTable(const CpGame& game, const Limits& limits = {});

enum class Property { kMonotone, kSuperadditive, kConvex };

// Counterexample to a pairwise property. For kMonotone, `first` is the
// subset C' and `second` the superset C with v(C') > v(C). For the other
// properties they are the pair (A, B).
struct Witness {
  Coalition first;
  Coalition second;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckResult {
  std::optional<Witness> witness;

  bool holds() const { return !witness.has_value(); }
};

// v(C \ {i}) <= v(C) for every C and member i. Immediate subsets suffice:
// any C' in C is reached by removing one member at a time, and <= chains.
// C runs in increasing mask order, i in increasing player order.
CheckResult CheckMonotone(const GameView& game, const Limits& limits = {});

// v(A) + v(B) <= v(A u B) for disjoint nonempty A, B. A runs in increasing
// mask order, then B over the nonempty subsets of the complement of A.
CheckResult CheckSuperadditive(const GameView& game, const Limits& limits = {});

// v(A u B) >= v(A) + v(B) - v(A n B) for every ordered pair of coalitions,
// empty and nested ones included: the pairwise definition, all 4^n pairs,
// bounded by limits.pairwise.
CheckResult CheckConvex(const GameView& game, const Limits& limits = {});

// Players whose marginal contribution v(C + i) - v(C) is never strictly
// positive over the coalitions C not containing them.
std::vector<PlayerId> FindDummies(const GameView& game,
                                  const Limits& limits = {});

// True iff re-evaluating `witness` against `game` violates `property`.
bool WitnessReproduces(const GameView& game, Property property,
                       const Witness& witness);

// Core check for an arbitrary TU game. Same ordering and witness contract
// as the CpGame overload; throws NotEfficientError unless the payoffs sum
// to v(P).
CoreVerdict CheckCore(const GameView& game, const Imputation& imputation,
                      const Limits& limits = {});

}  // namespace cpg

#endif  // CPG_VERIFY_H_
