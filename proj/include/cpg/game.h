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

#ifndef CPG_GAME_H_
#define CPG_GAME_H_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "cpg/arith.h"

namespace cpg {

// 1-based player index, as in a_1..a_n.
class PlayerId {
 public:
  constexpr PlayerId() = default;
  constexpr explicit PlayerId(int index) : index_(index) {}

  constexpr int index() const { return index_; }
  constexpr int offset() const { return index_ - 1; }

  friend constexpr auto operator<=>(PlayerId, PlayerId) = default;

 private:
  int index_ = 0;
};

// A set of players kept as a strictly increasing sequence of ids. A
// Coalition by itself does not know the game size; operations taking a
// game validate membership against it.
class Coalition {
 public:
  Coalition() = default;

  // Sorts the ids. Throws DuplicatePlayer on repeats and InvalidPlayer on
  // ids below 1.
  Coalition(std::initializer_list<int> indices);
  explicit Coalition(std::vector<PlayerId> members);

  static Coalition FromMask(Mask mask);
  static Coalition Grand(int n);

  std::span<const PlayerId> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool Contains(PlayerId player) const;

  // Throws InvalidPlayer if any member exceeds n.
  void Validate(int n) const;

  // Throws InvalidPlayer if a member does not fit in a Mask.
  Mask ToMask() const;

  friend bool operator==(const Coalition&, const Coalition&) = default;

 private:
  std::vector<PlayerId> members_;
};

// Cooperative product game: v(empty) = 0 and v(C) is the product of the
// member weights otherwise. All weights are integers >= 2. Immutable.
class CpGame {
 public:
  // Throws EmptyGame for an empty weight list and InvalidWeightError for the
  // first weight below 2 (1-based position).
  static CpGame Create(std::vector<Integer> weights);

  int num_players() const { return static_cast<int>(weights_.size()); }
  std::span<const Integer> weights() const { return weights_; }
  const Integer& weight(PlayerId player) const;

  Integer Value(const Coalition& coalition) const;
  Integer ValueOfMask(Mask mask) const;
  const Integer& GrandValue() const { return grand_value_; }

  // v(C + {i}) - v(C). Throws PlayerInCoalition if i is already in C.
  Integer MarginalContribution(const Coalition& coalition,
                               PlayerId player) const;

  void ValidatePlayer(PlayerId player) const;

  friend bool operator==(const CpGame& a, const CpGame& b) {
    return a.weights_ == b.weights_;
  }

 private:
  explicit CpGame(std::vector<Integer> weights);

  std::vector<Integer> weights_;
  Integer grand_value_;
};

}  // namespace cpg

#endif  // CPG_GAME_H_
