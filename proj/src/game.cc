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

#include "cpg/game.h"

#include <algorithm>
#include <string>
#include <utility>

#include "cpg/errors.h"

namespace cpg {
namespace {

[[noreturn]] void ThrowInvalidPlayer(int index, int n) {
  std::string message = "invalid player " + std::to_string(index);
  if (n > 0) message += " (game has " + std::to_string(n) + " players)";
  throw Error(ErrorCode::kInvalidPlayer, message);
}

}  // namespace

Coalition::Coalition(std::initializer_list<int> indices) {
  std::vector<PlayerId> members;
  members.reserve(indices.size());
  for (int index : indices) members.emplace_back(index);
  *this = Coalition(std::move(members));
}

Coalition::Coalition(std::vector<PlayerId> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (!members_.empty() && members_.front().index() < 1) {
    ThrowInvalidPlayer(members_.front().index(), 0);
  }
  const auto dup = std::adjacent_find(members_.begin(), members_.end());
  if (dup != members_.end()) {
    throw Error(ErrorCode::kDuplicatePlayer,
                "player " + std::to_string(dup->index()) +
                    " appears more than once in a coalition");
  }
}

Coalition Coalition::FromMask(Mask mask) {
  Coalition result;
  for (int bit = 0; mask != 0; ++bit, mask >>= 1) {
    if (mask & 1) result.members_.emplace_back(bit + 1);
  }
  return result;
}

Coalition Coalition::Grand(int n) {
  Coalition result;
  result.members_.reserve(n);
  for (int i = 1; i <= n; ++i) result.members_.emplace_back(i);
  return result;
}

bool Coalition::Contains(PlayerId player) const {
  return std::binary_search(members_.begin(), members_.end(), player);
}

void Coalition::Validate(int n) const {
  if (!members_.empty() && members_.back().index() > n) {
    ThrowInvalidPlayer(members_.back().index(), n);
  }
}

Mask Coalition::ToMask() const {
  Mask mask = 0;
  for (PlayerId p : members_) {
    if (p.index() > 64) ThrowInvalidPlayer(p.index(), 64);
    mask |= Mask{1} << p.offset();
  }
  return mask;
}

CpGame CpGame::Create(std::vector<Integer> weights) {
  if (weights.empty()) {
    throw Error(ErrorCode::kEmptyGame, "a game needs at least one player");
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 2) throw InvalidWeightError(i + 1, ToString(weights[i]));
  }
  return CpGame(std::move(weights));
}

CpGame::CpGame(std::vector<Integer> weights) : weights_(std::move(weights)) {
  grand_value_ = 1;
  for (const Integer& w : weights_) grand_value_ *= w;
}

const Integer& CpGame::weight(PlayerId player) const {
  ValidatePlayer(player);
  return weights_[player.offset()];
}

void CpGame::ValidatePlayer(PlayerId player) const {
  if (player.index() < 1 || player.index() > num_players()) {
    ThrowInvalidPlayer(player.index(), num_players());
  }
}

Integer CpGame::Value(const Coalition& coalition) const {
  coalition.Validate(num_players());
  if (coalition.empty()) return 0;
  Integer product = 1;
  for (PlayerId p : coalition.members()) product *= weights_[p.offset()];
  return product;
}

Integer CpGame::ValueOfMask(Mask mask) const {
  if (mask == 0) return 0;
  const int n = num_players();
  if (n < 64 && (mask >> n) != 0) {
    Mask high = mask >> n;
    int bit = n;
    while ((high & 1) == 0) {
      high >>= 1;
      ++bit;
    }
    ThrowInvalidPlayer(bit + 1, n);
  }
  Integer product = 1;
  for (int bit = 0; mask != 0; ++bit, mask >>= 1) {
    if (mask & 1) product *= weights_[bit];
  }
  return product;
}

Integer CpGame::MarginalContribution(const Coalition& coalition,
                                     PlayerId player) const {
  ValidatePlayer(player);
  coalition.Validate(num_players());
  if (coalition.Contains(player)) {
    throw Error(ErrorCode::kPlayerInCoalition,
                "player " + std::to_string(player.index()) +
                    " is already a member of the coalition");
  }
  if (coalition.empty()) return weights_[player.offset()];
  const Integer base = Value(coalition);
  return base * weights_[player.offset()] - base;
}

}  // namespace cpg
