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

#ifndef CPG_SUBSET_FOLD_H_
#define CPG_SUBSET_FOLD_H_

#include <bit>
#include <cstddef>
#include <span>
#include <vector>

#include "cpg/arith.h"

namespace cpg::internal {

// out[m] = identity op items[b1] op items[b2] ... over the set bits of m.
template <typename T, typename Op>
std::vector<T> SubsetFold(std::span<const T> items, const T& identity, Op op) {
  std::vector<T> out(std::size_t{1} << items.size());
  out[0] = identity;
  for (Mask m = 1; m < out.size(); ++m) {
    const Mask low = m & (~m + 1);
    out[m] = op(out[m ^ low], items[std::countr_zero(low)]);
  }
  return out;
}

// Splits the player set into a low and a high half so that any per-coalition
// fold over n players costs one combine of two precomputed 2^(n/2) tables.
// Masks are visited as (high << low_bits) | low, i.e. in increasing order
// when the outer loop runs over high and the inner over low.
template <typename T>
struct SplitTables {
  int low_bits = 0;
  std::vector<T> low;
  std::vector<T> high;
};

template <typename T, typename Op>
SplitTables<T> MakeSplitTables(std::span<const T> items, const T& identity,
                               Op op) {
  SplitTables<T> tables;
  tables.low_bits = static_cast<int>(items.size() / 2);
  tables.low = SubsetFold(items.first(tables.low_bits), identity, op);
  tables.high = SubsetFold(items.subspan(tables.low_bits), identity, op);
  return tables;
}

}  // namespace cpg::internal

#endif  // CPG_SUBSET_FOLD_H_
