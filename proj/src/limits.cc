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

#include "cpg/limits.h"

#include <algorithm>

#include "cpg/arith.h"
#include "cpg/errors.h"

namespace cpg {

void EnforceLimit(int n, int limit, const char* what) {
  const int effective = std::min(limit, kMaxMaskPlayers);
  if (n > effective) throw LimitExceededError(n, effective, what);
}

}  // namespace cpg
