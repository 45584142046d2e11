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

#include <algorithm>
#include <bit>
#include <optional>
#include <random>
#include <vector>

#include "cpg/errors.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace cpg {
namespace {

Rational Q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

TableGame Table(int n, std::vector<Rational> values) {
  return TableGame::Create(n, std::move(values));
}

CpGame Game(std::vector<Integer> weights) {
  return CpGame::Create(std::move(weights));
}

TEST(ToTableTest, Examples) {
  EXPECT_EQ(ToTable(Game({2, 3})).values(),
            (std::vector<Rational>{0, 2, 3, 6}));
  EXPECT_EQ(ToTable(Game({2})).values(), (std::vector<Rational>{0, 2}));
  const TableGame table = ToTable(Game({2, 3, 5}));
  ASSERT_EQ(table.values().size(), 8u);
  EXPECT_EQ(*std::max_element(table.values().begin(), table.values().end()),
            30);
  EXPECT_THROW(ToTable(Game(std::vector<Integer>(21, 2))), LimitExceededError);
}

TEST(ToTableTest, AgreesWithDirectEvaluation) {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 12; ++n) {
    const auto weights = testing::RandomWeights(rng, n, 2, 1'000'000);
    const CpGame game = Game(weights);
    const TableGame table = ToTable(game);
    for (Mask m = 0; m < table.values().size(); ++m) {
      ASSERT_EQ(table.Value(m), Rational(game.Value(Coalition::FromMask(m))));
    }
  }
}

TEST(TableGameTest, RejectsWrongSize) {
  EXPECT_THROW(Table(2, {0, 1, 2}), Error);
  EXPECT_THROW(Table(0, {0}), Error);
}

TEST(CheckMonotoneTest, Examples) {
  EXPECT_TRUE(CheckMonotone(CpGameView(Game({2, 3, 5, 7}))).holds());
  const CheckResult bad = CheckMonotone(Table(2, {0, 2, 1, 1}));
  ASSERT_FALSE(bad.holds());
  EXPECT_EQ(*bad.witness, (Witness{Coalition{1}, Coalition{1, 2}}));
  EXPECT_TRUE(CheckMonotone(ToTable(Game({2}))).holds());
}

TEST(CheckSuperadditiveTest, Examples) {
  EXPECT_TRUE(CheckSuperadditive(CpGameView(Game({2, 3, 5, 7}))).holds());
  const CheckResult bad = CheckSuperadditive(Table(2, {0, 2, 2, 3}));
  ASSERT_FALSE(bad.holds());
  EXPECT_EQ(*bad.witness, (Witness{Coalition{1}, Coalition{2}}));
  EXPECT_TRUE(CheckSuperadditive(ToTable(Game({2}))).holds());
}

TEST(CheckConvexTest, Examples) {
  EXPECT_TRUE(CheckConvex(CpGameView(Game({2, 3, 5, 7}))).holds());
  const CheckResult bad = CheckConvex(Table(2, {0, 1, 1, 1}));
  ASSERT_FALSE(bad.holds());
  EXPECT_EQ(*bad.witness, (Witness{Coalition{1}, Coalition{2}}));
  EXPECT_TRUE(CheckConvex(ToTable(Game({2}))).holds());
  EXPECT_THROW(CheckConvex(CpGameView(Game(std::vector<Integer>(11, 2)))),
               LimitExceededError);
}

TEST(CheckConvexTest, RationalTables) {
  // v(S) = |S|^2 / 3 is supermodular.
  std::vector<Rational> values;
  for (Mask m = 0; m < 8; ++m) {
    const long k = std::popcount(m);
    values.push_back(Q(k * k, 3));
  }
  EXPECT_TRUE(CheckConvex(Table(3, values)).holds());
  values[7] = Q(2);
  EXPECT_FALSE(CheckConvex(Table(3, values)).holds());
}

TEST(FindDummiesTest, Examples) {
  EXPECT_TRUE(FindDummies(CpGameView(Game({2, 3, 5, 7}))).empty());
  EXPECT_EQ(FindDummies(Table(2, {0, 3, 0, 3})),
            (std::vector<PlayerId>{PlayerId(2)}));
  EXPECT_TRUE(FindDummies(ToTable(Game({2}))).empty());
}

TEST(CheckCoreTest, EmptyCoreCounterexample) {
  const TableGame table = Table(2, {0, 1, 1, 1});
  for (long k = -4; k <= 8; ++k) {
    const Rational p1 = Q(k, 4);
    const CoreVerdict verdict =
        CheckCore(table, Imputation({p1, Rational(1) - p1}));
    EXPECT_FALSE(verdict.in_core());
  }
}

// Naive reference scans over explicit coalition pairs, used to pin the
// first-witness contract of each oracle.
std::optional<Witness> ReferenceConvex(const TableGame& t) {
  const Mask count = t.values().size();
  for (Mask a = 0; a < count; ++a) {
    for (Mask b = 0; b < count; ++b) {
      if (t.Value(a | b) < t.Value(a) + t.Value(b) - t.Value(a & b)) {
        return Witness{Coalition::FromMask(a), Coalition::FromMask(b)};
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> ReferenceSuperadditive(const TableGame& t) {
  const Mask count = t.values().size();
  for (Mask a = 1; a < count; ++a) {
    for (Mask b = 1; b < count; ++b) {
      if ((a & b) == 0 && t.Value(a) + t.Value(b) > t.Value(a | b)) {
        return Witness{Coalition::FromMask(a), Coalition::FromMask(b)};
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> ReferenceMonotone(const TableGame& t) {
  const Mask count = t.values().size();
  for (Mask c = 0; c < count; ++c) {
    for (int i = 0; i < t.num_players(); ++i) {
      const Mask bit = Mask{1} << i;
      if ((c & bit) && t.Value(c ^ bit) > t.Value(c)) {
        return Witness{Coalition::FromMask(c ^ bit), Coalition::FromMask(c)};
      }
    }
  }
  return std::nullopt;
}

TableGame RandomTable(std::mt19937_64& rng, int n, bool rational) {
  std::vector<Rational> values{0};
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    values.push_back(Q(static_cast<long>(rng() % 40), rational ? 1 + rng() % 3 : 1));
  }
  return Table(n, values);
}

TEST(OracleProperties, WitnessesAreFirstAndReproduce) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 5;
    const TableGame table = RandomTable(rng, n, trial % 2 == 1);
    const CheckResult convex = CheckConvex(table);
    const CheckResult super = CheckSuperadditive(table);
    const CheckResult mono = CheckMonotone(table);
    EXPECT_EQ(convex.witness, ReferenceConvex(table));
    EXPECT_EQ(super.witness, ReferenceSuperadditive(table));
    EXPECT_EQ(mono.witness, ReferenceMonotone(table));
    if (convex.witness) {
      EXPECT_TRUE(WitnessReproduces(table, Property::kConvex, *convex.witness));
    }
    if (super.witness) {
      EXPECT_TRUE(
          WitnessReproduces(table, Property::kSuperadditive, *super.witness));
    }
    if (mono.witness) {
      EXPECT_TRUE(WitnessReproduces(table, Property::kMonotone, *mono.witness));
    }
  }
}

TEST(OracleProperties, ConvexImpliesSuperadditive) {
  std::mt19937_64 rng(78);
  int convex_seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 5;
    std::vector<Rational> values;
    if (trial % 2 == 0) {
      // Supermodular construction: v(S) = f(|S|) with f convex, f(0) = 0,
      // plus a random additive part.
      std::vector<long> increments{static_cast<long>(rng() % 4)};
      for (int k = 1; k < n; ++k) {
        increments.push_back(increments.back() + static_cast<long>(rng() % 4));
      }
      std::vector<long> additive;
      for (int i = 0; i < n; ++i) additive.push_back(rng() % 5);
      for (Mask m = 0; m < (Mask{1} << n); ++m) {
        long v = 0;
        const int k = std::popcount(m);
        for (int j = 0; j < k; ++j) v += increments[j];
        for (int i : testing::MembersOf(m)) v += additive[i];
        values.push_back(Q(v));
      }
    } else {
      values = RandomTable(rng, n, false).values();
    }
    const TableGame table = Table(n, values);
    if (CheckConvex(table).holds()) {
      ++convex_seen;
      EXPECT_TRUE(CheckSuperadditive(table).holds());
    }
  }
  EXPECT_GE(convex_seen, 200);
}

TEST(OracleProperties, CpGamesSatisfyEveryObservation) {
  std::mt19937_64 rng(79);
  for (int n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      const CpGame game = Game(testing::RandomWeights(rng, n, 2, 1'000'000));
      const CpGameView view(game);
      EXPECT_TRUE(CheckMonotone(view).holds());
      EXPECT_TRUE(CheckSuperadditive(view).holds());
      EXPECT_TRUE(CheckConvex(view).holds());
      EXPECT_TRUE(FindDummies(view).empty());
    }
  }
}

TEST(OracleProperties, LimitsAreEnforced) {
  const CpGame game = Game(std::vector<Integer>(6, 3));
  const CpGameView view(game);
  const Limits tight = Limits::Uniform(5);
  EXPECT_THROW(CheckMonotone(view, tight), LimitExceededError);
  EXPECT_THROW(CheckSuperadditive(view, tight), LimitExceededError);
  EXPECT_THROW(CheckConvex(view, tight), LimitExceededError);
  EXPECT_THROW(FindDummies(view, tight), LimitExceededError);
}

}  // namespace
}  // namespace cpg
