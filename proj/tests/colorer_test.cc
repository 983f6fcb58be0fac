#include "eqchoose/colorer.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "eqchoose/criteria.h"
#include "test_support.h"

namespace eqchoose {
namespace {

// Every coloring of an edgeless set from its lists with no color above sigma.
std::vector<std::vector<Color>> AllSigmaColorings(
    const std::vector<ColorList>& lists, int sigma) {
  std::vector<std::vector<Color>> out;
  std::vector<Color> current;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == lists.size()) {
      std::map<Color, int> uses;
      for (Color c : current) ++uses[c];
      if (std::all_of(uses.begin(), uses.end(),
                      [&](const auto& p) { return p.second <= sigma; })) {
        out.push_back(current);
      }
      return;
    }
    for (Color c : lists[i]) {
      current.push_back(c);
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

void ExpectSigmaValid(const std::vector<ColorList>& lists,
                      const SigmaColoring& result, std::int64_t sigma) {
  ASSERT_EQ(result.colors.size(), lists.size());
  std::map<Color, std::int64_t> uses;
  for (std::size_t i = 0; i < lists.size(); ++i) {
    EXPECT_TRUE(std::binary_search(lists[i].begin(), lists[i].end(),
                                   result.colors[i]));
    ++uses[result.colors[i]];
  }
  for (const auto& [c, count] : uses) EXPECT_LE(count, sigma) << c;
}

TEST(GreedySigmaColorTest, TwoColorsTwiceEach) {
  const std::vector<ColorList> lists(4, ColorList{0, 1});
  const SigmaColoring r = GreedySigmaColor(lists, 2, 2);
  EXPECT_EQ(r.colors, (std::vector<Color>{0, 0, 1, 1}));
  ASSERT_EQ(r.trace.rounds.size(), 2u);
  EXPECT_EQ(r.trace.rounds[0].vertices, (std::vector<int>{0, 1}));
  EXPECT_TRUE(r.trace.leftover.empty());
  const auto valid = AllSigmaColorings(lists, 2);
  EXPECT_EQ(valid.size(), 6u);  // C(4,2)
  EXPECT_NE(std::find(valid.begin(), valid.end(), r.colors), valid.end());
}

TEST(GreedySigmaColorTest, SingleForcedVertex) {
  const std::vector<ColorList> lists = {{7}};
  EXPECT_EQ(GreedySigmaColor(lists, 1, 1).colors, (std::vector<Color>{7}));
}

TEST(GreedySigmaColorTest, TriangleOfPairs) {
  const std::vector<ColorList> lists = {{0, 1}, {0, 2}, {1, 2}};
  const SigmaColoring r = GreedySigmaColor(lists, 2, 2);
  const auto valid = AllSigmaColorings(lists, 2);
  EXPECT_EQ(valid.size(), 8u);  // no color sits in 3 lists
  EXPECT_NE(std::find(valid.begin(), valid.end(), r.colors), valid.end());
  EXPECT_EQ(r.colors, (std::vector<Color>{0, 0, 1}));
  EXPECT_EQ(r.trace.leftover, (std::vector<int>{2}));
}

TEST(GreedySigmaColorTest, RejectsBadPreconditions) {
  const std::vector<ColorList> lists(5, ColorList{0, 1});
  EXPECT_THROW(GreedySigmaColor(lists, 2, 2), PreconditionError);  // 5 > 4
  EXPECT_THROW(GreedySigmaColor(lists, 3, 2), PreconditionError);  // short
  EXPECT_THROW(GreedySigmaColor(lists, 0, 9), PreconditionError);
  EXPECT_THROW(GreedySigmaColor(lists, 2, 0), PreconditionError);
}

TEST(GreedySigmaColorTest, EmptyInput) {
  EXPECT_TRUE(GreedySigmaColor({}, 1, 1).colors.empty());
}

TEST(GreedySigmaColorTest, Fuzz) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 4000; ++trial) {
    const int eta = 1 + rng() % 6;
    const int sigma = 1 + rng() % 6;
    const int universe = eta + rng() % (13 - eta);
    const int count = trial % 2 ? sigma * eta
                                : static_cast<int>(rng() % (sigma * eta));
    std::vector<ColorList> lists;
    for (int i = 0; i < count; ++i) {
      const int len = eta + rng() % (universe - eta + 1);
      lists.push_back(testing::RandomList(rng, len, universe));
    }
    const SigmaColoring r = GreedySigmaColor(lists, eta, sigma);
    ExpectSigmaValid(lists, r, sigma);
    // Chosen round colors are pairwise distinct and rounds are full.
    std::set<Color> seen;
    for (const GreedyRound& round : r.trace.rounds) {
      EXPECT_TRUE(seen.insert(round.color).second);
      EXPECT_EQ(static_cast<int>(round.vertices.size()), sigma);
    }
  }
}

TEST(ColorKnmMainTest, StarWithSixColors) {
  const KAssignment a = KAssignment::Uniform(Instance(1, 25), 6);
  const ColoringOutcome o = ColorKnmMain(a);
  EXPECT_EQ(o.coloring.colors_uprime, (std::vector<Color>{0}));
  std::map<Color, int> uses;
  for (Color c : o.coloring.colors_a) ++uses[c];
  EXPECT_EQ(uses, (std::map<Color, int>{{1, 5}, {2, 5}, {3, 5}, {4, 5}, {5, 5}}));
  EXPECT_TRUE(CheckEquitable(a, o.coloring).ok());
}

TEST(ColorKnmMainTest, Rainbow) {
  const KAssignment a = KAssignment::Uniform(Instance(2, 2), 4);
  const ColoringOutcome o = ColorKnmMain(a);
  std::set<Color> all(o.coloring.colors_uprime.begin(),
                      o.coloring.colors_uprime.end());
  all.insert(o.coloring.colors_a.begin(), o.coloring.colors_a.end());
  EXPECT_EQ(all.size(), 4u);
  EXPECT_TRUE(CheckEquitable(a, o.coloring).ok());
}

TEST(ColorKnmMainTest, RejectsFailedGate) {
  std::mt19937_64 rng(3);
  const KAssignment a = testing::RandomAssignment(rng, 3, 9, 4, 8);
  EXPECT_FALSE(HoldsThmMain(3, 9, 4));
  EXPECT_THROW(ColorKnmMain(a), PreconditionError);
}

TEST(ColorKnmMainTest, FuzzSmall) {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 5; ++n) {
    for (int m = 1; m + n <= 10; ++m) {
      for (int k = 1; k <= n + m + 1; ++k) {
        if (!HoldsThmMain(n, m, k)) continue;
        for (int trial = 0; trial < 60; ++trial) {
          const KAssignment a = testing::RandomAssignment(rng, n, m, k, 2 * k);
          const ColoringOutcome o = ColorKnmMain(a);
          ASSERT_TRUE(CheckEquitable(a, o.coloring).ok())
              << n << " " << m << " " << k;
        }
      }
    }
  }
}

TEST(ColorKnmMainTest, Deterministic) {
  std::mt19937_64 rng(8);
  const KAssignment a = testing::RandomAssignment(rng, 2, 8, 6, 12);
  ASSERT_TRUE(HoldsThmMain(2, 8, 6));
  const ColoringOutcome first = ColorKnmMain(a);
  const ColoringOutcome second = ColorKnmMain(a);
  EXPECT_EQ(first.coloring, second.coloring);
}

TEST(ChooseDisjointPairTest, Example) {
  const KAssignment a(Instance(2, 4), 2, {{0, 1}, {2, 3}},
                      {{0, 2}, {0, 2}, {1, 3}, {1, 3}});
  // Oracle: beta(0,2)=2, beta(0,3)=0, beta(1,2)=0, beta(1,3)=2.
  EXPECT_EQ(testing::BruteBeta(a, 0, 2), 2);
  EXPECT_EQ(testing::BruteBeta(a, 0, 3), 0);
  EXPECT_EQ(testing::BruteBeta(a, 1, 2), 0);
  EXPECT_EQ(testing::BruteBeta(a, 1, 3), 2);
  EXPECT_EQ(ChooseDisjointPair(a), (PairChoice{0, 3, 0}));
}

TEST(ChooseDisjointPairTest, AvoidingLists) {
  const KAssignment a(Instance(2, 3), 2, {{0, 1}, {2, 3}},
                      {{4, 5}, {5, 6}, {4, 6}});
  EXPECT_EQ(ChooseDisjointPair(a), (PairChoice{0, 2, 0}));
}

TEST(ChooseDisjointPairTest, SingleAVertex) {
  // At most one of the four pairs fits inside a 2-list, so a beta = 0 pair
  // always exists.
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const KAssignment a = testing::RandomDisjointK2m(rng, 1, 2, trial % 3);
    int zero_pairs = 0;
    for (Color cq : a.lists_uprime()[0]) {
      for (Color cr : a.lists_uprime()[1]) {
        zero_pairs += testing::BruteBeta(a, cq, cr) == 0;
      }
    }
    EXPECT_GE(zero_pairs, 3);
    EXPECT_EQ(ChooseDisjointPair(a).beta, 0);
  }
}

TEST(ChooseDisjointPairTest, RejectsSharedColor) {
  const KAssignment a(Instance(2, 1), 2, {{0, 1}, {1, 2}}, {{0, 2}});
  EXPECT_THROW(ChooseDisjointPair(a), PreconditionError);
  const KAssignment b(Instance(3, 1), 2, {{0, 1}, {2, 3}, {4, 5}}, {{0, 2}});
  EXPECT_THROW(ChooseDisjointPair(b), PreconditionError);
}

TEST(ChooseDisjointPairTest, LexLeastAndCountsMatchDefinition) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 1 + rng() % 30;
    const int k = 1 + rng() % 6;
    const KAssignment a = testing::RandomDisjointK2m(rng, m, k, rng() % 4);
    const PairChoice p = ChooseDisjointPair(a);
    EXPECT_LE(4 * p.beta, m);
    EXPECT_EQ(p.beta, testing::BruteBeta(a, p.cq, p.cr));
    // No lexicographically smaller pair qualifies.
    for (Color cq : a.lists_uprime()[0]) {
      for (Color cr : a.lists_uprime()[1]) {
        if (std::pair(cq, cr) < std::pair(p.cq, p.cr)) {
          EXPECT_GT(4 * testing::BruteBeta(a, cq, cr), m);
        }
      }
    }
  }
}

TEST(ColorK2mTest, K23AtTwoColorsAllAssignments) {
  // Every 2-assignment of K_{2,3} over 4 colors: 6^5 of them.
  std::vector<ColorList> pairs;
  for (Color x = 0; x < 4; ++x) {
    for (Color y = x + 1; y < 4; ++y) pairs.push_back({x, y});
  }
  int count = 0;
  for (int code = 0; code < 6 * 6 * 6 * 6 * 6; ++code) {
    int c = code;
    std::vector<ColorList> l;
    for (int i = 0; i < 5; ++i, c /= 6) l.push_back(pairs[c % 6]);
    const KAssignment a(Instance(2, 3), 2, {l[0], l[1]}, {l[2], l[3], l[4]});
    const ColoringOutcome o = ColorK2m(a);
    ASSERT_TRUE(CheckEquitable(a, o.coloring).ok()) << code;
    ++count;
  }
  EXPECT_EQ(count, 7776);
}

TEST(ColorK2mTest, K2_139Uniform) {
  const KAssignment a = KAssignment::Uniform(Instance(2, 139), 14);
  const ColoringOutcome o = ColorK2m(a);
  EXPECT_EQ(o.coloring.colors_uprime, (std::vector<Color>{0, 0}));
  std::map<Color, int> uses;
  for (Color c : o.coloring.colors_a) ++uses[c];
  EXPECT_EQ(uses.size(), 13u);
  EXPECT_FALSE(uses.contains(0));
  for (const auto& [c, count] : uses) EXPECT_LE(count, 11);
  EXPECT_TRUE(CheckEquitable(a, o.coloring).ok());
}

TEST(ColorK2mTest, TrivialPathWhenKAboveVertexCount) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + trial % 6;
    const int k = m + 2 + trial % 3;
    const KAssignment a = testing::RandomAssignment(rng, 2, m, k, 2 * k);
    const ColoringOutcome o = ColorK2m(a);
    ASSERT_TRUE(CheckEquitable(a, o.coloring).ok());
    std::set<Color> all(o.coloring.colors_uprime.begin(),
                        o.coloring.colors_uprime.end());
    all.insert(o.coloring.colors_a.begin(), o.coloring.colors_a.end());
    EXPECT_EQ(static_cast<int>(all.size()), m + 2);
  }
}

TEST(ColorK2mTest, DisjointK25) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<ColorList> a;
    for (int i = 0; i < 5; ++i) a.push_back(testing::RandomList(rng, 3, 6));
    const KAssignment l(Instance(2, 5), 3, {{0, 1, 2}, {3, 4, 5}}, a);
    const ColoringOutcome o = ColorK2m(l);
    ASSERT_TRUE(CheckEquitable(l, o.coloring).ok());
    EXPECT_EQ(o.trace[0].phase, "uprime");
  }
}

TEST(ColorK2mTest, DisjointFuzzCoversEveryPhase) {
  std::mt19937_64 rng(19);
  std::set<std::string> phases;
  for (int m = 1; m <= 20; ++m) {
    for (int k = 3; k < m + 2; ++k) {
      if (!HoldsStarOrK2m(2, m, k)) continue;
      for (int trial = 0; trial < 150; ++trial) {
        const KAssignment a = testing::RandomDisjointK2m(rng, m, k, trial % 3);
        const ColoringOutcome o = ColorK2m(a);
        ASSERT_TRUE(CheckEquitable(a, o.coloring).ok()) << m << " " << k;
        for (const TraceStep& s : o.trace) phases.insert(s.phase);
      }
    }
  }
  for (const char* p : {"uprime", "round", "patch", "sigma", "greedy"}) {
    EXPECT_TRUE(phases.contains(p)) << p;
  }
}

TEST(ColorK2mTest, RejectsFailedGate) {
  const KAssignment a = KAssignment::Uniform(Instance(2, 139), 16);
  EXPECT_THROW(ColorK2m(a), PreconditionError);
  const KAssignment b = KAssignment::Uniform(Instance(3, 3), 5);
  EXPECT_THROW(ColorK2m(b), PreconditionError);
}

TEST(SwapSidesTest, Involution) {
  std::mt19937_64 rng(23);
  const KAssignment a = testing::RandomAssignment(rng, 2, 5, 3, 7);
  EXPECT_EQ(SwapSides(SwapSides(a)), a);
  const EquitableColoring c{{1, 2}, {3, 4, 5}};
  EXPECT_EQ(SwapSides(SwapSides(c)), c);
}

}  // namespace
}  // namespace eqchoose
