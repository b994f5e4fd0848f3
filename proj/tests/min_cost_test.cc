// Copyright 2026 The popmatch Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "popmatch/min_cost.h"

#include <algorithm>
#include <optional>
#include <random>
#include <tuple>
#include <vector>

#include "gtest/gtest.h"
#include "popmatch/generator.h"
#include "popmatch/oracle.h"
#include "test_util.h"

namespace popmatch {
namespace {

using ::popmatch::testing::kExA;
using ::popmatch::testing::kExB;
using ::popmatch::testing::kExC;
using ::popmatch::testing::LastResortsUsed;
using ::popmatch::testing::MatchingOf;
using ::popmatch::testing::MaxListRank;
using ::popmatch::testing::RankProfile;

constexpr char kExBCosts[] =
    "a1 p1 0\n"
    "a1 p2 5\n"
    "a2 p1 1\n"
    "a2 p2 1\n";

TEST(ParseCostsTest, ValidAndInvalid) {
  const Instance b = ParseInstance(kExB);
  const PopularStructure ps = BuildStructure(b);
  const CostFunction w = ParseCosts(ps, std::string_view(kExBCosts));
  EXPECT_EQ(w(0, 1), 5);
  EXPECT_EQ(w(1, 0), 1);
  EXPECT_EQ(w(0, b.last_resort(0)), 0);

  const CostFunction big = ParseCosts(
      ps, std::string_view("a1 p1 -123456789012345678901234567890\n"));
  EXPECT_EQ(big(0, 0), Cost("-123456789012345678901234567890"));

  auto kind = [&](std::string_view text) {
    try {
      ParseCosts(ps, text);
    } catch (const InputError& e) {
      return e.kind();
    }
    ADD_FAILURE() << text;
    return InputErrorKind::kSyntax;
  };
  EXPECT_EQ(kind("a1 !lr:a1 3"), InputErrorKind::kNotInE2);
  EXPECT_EQ(kind("a1 p1 x"), InputErrorKind::kSyntax);
  EXPECT_EQ(kind("a1 p1 -"), InputErrorKind::kSyntax);
  EXPECT_EQ(kind("a1 p1 1\na1 p1 2"), InputErrorKind::kSyntax);
  EXPECT_EQ(kind("a7 p1 1"), InputErrorKind::kUnknownApplicant);
  try {
    ParseCosts(ps, std::string_view("a1 p2 1\na2 !lr:a2 4\n"));
  } catch (const InputError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_NE(std::string(e.what()).find("(a2, !lr:a2)"), std::string::npos);
  }
}

TEST(SuccessiveShortestPathsTest, SingleArc) {
  FlowNetwork net(4);
  net.AddArc(0, 1, 0);
  net.AddArc(1, 2, 3);
  net.AddArc(2, 3, 0);
  const FlowResult r = SuccessiveShortestPaths(net, 0, 3, 1);
  EXPECT_EQ(r.cost, 3);
  EXPECT_EQ(r.arc_used, std::vector<bool>({true, true, true}));
}

TEST(SuccessiveShortestPathsTest, ForcedAssignment) {
  FlowNetwork net(6);
  net.AddArc(0, 1, 0);
  net.AddArc(0, 2, 0);
  net.AddArc(1, 3, 2);
  net.AddArc(2, 4, 5);
  net.AddArc(3, 5, 0);
  net.AddArc(4, 5, 0);
  EXPECT_EQ(SuccessiveShortestPaths(net, 0, 5, 2).cost, 7);
}

TEST(SuccessiveShortestPathsTest, PenalizedExampleNetwork) {
  // Applicants a1, a2 (nodes 1, 2); posts p1, p2 (nodes 3, 4). Arcs into the
  // required post p1 carry a penalty of 9.
  FlowNetwork net(6);
  net.AddArc(0, 1, 0);
  net.AddArc(0, 2, 0);
  net.AddArc(1, 3, 0 - 9);
  net.AddArc(1, 4, 5);
  net.AddArc(2, 3, 1 - 9);
  net.AddArc(2, 4, 1);
  net.AddArc(3, 5, 0);
  net.AddArc(4, 5, 0);
  const FlowResult r = SuccessiveShortestPaths(net, 0, 5, 2);
  EXPECT_EQ(r.cost, -8);
  EXPECT_EQ(r.cost + 9, 1);
  EXPECT_TRUE(r.arc_used[2]);
  EXPECT_TRUE(r.arc_used[5]);
}

TEST(SuccessiveShortestPathsTest, Infeasible) {
  FlowNetwork net(4);
  net.AddArc(0, 1, 0);
  net.AddArc(1, 3, 1);
  EXPECT_THROW(SuccessiveShortestPaths(net, 0, 3, 2), InfeasibleFlow);
}

TEST(SuccessiveShortestPathsTest, ArbitraryPrecision) {
  const Cost huge = Cost(1) << 200;
  FlowNetwork net(6);
  net.AddArc(0, 1, 0);
  net.AddArc(0, 2, 0);
  net.AddArc(1, 3, huge);
  net.AddArc(1, 4, huge + 1);
  net.AddArc(2, 3, -huge);
  net.AddArc(2, 4, 0);
  net.AddArc(3, 5, 0);
  net.AddArc(4, 5, 0);
  EXPECT_EQ(SuccessiveShortestPaths(net, 0, 5, 2).cost, 1);
}

// Minimum over all arc subsets that form a flow of the given value.
std::optional<Cost> BruteForceFlow(const FlowNetwork& net, int source,
                                   int sink, int units) {
  std::optional<Cost> best;
  const int arcs = net.num_arcs();
  for (uint32_t mask = 0; mask < (1u << arcs); ++mask) {
    std::vector<int> balance(net.num_nodes(), 0);
    Cost cost = 0;
    for (int k = 0; k < arcs; ++k) {
      if (!(mask >> k & 1)) continue;
      --balance[net.tail(k)];
      ++balance[net.head(k)];
      cost += net.cost(k);
    }
    bool ok = balance[source] == -units && balance[sink] == units;
    for (int v = 0; v < net.num_nodes() && ok; ++v) {
      if (v != source && v != sink) ok = balance[v] == 0;
    }
    if (ok && (!best || cost < *best)) best = cost;
  }
  return best;
}

TEST(SuccessiveShortestPathsTest, MatchesBruteForceOnSmallNetworks) {
  std::mt19937_64 rng(99);
  int feasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int nodes = 3 + rng() % 8;
    FlowNetwork net(nodes);
    // Arcs only go forward, so there are no cycles at all.
    const int arcs = 1 + rng() % 15;
    for (int k = 0; k < arcs; ++k) {
      const int from = rng() % (nodes - 1);
      const int to = from + 1 + rng() % (nodes - 1 - from);
      net.AddArc(from, to, static_cast<int>(rng() % 19) - 9);
    }
    const int units = 1 + rng() % 3;
    const std::optional<Cost> expected = BruteForceFlow(net, 0, nodes - 1, units);
    if (!expected) {
      EXPECT_THROW(SuccessiveShortestPaths(net, 0, nodes - 1, units),
                   InfeasibleFlow);
      continue;
    }
    ++feasible;
    const FlowResult r = SuccessiveShortestPaths(net, 0, nodes - 1, units);
    EXPECT_EQ(r.cost, *expected) << "trial " << trial;
    Cost used = 0;
    for (int k = 0; k < net.num_arcs(); ++k) {
      if (r.arc_used[k]) used += net.cost(k);
    }
    EXPECT_EQ(used, r.cost);
  }
  EXPECT_GT(feasible, 50);
}

// Scaling every cost moves the solver between native 64-bit, 128-bit and
// arbitrary precision arithmetic; the optimum scales with it.
TEST(SuccessiveShortestPathsTest, ScaledCostsAgreeAcrossPrecisions) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int nodes = 3 + rng() % 8;
    std::vector<std::tuple<int, int, int>> arcs;
    for (int k = 0, n = 1 + rng() % 15; k < n; ++k) {
      const int from = rng() % (nodes - 1);
      const int to = from + 1 + rng() % (nodes - 1 - from);
      arcs.emplace_back(from, to, static_cast<int>(rng() % 19) - 9);
    }
    const int units = 1 + rng() % 3;
    std::optional<Cost> base;
    for (int shift : {0, 70, 140}) {
      SCOPED_TRACE(shift);
      FlowNetwork net(nodes);
      for (const auto& [from, to, c] : arcs) {
        net.AddArc(from, to, Cost(c) << shift);
      }
      try {
        const Cost cost = SuccessiveShortestPaths(net, 0, nodes - 1, units).cost;
        if (shift == 0) base = cost;
        ASSERT_TRUE(base.has_value());
        EXPECT_EQ(cost, *base << shift) << "trial " << trial;
      } catch (const InfeasibleFlow&) {
        EXPECT_FALSE(base.has_value()) << "trial " << trial;
      }
    }
  }
}

TEST(MinCostPopularTest, ExampleB) {
  const Instance b = ParseInstance(kExB);
  const PopularStructure ps = BuildStructure(b);
  const Characterization ch = Characterize(ps);
  const MinCostResult r =
      MinCostPopular(ch, ParseCosts(ps, std::string_view(kExBCosts)));
  EXPECT_EQ(r.matching, MatchingOf(b, {{"a1", "p1"}, {"a2", "p2"}}));
  EXPECT_EQ(r.cost, 1);

  const MinCostResult zero = MinCostPopular(ch, CostFunction());
  EXPECT_EQ(zero.cost, 0);
  EXPECT_TRUE(IsPopularChar(ch, zero.matching));
}

TEST(MinCostPopularTest, ExampleCHasNoPopularMatching) {
  const Instance c = ParseInstance(kExC);
  const PopularStructure ps = BuildStructure(c);
  EXPECT_THROW(MinCostPopular(Characterize(ps), CostFunction()),
               NoPopularMatching);
}

TEST(CriterionCostsTest, Examples) {
  const Instance a = ParseInstance(kExA);
  const PopularStructure psa = BuildStructure(a);
  const CostFunction maxcard = CriterionCosts(psa, Criterion::kMaxCard);
  EXPECT_EQ(maxcard(0, 0), 0);
  EXPECT_EQ(maxcard(0, a.last_resort(0)), 1);

  const Instance b = ParseInstance(kExB);
  const PopularStructure psb = BuildStructure(b);
  const CostFunction egal = CriterionCosts(psb, Criterion::kEgalitarian);
  EXPECT_EQ(egal(0, 0), 1);
  EXPECT_EQ(egal(0, 1), 2);
  EXPECT_EQ(egal(1, 0), 1);
  EXPECT_EQ(egal(1, 1), 2);

  // n = |A| + |P| = 2 + 4 and the largest rank on an E2 edge is 2.
  const CostFunction rankmax = CriterionCosts(psb, Criterion::kRankMax);
  EXPECT_EQ(rankmax(0, 0), -7);
  EXPECT_EQ(rankmax(0, 1), -1);
  const CostFunction fair = CriterionCosts(psb, Criterion::kFair);
  EXPECT_EQ(fair(0, 0), 1);
  EXPECT_EQ(fair(0, 1), 7);

  CostFunction user;
  user.Set({0, 0}, -4);
  const CostFunction lex = CriterionCosts(psa, Criterion::kMinCostMaxCard, user);
  EXPECT_EQ(lex(0, 0), -4);
  EXPECT_EQ(lex(0, a.last_resort(0)), 5);
}

TEST(CriterionCostsTest, Names) {
  for (Criterion c : {Criterion::kMaxCard, Criterion::kMinCostMaxCard,
                      Criterion::kEgalitarian, Criterion::kRankMax,
                      Criterion::kFair}) {
    EXPECT_EQ(ParseCriterion(CriterionName(c)), c);
  }
  EXPECT_THROW(ParseCriterion("popular"), std::invalid_argument);
}

CostFunction RandomCosts(const PopularStructure& ps, std::mt19937_64& rng) {
  CostFunction w;
  for (int a = 0; a < ps.num_applicants(); ++a) {
    for (int p : ps.g2.neighbors(a)) {
      w.Set({a, p}, static_cast<int>(rng() % 19) - 9);
    }
  }
  return w;
}

TEST(MinCostPropertyTest, MatchesOracleMinimum) {
  std::mt19937_64 rng(5);
  for (uint64_t seed = 1; seed <= 300; ++seed) {
    SCOPED_TRACE(seed);
    const Instance inst = SuiteInstance(seed);
    const PopularStructure ps = BuildStructure(inst);
    const std::vector<Matching> popular = BruteForcePopular(inst);
    if (popular.empty()) continue;
    const Characterization ch = Characterize(ps);
    const CostFunction w = RandomCosts(ps, rng);
    const MinCostResult r = MinCostPopular(ch, w);
    Cost best = MatchingCost(w, popular.front());
    for (const Matching& m : popular) best = std::min(best, MatchingCost(w, m));
    EXPECT_EQ(r.cost, best);
    EXPECT_NE(std::find(popular.begin(), popular.end(), r.matching),
              popular.end());
  }
}

TEST(MinCostPropertyTest, CriteriaAreLexicographicOptima) {
  std::mt19937_64 rng(8);
  for (uint64_t seed = 1; seed <= 300; ++seed) {
    SCOPED_TRACE(seed);
    const Instance inst = SuiteInstance(seed);
    const PopularStructure ps = BuildStructure(inst);
    const std::vector<Matching> popular = BruteForcePopular(inst);
    if (popular.empty()) continue;
    const Characterization ch = Characterize(ps);
    const int max_rank = MaxListRank(inst);
    auto solve = [&](Criterion c, const CostFunction& user = {}) {
      const Matching m = MinCostPopular(ch, CriterionCosts(ps, c, user)).matching;
      EXPECT_NE(std::find(popular.begin(), popular.end(), m), popular.end());
      return m;
    };

    const Matching maxcard = solve(Criterion::kMaxCard);
    const Matching rankmax = solve(Criterion::kRankMax);
    const Matching fair = solve(Criterion::kFair);
    const Matching egal = solve(Criterion::kEgalitarian);
    const CostFunction user = RandomCosts(ps, rng);
    const Matching lex = solve(Criterion::kMinCostMaxCard, user);

    auto reversed = [&](const Matching& m) {
      std::vector<int> p = RankProfile(inst, m, max_rank);
      std::reverse(p.begin(), p.end());
      return p;
    };
    auto rank_sum = [&](const Matching& m) {
      int sum = 0;
      for (const Edge& e : m.Pairs()) sum += inst.Rank(e.applicant, e.post);
      return sum;
    };
    for (const Matching& m : popular) {
      EXPECT_LE(LastResortsUsed(inst, maxcard), LastResortsUsed(inst, m));
      // Lexicographically more rank-1 posts, then rank-2, ...
      std::vector<int> mine = RankProfile(inst, rankmax, max_rank);
      std::vector<int> theirs = RankProfile(inst, m, max_rank);
      EXPECT_FALSE(std::lexicographical_compare(mine.begin() + 1, mine.end(),
                                                theirs.begin() + 1, theirs.end()));
      EXPECT_LE(reversed(fair), reversed(m));
      EXPECT_LE(rank_sum(egal), rank_sum(m));
      const auto key = [&](const Matching& x) {
        return std::make_pair(LastResortsUsed(inst, x), MatchingCost(user, x));
      };
      EXPECT_LE(key(lex), key(m));
    }
  }
}

}  // namespace
}  // namespace popmatch
