// Copyright 2026 The propaudit Authors
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

#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "propaudit/errors.h"
#include "propaudit/generators.h"
#include "propaudit/oracle.h"
#include "propaudit/verify.h"
#include "testing/naive_oracles.h"
#include "testing/random_instances.h"

namespace propaudit {
namespace {

Selection Everything(const Instance& inst) {
  std::vector<std::size_t> all(inst.num_candidates());
  for (std::size_t c = 0; c < all.size(); ++c) all[c] = c;
  return Selection::Create(all, all.size(), all.size());
}

TEST(DefaultCoalitionTest, InstanceTwo) {
  const Fixture f = IncomparabilityFixture(2);
  const DefaultCoalition dc = ComputeDefaultCoalition(f.instance, 0, 2);
  EXPECT_EQ(dc.radius, 1.0);
  EXPECT_EQ(dc.members, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(dc.level, 2);
  EXPECT_EQ(dc.center, 0u);
}

TEST(DefaultCoalitionTest, EquidistantTopLevel) {
  const Instance inst = Instance::Euclidean(1, {-2, 2, -2, 2}, {0, 5}, 2);
  const DefaultCoalition dc = ComputeDefaultCoalition(inst, 0, 2);
  EXPECT_EQ(dc.radius, 2.0);
  EXPECT_EQ(dc.members.size(), 4u);
}

TEST(DefaultCoalitionTest, Errors) {
  const Fixture f = IncomparabilityFixture(2);
  EXPECT_THROW(ComputeDefaultCoalition(f.instance, 0, 0), InfeasibleLevel);
  EXPECT_THROW(ComputeDefaultCoalition(f.instance, 0, 4), InfeasibleLevel);
  EXPECT_THROW(ComputeDefaultCoalition(f.instance, 9, 1), InputError);
}

TEST(DefaultCoalitionTest, MatchesSortedPrefix) {
  CounterRng rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    const Instance inst = testing::RandomDeskInstance(rng, 9, 5, 4);
    const std::size_t c = rng.NextBelow(inst.num_candidates());
    const int level = 1 + static_cast<int>(rng.NextBelow(inst.k()));
    std::vector<double> d;
    for (std::size_t i = 0; i < inst.num_agents(); ++i) {
      d.push_back(inst.Distance(Agent(i), Candidate(c)));
    }
    std::vector<double> sorted = d;
    std::sort(sorted.begin(), sorted.end());
    // Smallest prefix length p with p * k >= level * n, extended over ties.
    std::size_t p = 1;
    while (p * inst.k() < static_cast<std::size_t>(level) * inst.num_agents()) {
      ++p;
    }
    const double radius = sorted[p - 1];
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] <= radius) members.push_back(i);
    }
    const DefaultCoalition dc = ComputeDefaultCoalition(inst, c, level);
    EXPECT_EQ(dc.radius, radius);
    EXPECT_EQ(dc.members, members);
    EXPECT_GE(dc.members.size() * inst.k(),
              static_cast<std::size_t>(level) * inst.num_agents());
  }
}

TEST(DcVerifierTest, IncomparabilityFixtures) {
  const Fixture one = IncomparabilityFixture(1);
  EXPECT_TRUE(VerifyDcMpjrPlus(one.instance, one.selection).satisfied);

  const Fixture two = IncomparabilityFixture(2);
  const Verdict v = VerifyDcMpjrPlus(two.instance, two.selection);
  ASSERT_FALSE(v.satisfied);
  EXPECT_EQ(v.axiom, "dc-mpjr+");
  EXPECT_EQ(v.witness->center, 0u);
  EXPECT_EQ(v.witness->level, 2);
  EXPECT_EQ(v.witness->radius, 1.0);
  EXPECT_EQ(v.witness->coalition, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(v.witness->covered, std::vector<std::size_t>{1});
}

TEST(DcVerifierTest, FullSelectionSatisfies) {
  CounterRng rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const Instance base = testing::RandomDeskInstance(rng, 8, 6, 6);
    const Instance inst = base.WithK(base.num_candidates());
    EXPECT_TRUE(VerifyDcMpjrPlus(inst, Everything(inst)).satisfied);
    EXPECT_TRUE(VerifyMpjrPlusSmallK(inst, Everything(inst)).satisfied);
  }
}

TEST(DcVerifierTest, RejectsBadArguments) {
  const Fixture f = IncomparabilityFixture(2);
  VerifyOptions options;
  options.gamma = 0.5;
  EXPECT_THROW(VerifyDcMpjrPlus(f.instance, f.selection, options), InputError);
  EXPECT_THROW(VerifyMpjrPlusSmallK(f.instance, f.selection, options),
               InputError);
  const Selection wrong = Selection::Create({1, 2}, 4, 2);
  EXPECT_THROW(VerifyDcMpjrPlus(f.instance, wrong), InputError);
}

TEST(DcVerifierTest, AllWitnessesListsEveryViolatingLevel) {
  CounterRng rng(57);
  for (int trial = 0; trial < 300; ++trial) {
    const Instance inst = testing::RandomDeskInstance(rng, 9, 6, 4);
    const Selection x = testing::RandomSelection(rng, inst);
    VerifyOptions options;
    options.all_witnesses = true;
    const Verdict all = VerifyDcMpjrPlus(inst, x, options);
    const Verdict first = VerifyDcMpjrPlus(inst, x);
    ASSERT_EQ(all.satisfied, first.satisfied);
    if (first.satisfied) {
      EXPECT_TRUE(all.all_witnesses.empty());
      continue;
    }
    EXPECT_EQ(all.witness->center, first.witness->center);
    EXPECT_EQ(all.witness->radius, first.witness->radius);
    // Every listed pair is a genuine violation of its default coalition.
    std::size_t expected = 0;
    for (std::size_t c = 0; c < inst.num_candidates(); ++c) {
      if (x.Contains(c)) continue;
      for (int level = 1; level <= static_cast<int>(inst.k()); ++level) {
        const DefaultCoalition dc = ComputeDefaultCoalition(inst, c, level);
        const auto covered = GroupApprovalSet(inst, dc.members, dc.radius);
        std::size_t cov = 0;
        for (std::size_t y : covered) cov += x.Contains(y);
        if (cov < static_cast<std::size_t>(level)) ++expected;
      }
    }
    EXPECT_EQ(all.all_witnesses.size(), expected);
    for (const Witness& w : all.all_witnesses) {
      const DefaultCoalition dc = ComputeDefaultCoalition(inst, *w.center, w.level);
      EXPECT_EQ(dc.radius, w.radius);
      EXPECT_EQ(dc.members, w.coalition);
    }
  }
}

TEST(DcVerifierTest, TieEpsilonMergesNearRadii) {
  // Agents at distance 1 and 1 + 2^-20 from candidate 0. Swept separately,
  // the first agent alone deserves a center it cannot reach; swept as one
  // radius, both are covered.
  const double delta = 0x1.0p-20;
  const Instance inst = Instance::Euclidean(
      1, {1.0, -(1.0 + delta)}, {0.0, 2.0 + delta, -1.5 - delta}, 2);
  const Selection x = Selection::For(inst, {1, 2});
  const Verdict exact = VerifyDcMpjrPlus(inst, x);
  ASSERT_FALSE(exact.satisfied);
  EXPECT_EQ(exact.witness->radius, 1.0);
  EXPECT_EQ(exact.witness->level, 1);
  VerifyOptions loose;
  loose.tie_epsilon = 1e-3;
  EXPECT_TRUE(VerifyDcMpjrPlus(inst, x, loose).satisfied);
}

TEST(FixedEllDcTest, InstanceTwo) {
  const Fixture f = IncomparabilityFixture(2);
  const Verdict two = VerifyFixedEllDc(f.instance, f.selection, 2);
  ASSERT_FALSE(two.satisfied);
  EXPECT_EQ(two.witness->center, 0u);
  EXPECT_EQ(two.witness->level, 2);
  EXPECT_TRUE(VerifyFixedEllDc(f.instance, f.selection, 1).satisfied);
  EXPECT_THROW(VerifyFixedEllDc(f.instance, f.selection, 4), InfeasibleLevel);
  const Instance all = f.instance.WithK(4);
  EXPECT_TRUE(VerifyFixedEllDc(all, Everything(all), 4).satisfied);
}

TEST(FixedEllDcTest, AgreesWithFullVerifier) {
  CounterRng rng(59);
  for (int trial = 0; trial < 400; ++trial) {
    const Instance inst = testing::RandomDeskInstance(rng, 9, 6, 4);
    const Selection x = testing::RandomSelection(rng, inst);
    bool any = false;
    for (int level = 1; level <= static_cast<int>(inst.k()); ++level) {
      any = any || !VerifyFixedEllDc(inst, x, level).satisfied;
    }
    EXPECT_EQ(any, !VerifyDcMpjrPlus(inst, x).satisfied);
  }
}

TEST(SmallKVerifierTest, IncomparabilityFixtures) {
  const Fixture one = IncomparabilityFixture(1);
  EXPECT_FALSE(VerifyMpjrPlusSmallK(one.instance, one.selection).satisfied);
  const Fixture two = IncomparabilityFixture(2);
  const Verdict v = VerifyMpjrPlusSmallK(two.instance, two.selection);
  ASSERT_FALSE(v.satisfied);
  EXPECT_EQ(v.axiom, "mpjr+");
  ASSERT_TRUE(v.witness->center.has_value());
  EXPECT_FALSE(two.selection.Contains(*v.witness->center));
  // The witness coalition deserves more than it gets.
  EXPECT_GE(v.witness->coalition.size() * 3,
            static_cast<std::size_t>(v.witness->level) * 6);
  EXPECT_LT(v.witness->covered.size(),
            static_cast<std::size_t>(v.witness->level));
}

TEST(SmallKVerifierTest, CapThrows) {
  const Instance inst = Instance::Euclidean(1, {0}, std::vector<double>(30, 0.0), 25);
  std::vector<std::size_t> ids(25);
  for (std::size_t c = 0; c < ids.size(); ++c) ids[c] = c;
  const Selection x = Selection::For(inst, ids);
  EXPECT_THROW(VerifyMpjrPlusSmallK(inst, x), SizeError);
  VerifyOptions options;
  options.max_k = 26;
  EXPECT_NO_THROW(VerifyMpjrPlusSmallK(inst, x, options));
}

TEST(SmallKVerifierTest, WitnessIsAGenuineViolation) {
  CounterRng rng(61);
  for (int trial = 0; trial < 400; ++trial) {
    const Instance inst = testing::RandomDeskInstance(rng, 8, 6, 3);
    const Selection x = testing::RandomSelection(rng, inst);
    const double gamma = 1.0 + 0.5 * static_cast<double>(rng.NextBelow(3));
    VerifyOptions options;
    options.gamma = gamma;
    const Verdict v = VerifyMpjrPlusSmallK(inst, x, options);
    if (v.satisfied) continue;
    const Witness& w = *v.witness;
    const std::size_t c = *w.center;
    EXPECT_FALSE(x.Contains(c));
    double r = 0.0;
    for (std::size_t i : w.coalition) {
      r = std::max(r, inst.Distance(Agent(i), Candidate(c)));
    }
    const auto covered = GroupApprovalSet(inst, w.coalition, gamma * r);
    std::size_t cov = 0;
    for (std::size_t y : covered) cov += x.Contains(y);
    EXPECT_GE(w.coalition.size() * inst.k(),
              static_cast<std::size_t>(w.level) * inst.num_agents());
    EXPECT_LT(cov, static_cast<std::size_t>(w.level));
  }
}

TEST(VerifierPropertyTest, MatchesDefinitions) {
  CounterRng rng(67);
  for (int trial = 0; trial < 1500; ++trial) {
    const Instance inst = testing::RandomDeskInstance(rng, 8, 6, 3);
    const Selection x = testing::RandomSelection(rng, inst);
    for (double gamma : {1.0, 1.5}) {
      VerifyOptions options;
      options.gamma = gamma;
      ASSERT_EQ(VerifyMpjrPlusSmallK(inst, x, options).satisfied,
                !testing::NaiveMpjrPlusViolated(inst, x, gamma))
          << "trial " << trial;
      ASSERT_EQ(VerifyDcMpjrPlus(inst, x, options).satisfied,
                !testing::NaiveDcViolated(inst, x, gamma))
          << "trial " << trial;
    }
  }
}

TEST(VerifierPropertyTest, ImplicationsAndGammaMonotonicity) {
  CounterRng rng(71);
  for (int trial = 0; trial < 1500; ++trial) {
    const Instance inst = testing::RandomDeskInstance(rng, 8, 6, 3);
    const Selection x = testing::RandomSelection(rng, inst);
    bool dc_before = false;
    bool plus_before = false;
    for (double gamma : {1.0, 1.5, 2.0, 3.0, 4.0}) {
      VerifyOptions options;
      options.gamma = gamma;
      const bool plus = VerifyMpjrPlusSmallK(inst, x, options).satisfied;
      const bool dc = VerifyDcMpjrPlus(inst, x, options).satisfied;
      if (plus) EXPECT_TRUE(dc);
      if (dc_before) EXPECT_TRUE(dc);
      if (plus_before) EXPECT_TRUE(plus);
      dc_before = dc;
      plus_before = plus;
      if (gamma <= 2.0 && dc) {
        VerifyOptions wider;
        wider.gamma = gamma + 2.0;
        EXPECT_TRUE(VerifyMpjrPlusSmallK(inst, x, wider).satisfied);
      }
    }
    if (VerifyMpjrPlusSmallK(inst, x).satisfied) {
      EXPECT_TRUE(testing::NaiveMpjrViolated(inst, x) == false);
    }
  }
}

}  // namespace
}  // namespace propaudit
