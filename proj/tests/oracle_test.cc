// Copyright 2026 The Authors.
//
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

#include "ofl/oracle.h"

#include <gtest/gtest.h>

#include <cmath>

#include "ofl/adversary.h"
#include "test_support.h"

namespace ofl {
namespace {

using testing::Q;
using testing::Qs;

const Rational kEps(1, 100);

TEST(OracleTest, EnumeratesOrderedPairs) {
  const Instance inst = Instance::uniform(Qs({0}), Preference::both(), Qs({0, 1, 2}));
  const auto all = enumerate_solutions(inst);
  ASSERT_EQ(all.size(), 6u);
  EXPECT_EQ(all.front(), Solution(0, 1));
  EXPECT_EQ(all.back(), Solution(2, 1));
}

TEST(OracleTest, RandomizedPairOptimum) {
  const Instance j = Instance::uniform({Q(0), Q(1) + kEps}, Preference::both(),
                                       Qs({0, 0, 2, 2}));
  const OptimalSolution opt = optimal_solution(j);
  EXPECT_EQ(j.candidate(opt.solution.slot_f1()), Q(2));
  EXPECT_EQ(j.candidate(opt.solution.slot_f2()), Q(2));
  EXPECT_EQ(opt.welfare, Q(299, 50));
}

TEST(OracleTest, ChainEndpointOptimum) {
  std::vector<Rational> xs(732, Q(1) - kEps);
  xs.insert(xs.end(), 268, Q(2));
  const Instance q = Instance::uniform(xs, Preference::both(), Qs({0, 0, 2, 2}));
  const OptimalSolution opt = optimal_solution(q);
  EXPECT_EQ(q.candidate(opt.solution.slot_f1()), Q(0));
  EXPECT_EQ(q.candidate(opt.solution.slot_f2()), Q(0));
  // 2 (1 - eps) 732 + 4 * 268
  EXPECT_EQ(opt.welfare, Q(2) * (Q(1) - kEps) * Q(732) + Q(4 * 268));
  EXPECT_EQ(opt.welfare, Q(63034, 25));
}

TEST(OracleTest, LexicographicTieBreak) {
  const Instance inst = Instance::uniform(Qs({0}), Preference::both(), Qs({0, 2}));
  const OptimalSolution opt = optimal_solution(inst);
  EXPECT_EQ(opt.solution, Solution(0, 1));
  EXPECT_EQ(opt.welfare, Q(2));
}

TEST(OracleTest, MatchesBruteForceOnRandomInstances) {
  testing::RandomInstances gen(21);
  for (int k = 0; k < 3000; ++k) {
    const Instance inst = gen.next(6, 6, 12, testing::Prefs::kAny);
    const OptimalSolution opt = optimal_solution(inst);
    EXPECT_EQ(opt.welfare, testing::reference_optimum(inst));
    EXPECT_EQ(social_welfare(inst, opt.solution), opt.welfare);
    for (const Solution& s : enumerate_solutions(inst)) {
      if (social_welfare(inst, s) == opt.welfare) {
        EXPECT_LE(opt.solution, s);
        break;
      }
    }
  }
}

TEST(RatioTest, LargeChainEndpoint) {
  std::vector<Rational> xs(732, Q(1) - Q(1, 1000000));
  xs.insert(xs.end(), 268, Q(2));
  const Instance q = Instance::uniform(xs, Preference::both(), Qs({0, 0, 2, 2}));
  const RatioReport r = approximation_ratio(q, MechanismSpec::alpha_statistic(Q(268, 1000)));
  EXPECT_FALSE(r.infinite);
  EXPECT_NEAR(r.ratio_approx(), 1.7322, 5e-5);
}

TEST(RatioTest, TightInstance) {
  const Instance inst = uniform_statistic_tight_instance(10000, Q(1, 1000000));
  const RatioReport r = approximation_ratio(inst, MechanismSpec::uniform_statistic());
  EXPECT_NEAR(r.ratio_approx(), 1.522, 1e-3);
}

TEST(RatioTest, OptimalMechanismHasRatioOne) {
  const Instance inst = Instance::uniform(Qs({1, 2, 8, 9}), Preference::both(), Qs({0, 10}));
  EXPECT_EQ(approximation_ratio(inst, argmax_rule()).ratio, Q(1));
}

TEST(RatioTest, ZeroWelfare) {
  // Every agent sits on both facilities: 0 / 0 counts as ratio 1.
  const Instance zero = Instance::uniform(Qs({3}), Preference::both(), Qs({3, 3}));
  const RatioReport r = approximation_ratio(zero, MechanismSpec::equiprobable_lr());
  EXPECT_FALSE(r.infinite);
  EXPECT_EQ(r.ratio, Q(1));
  const Mechanism worst = Mechanism::external_deterministic(
      "nearest", [](const Instance&) { return Solution(0, 1); });
  const Instance inst = Instance::create(Qs({0}), {Preference::only_f1()}, Qs({0, 2}));
  const RatioReport inf = approximation_ratio(inst, worst);
  EXPECT_TRUE(inf.infinite);
  EXPECT_TRUE(ratio_less(approximation_ratio(inst, MechanismSpec::equiprobable_lr()), inf));
}

TEST(CeilingTest, Values) {
  EXPECT_EQ(alpha_statistic_ceiling(Q(0)), Q(2));
  EXPECT_EQ(alpha_statistic_ceiling(Q(1, 4)), Q(7, 4));
  EXPECT_EQ(alpha_statistic_ceiling(Q(1, 2)), Q(3));
  EXPECT_NEAR(uniform_statistic_asymptotic_ceiling(), (5 + 4 * std::sqrt(2.0)) / 7, 1e-15);
  // n = 2 mixes only alpha = 1/2.
  EXPECT_EQ(uniform_statistic_ceiling(2), Q(3));
  EXPECT_EQ(ratio_ceiling(MechanismSpec::lr_stronger_majority(), 5), 3.0);
  EXPECT_EQ(ratio_ceiling(MechanismSpec::equiprobable_lr(), 5), 2.0);
}

TEST(CeilingTest, SmallUniformInstanceExceedsAsymptoticConstant) {
  // With two agents uniform-statistic is alpha-statistic(1/2), so the
  // large-n constant does not bound it.
  const Instance inst = Instance::uniform({Q(1) - kEps, Q(2)}, Preference::both(),
                                          Qs({0, 0, 2, 2}));
  const RatioReport r = approximation_ratio(inst, MechanismSpec::uniform_statistic());
  EXPECT_GT(r.ratio_approx(), uniform_statistic_asymptotic_ceiling());
  EXPECT_LE(r.ratio, uniform_statistic_ceiling(2));
}

}  // namespace
}  // namespace ofl
