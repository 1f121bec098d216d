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

#include "ofl/mechanisms.h"

#include <gtest/gtest.h>

#include "ofl/errors.h"
#include "ofl/oracle.h"
#include "test_support.h"

namespace ofl {
namespace {

using testing::Q;
using testing::Qs;

const Rational kEps(1, 100);

std::pair<Rational, Rational> coords(const Instance& inst, const Solution& s) {
  return {inst.candidate(s.slot_f1()), inst.candidate(s.slot_f2())};
}

Instance groups(long near, long far, const Rational& eps) {
  std::vector<Rational> xs(near, Q(1) - eps);
  xs.insert(xs.end(), far, Q(2));
  return Instance::uniform(xs, Preference::both(), Qs({0, 0, 2, 2}));
}

TEST(AlphaStatisticTest, BothOrderStatisticsPreferRight) {
  const Instance q = groups(732, 268, kEps);
  const Solution s = alpha_statistic(q, Q(268, 1000));
  EXPECT_EQ(coords(q, s), std::make_pair(Q(2), Q(2)));
}

TEST(AlphaStatisticTest, DisagreementGivesExtremes) {
  const Instance inst = Instance::uniform(Qs({1, 2, 8, 9}), Preference::both(), Qs({0, 10}));
  EXPECT_EQ(coords(inst, alpha_statistic(inst, Q(1, 4))), std::make_pair(Q(0), Q(10)));
}

TEST(AlphaStatisticTest, SingleOrderStatistic) {
  const Instance inst = Instance::uniform(Qs({4, 6}), Preference::both(), Qs({0, 10}));
  EXPECT_EQ(coords(inst, alpha_statistic(inst, Q(1, 2))), std::make_pair(Q(10), Q(0)));
}

TEST(AlphaStatisticTest, Contracts) {
  const Instance inst = Instance::create(Qs({1, 2}), {Preference::both(), Preference::only_f1()},
                                         Qs({0, 2}));
  EXPECT_THROW(alpha_statistic(inst, Q(1, 4)), NotApplicable);
  EXPECT_THROW(MechanismSpec::alpha_statistic(Q(3, 5)), ContractViolation);
  EXPECT_THROW(MechanismSpec::alpha_statistic(Q(-1, 5)), ContractViolation);
  EXPECT_THROW(uniform_statistic(inst), NotApplicable);
}

TEST(AlphaStatisticTest, MatchesLiteralReadingOnRandomInstances) {
  testing::RandomInstances gen(11);
  for (int k = 0; k < 2000; ++k) {
    const Instance inst = gen.next(7, 5, 6, testing::Prefs::kBoth);
    for (const Rational& alpha : {Q(0), Q(1, 8), Q(1, 4), Q(1, 3), Q(1, 2)}) {
      const Solution s = alpha_statistic(inst, alpha);
      EXPECT_EQ(coords(inst, s), testing::reference_alpha_statistic(inst, alpha));
    }
  }
}

TEST(UniformStatisticTest, TightInstanceLottery) {
  const Instance inst = groups(586, 414, kEps);
  const RandomizedSolution rs = uniform_statistic(inst);
  ASSERT_EQ(rs.support().size(), 2u);
  std::map<std::pair<Rational, Rational>, Rational> by_coords;
  for (const auto& e : rs.support()) by_coords[coords(inst, e.solution)] = e.probability;
  EXPECT_EQ((by_coords[{Q(0), Q(2)}]), Q(413, 500));
  EXPECT_EQ((by_coords[{Q(2), Q(2)}]), Q(87, 500));
}

TEST(UniformStatisticTest, TightInstanceLotteryByCounting) {
  // Independent count: alpha-statistic(k/n) yields (2,2) exactly when the
  // ceil((1-k/n)n)-th agent sits at 1-eps, i.e. when n - k <= near.
  for (long n : {10L, 101L, 1000L}) {
    const long near = static_cast<long>((2 - 1.41421356237) * n + 0.5);
    const Instance inst = groups(near, n - near, kEps);
    long twotwo = 0;
    for (long k = 1; k <= n / 2; ++k) twotwo += (n - k <= near) ? 1 : 0;
    Rational p22;
    const RandomizedSolution rs = uniform_statistic(inst);
    for (const auto& e : rs.support()) {
      if (coords(inst, e.solution) == std::make_pair(Q(2), Q(2))) p22 = e.probability;
    }
    EXPECT_EQ(p22, Q(twotwo, n / 2)) << "n=" << n;
  }
}

TEST(UniformStatisticTest, SmallCases) {
  const Instance single = Instance::uniform(Qs({0}), Preference::both(), Qs({0, 2}));
  const RandomizedSolution rs = uniform_statistic(single);
  ASSERT_TRUE(rs.is_point());
  EXPECT_EQ(rs.support()[0].solution, alpha_statistic(single, Q(1, 2)));

  const Instance two = Instance::uniform(Qs({4, 6}), Preference::both(), Qs({0, 10}));
  const RandomizedSolution rs2 = uniform_statistic(two);
  ASSERT_TRUE(rs2.is_point());
  EXPECT_EQ(coords(two, rs2.support()[0].solution), std::make_pair(Q(10), Q(0)));
}

TEST(LrStrongerMajorityTest, SingleFacilityPair) {
  const Instance j = Instance::create({Q(0), Q(1) + kEps},
                                      {Preference::only_f1(), Preference::only_f1()},
                                      Qs({0, 2}));
  const Solution s = lr_stronger_majority(j);
  EXPECT_EQ(coords(j, s), std::make_pair(Q(0), Q(2)));
  EXPECT_EQ(social_welfare(j, s), Q(1) + kEps);
  EXPECT_EQ(optimal_solution(j).welfare, Q(3) - kEps);
}

TEST(LrStrongerMajorityTest, LargerMarginWins) {
  const Instance inst = Instance::create(
      Qs({1, 2, 9}), {Preference::only_f1(), Preference::only_f1(), Preference::only_f2()},
      Qs({0, 10}));
  const Solution s = lr_stronger_majority(inst);
  EXPECT_EQ(coords(inst, s), std::make_pair(Q(10), Q(0)));
  EXPECT_EQ(social_welfare(inst, s), Q(26));
  EXPECT_EQ(optimal_solution(inst).welfare, Q(26));
}

TEST(LrStrongerMajorityTest, EmptySecondGroup) {
  const Instance inst = Instance::create(Qs({0}), {Preference::only_f1()}, Qs({0, 2}));
  const Solution s = lr_stronger_majority(inst);
  EXPECT_EQ(coords(inst, s), std::make_pair(Q(2), Q(0)));
  EXPECT_EQ(social_welfare(inst, s), Q(2));
}

TEST(EquiprobableLrTest, Examples) {
  const Instance both = Instance::uniform(Qs({0}), Preference::both(), Qs({0, 2}));
  const RandomizedSolution rs = equiprobable_lr(both);
  ASSERT_EQ(rs.support().size(), 2u);
  EXPECT_EQ(rs.support()[0].probability, Q(1, 2));
  EXPECT_EQ(expected_social_welfare(both, rs), Q(2));

  const Instance one = Instance::create(Qs({0}), {Preference::only_f1()}, Qs({0, 2}));
  EXPECT_EQ(expected_social_welfare(one, equiprobable_lr(one)), Q(1));
  EXPECT_EQ(approximation_ratio(one, MechanismSpec::equiprobable_lr()).ratio, Q(2));
}

TEST(MechanismSpecTest, ParseAndNames) {
  EXPECT_EQ(MechanismSpec::parse("alpha-statistic", "1/4").label(), "alpha-statistic(1/4)");
  EXPECT_EQ(MechanismSpec::parse("uniform-statistic", std::nullopt).name(), "uniform-statistic");
  EXPECT_EQ(MechanismSpec::parse("lr-stronger-majority", std::nullopt).kind(),
            MechanismKind::kLrStrongerMajority);
  EXPECT_EQ(MechanismSpec::parse("equiprobable-lr", std::nullopt).kind(),
            MechanismKind::kEquiprobableLr);
  EXPECT_THROW(MechanismSpec::parse("alpha-statistic", std::nullopt), ContractViolation);
  EXPECT_THROW(MechanismSpec::parse("lr-stronger-majority", "1/4"), ContractViolation);
  EXPECT_THROW(MechanismSpec::parse("median", std::nullopt), ContractViolation);
  EXPECT_THROW(MechanismSpec::parse("alpha-statistic", "x"), ParseError);
}

TEST(MechanismTest, ExternalRules) {
  const Mechanism m = Mechanism::external_deterministic(
      "first-two", [](const Instance&) { return Solution(0, 1); });
  const Instance inst = Instance::uniform(Qs({0}), Preference::both(), Qs({0, 2}));
  EXPECT_FALSE(m.builtin());
  EXPECT_EQ(m.name(), "first-two");
  EXPECT_TRUE(m(inst).is_point());
  const Mechanism b = MechanismSpec::equiprobable_lr();
  EXPECT_TRUE(b.builtin());
}

}  // namespace
}  // namespace ofl
