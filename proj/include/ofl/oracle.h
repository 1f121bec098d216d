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

#ifndef OFL_ORACLE_H_
#define OFL_ORACLE_H_

#include <optional>
#include <vector>

#include "ofl/core.h"
#include "ofl/mechanisms.h"

namespace ofl {

// All ordered pairs of distinct slots, lexicographic by (slot_f1, slot_f2).
std::vector<Solution> enumerate_solutions(const Instance& instance);

struct OptimalSolution {
  Solution solution;
  Rational welfare;
};

// Exhaustive argmax of social welfare; ties go to the lexicographically
// smallest (slot_f1, slot_f2).
OptimalSolution optimal_solution(const Instance& instance);

struct RatioReport {
  Solution optimal_solution;
  Rational optimal_welfare;
  Rational mechanism_welfare;
  // optimal / mechanism welfare. Meaningless when `infinite` is set, which
  // happens when the mechanism gets zero welfare and the optimum does not.
  Rational ratio;
  bool infinite = false;

  double ratio_approx() const;
};

// Orders reports by ratio, treating infinity as larger than every finite
// value.
bool ratio_less(const RatioReport& a, const RatioReport& b);

RatioReport approximation_ratio(const Instance& instance,
                                const Mechanism& mechanism);

// The welfare-maximising rule exposed as a (non-strategyproof) mechanism.
Mechanism argmax_rule();

// Worst-case ratio bounds proven for the built-in mechanisms.
//   alpha-statistic:  max{2 - alpha, (1 + alpha) / (1 - alpha)}
//   lr-stronger-majority: 3
//   equiprobable-lr: 2
// uniform-statistic has only the asymptotic bound below; see
// `uniform_statistic_ceiling`.
Rational alpha_statistic_ceiling(const Rational& alpha);

// (5 + 4 sqrt 2) / 7, the large-n bound for uniform-statistic.
double uniform_statistic_asymptotic_ceiling();

// Bound valid for every n: the lottery mixes alpha-statistic(k/n), and a
// mixture's ratio never exceeds its worst component's.
Rational uniform_statistic_ceiling(std::size_t num_agents);

// Ceiling for `spec` on instances with `num_agents` agents, as a double.
double ratio_ceiling(const MechanismSpec& spec, std::size_t num_agents);

}  // namespace ofl

#endif  // OFL_ORACLE_H_
