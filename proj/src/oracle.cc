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

#include <algorithm>
#include <cmath>
#include <limits>

namespace ofl {

std::vector<Solution> enumerate_solutions(const Instance& instance) {
  const std::size_t m = instance.num_candidates();
  std::vector<Solution> out;
  out.reserve(m * (m - 1));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a != b) out.emplace_back(a, b);
    }
  }
  return out;
}

OptimalSolution optimal_solution(const Instance& instance) {
  // SW(y1, y2) separates into a per-slot F1 term plus a per-slot F2 term.
  const std::size_t m = instance.num_candidates();
  std::vector<Rational> f1_term(m), f2_term(m);
  for (std::size_t s = 0; s < m; ++s) {
    const Rational& y = instance.candidate(s);
    for (std::size_t i = 0; i < instance.num_agents(); ++i) {
      const Preference& p = instance.preference(i);
      if (!p.affects_f1 && !p.affects_f2) continue;
      const Rational d = abs(instance.position(i) - y);
      if (p.affects_f1) f1_term[s] += d;
      if (p.affects_f2) f2_term[s] += d;
    }
  }
  std::optional<OptimalSolution> best;
  for (const Solution& s : enumerate_solutions(instance)) {
    Rational w = f1_term[s.slot_f1()] + f2_term[s.slot_f2()];
    if (!best || w > best->welfare) best = OptimalSolution{s, std::move(w)};
  }
  return *best;
}

double RatioReport::ratio_approx() const {
  return infinite ? std::numeric_limits<double>::infinity() : ratio.to_double();
}

bool ratio_less(const RatioReport& a, const RatioReport& b) {
  if (a.infinite) return false;
  if (b.infinite) return true;
  return a.ratio < b.ratio;
}

RatioReport approximation_ratio(const Instance& instance,
                                const Mechanism& mechanism) {
  const RandomizedSolution outcome = mechanism(instance);
  OptimalSolution opt = optimal_solution(instance);
  RatioReport report{opt.solution, std::move(opt.welfare),
                     expected_social_welfare(instance, outcome), Rational(1),
                     false};
  if (report.mechanism_welfare.sign() > 0) {
    report.ratio = report.optimal_welfare / report.mechanism_welfare;
  } else if (report.optimal_welfare.sign() > 0) {
    report.infinite = true;
  }
  return report;
}

Mechanism argmax_rule() {
  return Mechanism::external_deterministic(
      "optimal-argmax",
      [](const Instance& instance) { return optimal_solution(instance).solution; });
}

Rational alpha_statistic_ceiling(const Rational& alpha) {
  const Rational a = Rational(2) - alpha;
  const Rational b = (Rational(1) + alpha) / (Rational(1) - alpha);
  return a > b ? a : b;
}

double uniform_statistic_asymptotic_ceiling() {
  return (5.0 + 4.0 * std::sqrt(2.0)) / 7.0;
}

Rational uniform_statistic_ceiling(std::size_t num_agents) {
  const long n = static_cast<long>(num_agents);
  const long m = std::max(1L, n / 2);
  Rational worst;
  for (long k = 1; k <= m; ++k) {
    const Rational c =
        alpha_statistic_ceiling(std::min(Rational(k, n), Rational(1, 2)));
    if (c > worst) worst = c;
  }
  return worst;
}

double ratio_ceiling(const MechanismSpec& spec, std::size_t num_agents) {
  switch (spec.kind()) {
    case MechanismKind::kAlphaStatistic:
      return alpha_statistic_ceiling(spec.alpha()).to_double();
    case MechanismKind::kUniformStatistic:
      return uniform_statistic_ceiling(num_agents).to_double();
    case MechanismKind::kLrStrongerMajority:
      return 3.0;
    case MechanismKind::kEquiprobableLr:
      return 2.0;
  }
  return std::numeric_limits<double>::infinity();
}

}  // namespace ofl
