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

#include <algorithm>
#include <utility>

#include "ofl/errors.h"

namespace ofl {
namespace {

constexpr std::string_view kAlphaName = "alpha-statistic";
constexpr std::string_view kUniformName = "uniform-statistic";
constexpr std::string_view kLrName = "lr-stronger-majority";
constexpr std::string_view kEquiprobableName = "equiprobable-lr";

void require_non_optional(const Instance& instance) {
  if (!instance.non_optional()) {
    throw NotApplicable(
        "non-optional setting required: every agent must be affected by "
        "both facilities");
  }
}

void require_alpha(const Rational& alpha) {
  if (alpha < Rational(0) || alpha > Rational(1, 2)) {
    throw ContractViolation("alpha " + alpha.str() + " outside [0, 1/2]");
  }
}

}  // namespace

MechanismSpec MechanismSpec::alpha_statistic(Rational alpha) {
  require_alpha(alpha);
  return MechanismSpec(MechanismKind::kAlphaStatistic, std::move(alpha));
}

MechanismSpec MechanismSpec::uniform_statistic() {
  return MechanismSpec(MechanismKind::kUniformStatistic, Rational());
}

MechanismSpec MechanismSpec::lr_stronger_majority() {
  return MechanismSpec(MechanismKind::kLrStrongerMajority, Rational());
}

MechanismSpec MechanismSpec::equiprobable_lr() {
  return MechanismSpec(MechanismKind::kEquiprobableLr, Rational());
}

MechanismSpec MechanismSpec::parse(std::string_view name,
                                   std::optional<std::string_view> alpha) {
  if (name == kAlphaName) {
    if (!alpha) throw ContractViolation("alpha-statistic requires --alpha");
    return alpha_statistic(Rational::parse(*alpha));
  }
  if (alpha) {
    throw ContractViolation("--alpha only applies to alpha-statistic");
  }
  if (name == kUniformName) return uniform_statistic();
  if (name == kLrName) return lr_stronger_majority();
  if (name == kEquiprobableName) return equiprobable_lr();
  throw ContractViolation("unknown mechanism '" + std::string(name) + "'");
}

std::string_view MechanismSpec::name() const {
  switch (kind_) {
    case MechanismKind::kAlphaStatistic: return kAlphaName;
    case MechanismKind::kUniformStatistic: return kUniformName;
    case MechanismKind::kLrStrongerMajority: return kLrName;
    case MechanismKind::kEquiprobableLr: return kEquiprobableName;
  }
  return {};
}

std::string MechanismSpec::label() const {
  std::string s(name());
  if (kind_ == MechanismKind::kAlphaStatistic) s += "(" + alpha_.str() + ")";
  return s;
}

bool MechanismSpec::deterministic() const {
  return kind_ == MechanismKind::kAlphaStatistic ||
         kind_ == MechanismKind::kLrStrongerMajority;
}

bool MechanismSpec::requires_non_optional() const {
  return kind_ == MechanismKind::kAlphaStatistic ||
         kind_ == MechanismKind::kUniformStatistic;
}

Solution alpha_statistic(const Instance& instance, const Rational& alpha) {
  require_non_optional(instance);
  require_alpha(alpha);
  const auto order = agents_by_position(instance);
  return alpha_statistic(instance, alpha, order);
}

Solution alpha_statistic(const Instance& instance, const Rational& alpha,
                         std::span<const std::size_t> sorted_agents) {
  require_non_optional(instance);
  require_alpha(alpha);
  const long n = static_cast<long>(instance.num_agents());
  if (static_cast<long>(sorted_agents.size()) != n) {
    throw ContractViolation("agent order does not match instance size");
  }
  const long low = std::max(1L, (alpha * Rational(n)).ceil());
  const long high = std::min(n, ((Rational(1) - alpha) * Rational(n)).ceil());
  const std::size_t i = sorted_agents[low - 1];
  const std::size_t j = sorted_agents[high - 1];

  const Landmarks lm = landmarks(instance);
  const Rational& left = instance.candidate(lm.left);
  const Rational& right = instance.candidate(lm.right);

  const auto pref_i = preference_order(instance.position(i), instance);
  const auto pref_j = preference_order(instance.position(j), instance);
  const Rational& t_i = instance.candidate(pref_i[0]);
  const Rational& t_j = instance.candidate(pref_j[0]);

  // t(.) is matched against the extremes by coordinate, so duplicated
  // extreme slots behave alike. The extreme slot used is t(.) itself, which
  // is never the same slot as s(.).
  if (t_i == left && t_j == left) return Solution(pref_i[0], pref_i[1]);
  if (t_i == right && t_j == right) return Solution(pref_j[0], pref_j[1]);
  return Solution(lm.left, lm.right);
}

RandomizedSolution uniform_statistic(const Instance& instance) {
  require_non_optional(instance);
  const std::size_t n = instance.num_agents();
  const std::size_t m = std::max<std::size_t>(1, n / 2);
  const auto order = agents_by_position(instance);
  const Rational weight(1L, static_cast<long>(m));
  std::vector<WeightedSolution> entries;
  entries.reserve(m);
  for (std::size_t k = 1; k <= m; ++k) {
    // k/n exceeds 1/2 only for n = 1, where every alpha picks the same agent.
    const Rational alpha =
        std::min(Rational(static_cast<long>(k), static_cast<long>(n)),
                 Rational(1, 2));
    entries.push_back({alpha_statistic(instance, alpha, order), weight});
  }
  return RandomizedSolution::from_weights(instance, std::move(entries));
}

Solution lr_stronger_majority(const Instance& instance) {
  const Landmarks lm = landmarks(instance);
  const Rational& left = instance.candidate(lm.left);
  const Rational& right = instance.candidate(lm.right);

  struct Vote {
    long affected = 0;
    long prefer_left = 0;
  };
  Vote votes[2];
  for (std::size_t a = 0; a < instance.num_agents(); ++a) {
    const Rational& x = instance.position(a);
    const bool prefers_left = abs(x - left) >= abs(x - right);
    const Preference& p = instance.preference(a);
    const bool affects[2] = {p.affects_f1, p.affects_f2};
    for (int f = 0; f < 2; ++f) {
      if (!affects[f]) continue;
      ++votes[f].affected;
      if (prefers_left) ++votes[f].prefer_left;
    }
  }

  bool majority_left[2];
  long margin[2];
  for (int f = 0; f < 2; ++f) {
    const long left_side = votes[f].prefer_left;
    const long right_side = votes[f].affected - left_side;
    majority_left[f] = left_side >= right_side;
    const long winners = majority_left[f] ? left_side : right_side;
    margin[f] = 2 * winners - votes[f].affected;
  }

  if (margin[0] >= margin[1]) {
    return majority_left[0] ? Solution(lm.left, lm.right)
                            : Solution(lm.right, lm.left);
  }
  return majority_left[1] ? Solution(lm.right, lm.left)
                          : Solution(lm.left, lm.right);
}

RandomizedSolution equiprobable_lr(const Instance& instance) {
  const Landmarks lm = landmarks(instance);
  return RandomizedSolution::from_weights(
      instance, {{Solution(lm.left, lm.right), Rational(1, 2)},
                 {Solution(lm.right, lm.left), Rational(1, 2)}});
}

RandomizedSolution run_mechanism(const MechanismSpec& spec,
                                 const Instance& instance) {
  switch (spec.kind()) {
    case MechanismKind::kAlphaStatistic:
      return RandomizedSolution::point(alpha_statistic(instance, spec.alpha()));
    case MechanismKind::kUniformStatistic:
      return uniform_statistic(instance);
    case MechanismKind::kLrStrongerMajority:
      return RandomizedSolution::point(lr_stronger_majority(instance));
    case MechanismKind::kEquiprobableLr:
      return equiprobable_lr(instance);
  }
  throw ContractViolation("unhandled mechanism kind");
}

Mechanism::Mechanism(MechanismSpec spec)
    : name_(spec.label()),
      rule_([spec](const Instance& instance) {
        return run_mechanism(spec, instance);
      }),
      spec_(spec) {}

Mechanism Mechanism::external(std::string name, Rule rule) {
  return Mechanism(std::move(name), std::move(rule), std::nullopt);
}

Mechanism Mechanism::external_deterministic(std::string name,
                                            DeterministicRule rule) {
  return external(std::move(name), [rule = std::move(rule)](
                                       const Instance& instance) {
    return RandomizedSolution::point(rule(instance));
  });
}

}  // namespace ofl
