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

#ifndef OFL_MECHANISMS_H_
#define OFL_MECHANISMS_H_

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "ofl/core.h"

namespace ofl {

enum class MechanismKind {
  kAlphaStatistic,
  kUniformStatistic,
  kLrStrongerMajority,
  kEquiprobableLr,
};

// Registry handle for the four built-in mechanisms. Registry names:
// "alpha-statistic", "uniform-statistic", "lr-stronger-majority",
// "equiprobable-lr".
class MechanismSpec {
 public:
  // Throws ContractViolation unless 0 <= alpha <= 1/2.
  static MechanismSpec alpha_statistic(Rational alpha);
  static MechanismSpec uniform_statistic();
  static MechanismSpec lr_stronger_majority();
  static MechanismSpec equiprobable_lr();

  // `alpha` is a "p/q" string, required for (and only accepted with)
  // alpha-statistic. Throws ContractViolation on an unknown name or a
  // missing/extraneous alpha, ParseError on a malformed alpha.
  static MechanismSpec parse(std::string_view name,
                             std::optional<std::string_view> alpha);

  MechanismKind kind() const { return kind_; }
  const Rational& alpha() const { return alpha_; }
  std::string_view name() const;
  // Registry name plus the alpha parameter when present.
  std::string label() const;

  bool deterministic() const;
  // Defined only when every agent is affected by both facilities.
  bool requires_non_optional() const;

  friend bool operator==(const MechanismSpec&, const MechanismSpec&) = default;

 private:
  MechanismSpec(MechanismKind kind, Rational alpha)
      : kind_(kind), alpha_(std::move(alpha)) {}

  MechanismKind kind_;
  Rational alpha_;
};

// Order-statistic rule on the ceil(alpha n)-th and ceil((1 - alpha) n)-th
// leftmost agents (indices clamped into [1, n]). When both find the same
// extreme candidate most distant, that extreme and the second most distant
// slot of the corresponding agent are used; otherwise both extremes.
//
// Throws NotApplicable when some agent is not affected by both facilities,
// ContractViolation when alpha is outside [0, 1/2].
Solution alpha_statistic(const Instance& instance, const Rational& alpha);

// Same as above with the agent order (`agents_by_position`) precomputed.
Solution alpha_statistic(const Instance& instance, const Rational& alpha,
                         std::span<const std::size_t> sorted_agents);

// alpha-statistic with alpha = k/n for k drawn uniformly from
// 1..max(1, floor(n/2)); the full lottery is returned.
RandomizedSolution uniform_statistic(const Instance& instance);

// Facilities go to the two extreme candidates. Each facility's affected
// agents vote for the extreme they are farther from (ties vote left); the
// facility whose majority is stronger gets its majority's extreme, ties
// favouring F1.
Solution lr_stronger_majority(const Instance& instance);

// (L, R) and (R, L) with probability 1/2 each, regardless of reports.
RandomizedSolution equiprobable_lr(const Instance& instance);

RandomizedSolution run_mechanism(const MechanismSpec& spec,
                                 const Instance& instance);

// Type-erased mechanism: either a built-in spec or an arbitrary rule (for
// example the welfare-maximising rule used as a negative control).
class Mechanism {
 public:
  using Rule = std::function<RandomizedSolution(const Instance&)>;
  using DeterministicRule = std::function<Solution(const Instance&)>;

  Mechanism(MechanismSpec spec);  // NOLINT(google-explicit-constructor)

  static Mechanism external(std::string name, Rule rule);
  static Mechanism external_deterministic(std::string name,
                                          DeterministicRule rule);

  RandomizedSolution operator()(const Instance& instance) const {
    return rule_(instance);
  }

  const std::string& name() const { return name_; }
  const std::optional<MechanismSpec>& spec() const { return spec_; }
  bool builtin() const { return spec_.has_value(); }

 private:
  Mechanism(std::string name, Rule rule, std::optional<MechanismSpec> spec)
      : name_(std::move(name)), rule_(std::move(rule)), spec_(std::move(spec)) {}

  std::string name_;
  Rule rule_;
  std::optional<MechanismSpec> spec_;
};

}  // namespace ofl

#endif  // OFL_MECHANISMS_H_
