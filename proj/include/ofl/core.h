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

#ifndef OFL_CORE_H_
#define OFL_CORE_H_

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ofl/rational.h"

namespace ofl {

// Which of the two facilities an agent is affected by. Public information.
struct Preference {
  bool affects_f1 = true;
  bool affects_f2 = true;

  static Preference both() { return {true, true}; }
  static Preference only_f1() { return {true, false}; }
  static Preference only_f2() { return {false, true}; }

  bool non_optional() const { return affects_f1 && affects_f2; }
  friend bool operator==(const Preference&, const Preference&) = default;
};

using Metadata = std::map<std::string, std::string>;

// Agents on the line with public preferences, plus the multiset of
// candidate facility locations. Candidates are held sorted ascending; a
// coordinate with multiplicity k occupies k distinct slots.
//
// Immutable once built; every mutation returns a new instance.
class Instance {
 public:
  // Sorts `candidates`. Throws InvariantViolation if there are no agents,
  // fewer than two candidates, mismatched lengths, or an agent affected by
  // neither facility.
  static Instance create(std::vector<Rational> positions,
                         std::vector<Preference> preferences,
                         std::vector<Rational> candidates,
                         Metadata metadata = {});

  // Convenience for the common case where every agent has the same
  // preference.
  static Instance uniform(std::vector<Rational> positions,
                          Preference preference,
                          std::vector<Rational> candidates);

  std::size_t num_agents() const { return positions_.size(); }
  std::size_t num_candidates() const { return candidates_.size(); }

  const std::vector<Rational>& positions() const { return positions_; }
  const std::vector<Preference>& preferences() const { return preferences_; }
  const std::vector<Rational>& candidates() const { return candidates_; }
  const Metadata& metadata() const { return metadata_; }

  // Bounds-checked; throw ContractViolation.
  const Rational& position(std::size_t agent) const;
  const Preference& preference(std::size_t agent) const;
  const Rational& candidate(std::size_t slot) const;

  // Every agent is affected by both facilities.
  bool non_optional() const;

  // Copy with one agent's reported position replaced.
  Instance with_position(std::size_t agent, Rational position) const;

  Instance with_metadata(Metadata metadata) const;

  // Equality ignores metadata.
  friend bool operator==(const Instance& a, const Instance& b) {
    return a.positions_ == b.positions_ && a.preferences_ == b.preferences_ &&
           a.candidates_ == b.candidates_;
  }

 private:
  Instance() = default;

  std::vector<Rational> positions_;
  std::vector<Preference> preferences_;
  std::vector<Rational> candidates_;
  Metadata metadata_;
};

// Facility F1 at candidate slot `slot_f1`, F2 at `slot_f2`. The two slots
// always differ.
class Solution {
 public:
  // Throws ContractViolation when the slots coincide.
  Solution(std::size_t slot_f1, std::size_t slot_f2);

  std::size_t slot_f1() const { return slot_f1_; }
  std::size_t slot_f2() const { return slot_f2_; }

  // Throws ContractViolation if either slot is out of range for `instance`.
  void check(const Instance& instance) const;

  friend auto operator<=>(const Solution&, const Solution&) = default;

 private:
  std::size_t slot_f1_;
  std::size_t slot_f2_;
};

struct WeightedSolution {
  Solution solution;
  Rational probability;

  friend bool operator==(const WeightedSolution&,
                         const WeightedSolution&) = default;
};

// Finite lottery over solutions with exact weights. Entries whose facility
// coordinates coincide are merged (the first slot pair seen is kept), and
// the support is stored ordered by slots so equal lotteries compare equal.
class RandomizedSolution {
 public:
  static RandomizedSolution point(Solution solution);

  // Throws InvariantViolation on a non-positive weight or a total mass
  // other than exactly one; ContractViolation on out-of-range slots.
  static RandomizedSolution from_weights(const Instance& instance,
                                         std::vector<WeightedSolution> entries);

  const std::vector<WeightedSolution>& support() const { return support_; }
  bool is_point() const { return support_.size() == 1; }

  friend bool operator==(const RandomizedSolution&,
                         const RandomizedSolution&) = default;

 private:
  RandomizedSolution() = default;
  std::vector<WeightedSolution> support_;
};

// Slot indices of the extreme candidates. With two candidates `second_left`
// and `second_right` are absent; with three they coincide.
struct Landmarks {
  std::size_t left = 0;
  std::size_t right = 0;
  std::optional<std::size_t> second_left;
  std::optional<std::size_t> second_right;
};

// p1 * |x - y1| + p2 * |x - y2| for the agent's reported position.
Rational utility(const Instance& instance, std::size_t agent,
                 const Solution& solution);

Rational expected_utility(const Instance& instance, std::size_t agent,
                          const RandomizedSolution& rsol);

Rational social_welfare(const Instance& instance, const Solution& solution);

// Throws InvariantViolation if the weights do not sum to one.
Rational expected_social_welfare(const Instance& instance,
                                 const RandomizedSolution& rsol);

Landmarks landmarks(const Instance& instance);

// Candidate slots ordered from most to least distant from `position`.
// Distance ties go to the smaller coordinate, then the smaller slot. The
// first entry is t(.), the second s(.).
std::vector<std::size_t> preference_order(const Rational& position,
                                          const Instance& instance);

// Agent indices sorted by position; coincident agents keep input order.
std::vector<std::size_t> agents_by_position(const Instance& instance);

// Index of the k-th leftmost agent (1-based k, stable on ties). Throws
// ContractViolation unless 1 <= k <= n.
std::size_t kth_leftmost(const Instance& instance, std::size_t k);

}  // namespace ofl

#endif  // OFL_CORE_H_
