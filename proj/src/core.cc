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

#include "ofl/core.h"

#include <algorithm>
#include <numeric>
#include <utility>

#include "ofl/errors.h"

namespace ofl {

Instance Instance::create(std::vector<Rational> positions,
                          std::vector<Preference> preferences,
                          std::vector<Rational> candidates,
                          Metadata metadata) {
  if (positions.empty()) {
    throw InvariantViolation("instance needs at least one agent");
  }
  if (positions.size() != preferences.size()) {
    throw InvariantViolation("positions and preferences differ in length");
  }
  if (candidates.size() < 2) {
    throw InvariantViolation("instance needs at least two candidate slots");
  }
  for (std::size_t i = 0; i < preferences.size(); ++i) {
    if (!preferences[i].affects_f1 && !preferences[i].affects_f2) {
      throw InvariantViolation("agent " + std::to_string(i) +
                               " is affected by neither facility");
    }
  }
  std::sort(candidates.begin(), candidates.end());
  Instance instance;
  instance.positions_ = std::move(positions);
  instance.preferences_ = std::move(preferences);
  instance.candidates_ = std::move(candidates);
  instance.metadata_ = std::move(metadata);
  return instance;
}

Instance Instance::uniform(std::vector<Rational> positions,
                           Preference preference,
                           std::vector<Rational> candidates) {
  std::vector<Preference> prefs(positions.size(), preference);
  return create(std::move(positions), std::move(prefs), std::move(candidates));
}

const Rational& Instance::position(std::size_t agent) const {
  if (agent >= positions_.size()) {
    throw ContractViolation("agent index " + std::to_string(agent) +
                            " out of range");
  }
  return positions_[agent];
}

const Preference& Instance::preference(std::size_t agent) const {
  if (agent >= preferences_.size()) {
    throw ContractViolation("agent index " + std::to_string(agent) +
                            " out of range");
  }
  return preferences_[agent];
}

const Rational& Instance::candidate(std::size_t slot) const {
  if (slot >= candidates_.size()) {
    throw ContractViolation("candidate slot " + std::to_string(slot) +
                            " out of range");
  }
  return candidates_[slot];
}

bool Instance::non_optional() const {
  return std::all_of(preferences_.begin(), preferences_.end(),
                     [](const Preference& p) { return p.non_optional(); });
}

Instance Instance::with_position(std::size_t agent, Rational position) const {
  Instance copy = *this;
  if (agent >= copy.positions_.size()) {
    throw ContractViolation("agent index " + std::to_string(agent) +
                            " out of range");
  }
  copy.positions_[agent] = std::move(position);
  return copy;
}

Instance Instance::with_metadata(Metadata metadata) const {
  Instance copy = *this;
  copy.metadata_ = std::move(metadata);
  return copy;
}

Solution::Solution(std::size_t slot_f1, std::size_t slot_f2)
    : slot_f1_(slot_f1), slot_f2_(slot_f2) {
  if (slot_f1 == slot_f2) {
    throw ContractViolation("both facilities assigned to slot " +
                            std::to_string(slot_f1));
  }
}

void Solution::check(const Instance& instance) const {
  const std::size_t m = instance.num_candidates();
  if (slot_f1_ >= m || slot_f2_ >= m) {
    throw ContractViolation("solution slot out of range for instance with " +
                            std::to_string(m) + " candidates");
  }
}

RandomizedSolution RandomizedSolution::point(Solution solution) {
  RandomizedSolution r;
  r.support_.push_back({solution, Rational(1)});
  return r;
}

RandomizedSolution RandomizedSolution::from_weights(
    const Instance& instance, std::vector<WeightedSolution> entries) {
  RandomizedSolution r;
  Rational total;
  for (auto& entry : entries) {
    entry.solution.check(instance);
    if (entry.probability.sign() <= 0) {
      throw InvariantViolation("non-positive probability " +
                               entry.probability.str());
    }
    total += entry.probability;
    const Rational& y1 = instance.candidate(entry.solution.slot_f1());
    const Rational& y2 = instance.candidate(entry.solution.slot_f2());
    auto same = std::find_if(
        r.support_.begin(), r.support_.end(), [&](const WeightedSolution& w) {
          return instance.candidate(w.solution.slot_f1()) == y1 &&
                 instance.candidate(w.solution.slot_f2()) == y2;
        });
    if (same != r.support_.end()) {
      same->probability += entry.probability;
    } else {
      r.support_.push_back(std::move(entry));
    }
  }
  if (total != Rational(1)) {
    throw InvariantViolation("probabilities sum to " + total.str() +
                             ", expected 1");
  }
  std::sort(r.support_.begin(), r.support_.end(),
            [](const WeightedSolution& a, const WeightedSolution& b) {
              return a.solution < b.solution;
            });
  return r;
}

Rational utility(const Instance& instance, std::size_t agent,
                 const Solution& solution) {
  solution.check(instance);
  const Rational& x = instance.position(agent);
  const Preference& p = instance.preference(agent);
  Rational u;
  if (p.affects_f1) u += abs(x - instance.candidate(solution.slot_f1()));
  if (p.affects_f2) u += abs(x - instance.candidate(solution.slot_f2()));
  return u;
}

Rational expected_utility(const Instance& instance, std::size_t agent,
                          const RandomizedSolution& rsol) {
  Rational u;
  for (const auto& [solution, probability] : rsol.support()) {
    u += probability * utility(instance, agent, solution);
  }
  return u;
}

Rational social_welfare(const Instance& instance, const Solution& solution) {
  Rational sw;
  for (std::size_t i = 0; i < instance.num_agents(); ++i) {
    sw += utility(instance, i, solution);
  }
  return sw;
}

Rational expected_social_welfare(const Instance& instance,
                                 const RandomizedSolution& rsol) {
  Rational mass;
  Rational sw;
  for (const auto& [solution, probability] : rsol.support()) {
    mass += probability;
    sw += probability * social_welfare(instance, solution);
  }
  if (mass != Rational(1)) {
    throw InvariantViolation("probabilities sum to " + mass.str() +
                             ", expected 1");
  }
  return sw;
}

Landmarks landmarks(const Instance& instance) {
  const std::size_t m = instance.num_candidates();
  if (m < 2) throw InvariantViolation("landmarks need two candidates");
  Landmarks lm;
  lm.left = 0;
  lm.right = m - 1;
  if (m >= 3) {
    lm.second_left = 1;
    lm.second_right = m - 2;
  }
  return lm;
}

std::vector<std::size_t> preference_order(const Rational& position,
                                          const Instance& instance) {
  const auto& cands = instance.candidates();
  std::vector<Rational> dist;
  dist.reserve(cands.size());
  for (const auto& c : cands) dist.push_back(abs(position - c));
  std::vector<std::size_t> order(cands.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (dist[a] != dist[b]) return dist[a] > dist[b];
    if (cands[a] != cands[b]) return cands[a] < cands[b];
    return a < b;
  });
  return order;
}

std::vector<std::size_t> agents_by_position(const Instance& instance) {
  const auto& pos = instance.positions();
  std::vector<std::size_t> order(pos.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return pos[a] < pos[b]; });
  return order;
}

std::size_t kth_leftmost(const Instance& instance, std::size_t k) {
  const std::size_t n = instance.num_agents();
  if (k < 1 || k > n) {
    throw ContractViolation("k=" + std::to_string(k) + " outside [1, " +
                            std::to_string(n) + "]");
  }
  const auto& pos = instance.positions();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  // (position, index) is a strict total order, so selection is stable.
  std::nth_element(order.begin(), order.begin() + (k - 1), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     if (pos[a] != pos[b]) return pos[a] < pos[b];
                     return a < b;
                   });
  return order[k - 1];
}

}  // namespace ofl
