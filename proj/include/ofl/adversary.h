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

#ifndef OFL_ADVERSARY_H_
#define OFL_ADVERSARY_H_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "ofl/audit.h"
#include "ofl/core.h"
#include "ofl/mechanisms.h"
#include "ofl/oracle.h"

namespace ofl {

// Irrational constants enter the generators only through these 12-digit
// rational approximations; generated instances record them in metadata.
Rational sqrt3_approx();
Rational sqrt2_approx();

// Which instance of a chain step holds the moving agent's true position.
// The misreport is the position in the other instance.
enum class TruthSide { kEarlier, kLater };

// A sequence of instances where consecutive instances differ in exactly one
// agent's position; truth[t] describes the step instances[t] -> [t + 1].
struct Chain {
  std::vector<Instance> instances;
  std::vector<TruthSide> truth;
};

// Candidates {0,0,2,2}, all agents affected by both facilities. Starts with
// a = round((sqrt3 - 1) n) agents at 0 and n - a at 1 + eps; the agents at
// 1 + eps move to 2 one at a time (truth in the earlier instance), then the
// agents at 0 move to 1 - eps one at a time (truth in the later instance).
// The chain has n + 1 instances and ends with a agents at 1 - eps and n - a
// at 2. Throws ContractViolation unless n >= 2, 0 < eps < 1/2 and both groups
// are non-empty.
Chain deterministic_lower_bound_chain(long n, const Rational& eps);

// round((2 - sqrt2) n) agents at 1 - eps and the rest at 2, candidates
// {0,0,2,2}. Requires n >= 3 and 0 < eps < 1.
Instance uniform_statistic_tight_instance(long n, const Rational& eps);

// I: agents at 1 - eps and 1 + eps affected by both facilities, candidates
// {0,0,2,2}. J: the first agent moved to 0. Requires 0 < eps < 1.
std::pair<Instance, Instance> randomized_lower_bound_pair(const Rational& eps);

// I: agents at 1 - eps and 1 + eps affected only by F1, candidates {0,2}.
// J: the first agent moved to 0. Requires 0 < eps < 1.
std::pair<Instance, Instance> single_facility_lower_bound_pair(
    const Rational& eps);

// Checks the chain's shape; throws ContractViolation when malformed.
void validate_chain(const Chain& chain);

struct SpViolation {
  std::size_t step = 0;  // the step instances[step] -> instances[step + 1]
  DeviationWitness witness;
};

struct RatioCertificate {
  std::size_t index = 0;  // chain position of the worst instance
  Instance instance;
  RatioReport report;
};

using ChainOutcome = std::variant<SpViolation, RatioCertificate>;

// Runs the mechanism along the chain. The first step whose outcomes give the
// moving agent a strict gain from reporting the other instance's position is
// returned as a violation; otherwise the worst per-instance ratio (earliest
// on ties) is certified.
ChainOutcome chain_replay(const Mechanism& mechanism, const Chain& chain);

enum class PreferenceMix { kNonOptional, kSingleFacility, kMixed };

struct SearchConfig {
  std::size_t min_agents = 1;
  std::size_t max_agents = 8;
  std::size_t min_candidates = 2;
  std::size_t max_candidates = 5;
  // Random coordinates are k / grid_denominator in [0, coordinate_range].
  long grid_denominator = 4;
  long coordinate_range = 8;
  PreferenceMix mix = PreferenceMix::kMixed;
  std::uint64_t seed = 1;
  // Total number of ratio evaluations.
  std::size_t budget = 10000;
  // Grid steps an agent may move per hill-climbing move, in each direction.
  std::size_t neighborhood = 2;
  std::size_t max_climb_steps = 64;

  // Throws ContractViolation on empty ranges or a zero budget.
  void validate() const;
};

struct SearchResult {
  Instance instance;
  RatioReport report;
  std::size_t evaluations = 0;
};

// Random restarts plus hill climbing over single-agent moves on the
// misreport grid. The lower-bound families are evaluated first. Instances the
// mechanism rejects are skipped. Deterministic for a given config.
SearchResult worst_case_search(const Mechanism& mechanism,
                               const SearchConfig& config);

}  // namespace ofl

#endif  // OFL_ADVERSARY_H_
