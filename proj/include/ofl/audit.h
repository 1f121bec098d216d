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

#ifndef OFL_AUDIT_H_
#define OFL_AUDIT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ofl/core.h"
#include "ofl/mechanisms.h"

namespace ofl {

// Finite set of reported positions that covers every behaviourally distinct
// misreport of `agent` for the built-in mechanisms. Built from the other
// agents' positions, the candidate coordinates, and all midpoints of
// candidate pairs; each of those is also offset by +/- delta (a third of the
// smallest positive gap between them), and L - 1 and R + 1 are added as
// sentinels. The agent's true position is included. Sorted, no duplicates.
std::vector<Rational> misreport_grid(const Instance& instance,
                                     std::size_t agent);

struct DeviationWitness {
  std::size_t agent = 0;
  Rational true_position;
  Rational misreport;
  // Both evaluated at the agent's true position and preferences.
  Rational truthful_utility;
  Rational deviating_utility;
};

struct AuditReport {
  std::string mechanism;
  // Set by audit_universal to the deterministic component that failed.
  std::optional<std::string> component;
  std::optional<DeviationWitness> witness;
  std::size_t misreports_checked = 0;
  // Misreported profiles the mechanism refused (counted as non-deviations).
  std::size_t rejected_profiles = 0;
  // Built-in mechanisms are covered by the breakpoint argument; external
  // rules are sampled between grid points and the flag records the result.
  bool grid_validated = true;

  bool deviation_found() const { return witness.has_value(); }
};

// Searches every agent and every grid misreport for a strict gain in
// (expected) utility. Returns the first one found.
AuditReport audit_strategyproofness(const Instance& instance,
                                    const Mechanism& mechanism);

// Audits each deterministic component of a randomized built-in separately:
// alpha-statistic(k/n) for uniform-statistic, the two fixed outcomes for
// equiprobable-lr. Throws ContractViolation for deterministic specs.
AuditReport audit_universal(const Instance& instance, const MechanismSpec& spec);

// The deterministic mechanisms a randomized built-in mixes, as evaluated on
// instances with the same agent count and candidates as `instance`.
std::vector<Mechanism> universal_components(const Instance& instance,
                                            const MechanismSpec& spec);

// Re-runs the mechanism on the truthful and the misreported profile and
// checks that the witness's utilities are reproduced exactly.
bool replay_witness(const Instance& instance, const Mechanism& mechanism,
                    const DeviationWitness& witness);

struct GridCheck {
  bool constant = true;
  std::size_t intervals = 0;
  std::size_t samples = 0;
  // First pair of reports in the same cell that produced different outcomes.
  std::optional<std::pair<Rational, Rational>> counterexample;
};

// Samples `per_interval` random reports strictly inside each cell cut out by
// the misreport grid (including the two unbounded end cells) and checks that
// the mechanism's outcome is the same throughout each cell.
GridCheck check_grid_soundness(const Instance& instance, std::size_t agent,
                               const Mechanism& mechanism,
                               std::mt19937_64& rng, int per_interval = 10);

}  // namespace ofl

#endif  // OFL_AUDIT_H_
