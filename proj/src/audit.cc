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

#include "ofl/audit.h"

#include <algorithm>

#include "ofl/errors.h"

namespace ofl {
namespace {

void sort_unique(std::vector<Rational>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Uniform-ish rational strictly inside (lo, hi).
Rational sample_between(const Rational& lo, const Rational& hi,
                        std::mt19937_64& rng) {
  constexpr long kResolution = 1L << 20;
  std::uniform_int_distribution<long> pick(1, kResolution - 1);
  return lo + (hi - lo) * Rational(pick(rng), kResolution);
}

constexpr std::uint64_t kExternalValidationSeed = 0x5eed'0f1a'2b3c'4d5eULL;

}  // namespace

std::vector<Rational> misreport_grid(const Instance& instance,
                                     std::size_t agent) {
  instance.position(agent);  // bounds check
  const auto& cands = instance.candidates();

  std::vector<Rational> base;
  for (std::size_t i = 0; i < instance.num_agents(); ++i) {
    if (i != agent) base.push_back(instance.position(i));
  }
  std::vector<Rational> coords = cands;
  sort_unique(coords);
  for (std::size_t a = 0; a < coords.size(); ++a) {
    for (std::size_t b = a; b < coords.size(); ++b) {
      base.push_back(midpoint(coords[a], coords[b]));
    }
  }
  sort_unique(base);

  std::optional<Rational> min_gap;
  for (std::size_t k = 1; k < base.size(); ++k) {
    Rational gap = base[k] - base[k - 1];
    if (!min_gap || gap < *min_gap) min_gap = std::move(gap);
  }
  const Rational delta = min_gap.value_or(Rational(1)) / Rational(3);

  std::vector<Rational> grid;
  grid.reserve(3 * base.size() + 3);
  for (const Rational& v : base) {
    grid.push_back(v - delta);
    grid.push_back(v);
    grid.push_back(v + delta);
  }
  grid.push_back(cands.front() - Rational(1));
  grid.push_back(cands.back() + Rational(1));
  grid.push_back(instance.position(agent));
  sort_unique(grid);
  return grid;
}

AuditReport audit_strategyproofness(const Instance& instance,
                                    const Mechanism& mechanism) {
  AuditReport report;
  report.mechanism = mechanism.name();
  const RandomizedSolution truthful = mechanism(instance);

  for (std::size_t agent = 0; agent < instance.num_agents(); ++agent) {
    const Rational& truth = instance.position(agent);
    const Rational honest = expected_utility(instance, agent, truthful);
    for (const Rational& report_pos : misreport_grid(instance, agent)) {
      if (report_pos == truth) continue;
      ++report.misreports_checked;
      std::optional<RandomizedSolution> outcome;
      try {
        outcome = mechanism(instance.with_position(agent, report_pos));
      } catch (const NotApplicable&) {
        ++report.rejected_profiles;
        continue;
      }
      Rational gained = expected_utility(instance, agent, *outcome);
      if (gained > honest) {
        report.witness =
            DeviationWitness{agent, truth, report_pos, honest, std::move(gained)};
        return report;
      }
    }
  }

  if (!mechanism.builtin()) {
    std::mt19937_64 rng(kExternalValidationSeed);
    for (std::size_t agent = 0; agent < instance.num_agents(); ++agent) {
      if (!check_grid_soundness(instance, agent, mechanism, rng).constant) {
        report.grid_validated = false;
        break;
      }
    }
  }
  return report;
}

std::vector<Mechanism> universal_components(const Instance& instance,
                                            const MechanismSpec& spec) {
  std::vector<Mechanism> components;
  switch (spec.kind()) {
    case MechanismKind::kUniformStatistic: {
      const long n = static_cast<long>(instance.num_agents());
      const long m = std::max(1L, n / 2);
      for (long k = 1; k <= m; ++k) {
        components.emplace_back(MechanismSpec::alpha_statistic(
            std::min(Rational(k, n), Rational(1, 2))));
      }
      break;
    }
    case MechanismKind::kEquiprobableLr: {
      const Landmarks lm = landmarks(instance);
      for (const Solution fixed :
           {Solution(lm.left, lm.right), Solution(lm.right, lm.left)}) {
        components.push_back(Mechanism::external_deterministic(
            "constant(" + std::to_string(fixed.slot_f1()) + "," +
                std::to_string(fixed.slot_f2()) + ")",
            [fixed](const Instance&) { return fixed; }));
      }
      break;
    }
    default:
      throw ContractViolation("universal audit applies to randomized "
                              "mechanisms only, got " + spec.label());
  }
  return components;
}

AuditReport audit_universal(const Instance& instance, const MechanismSpec& spec) {
  AuditReport total;
  total.mechanism = spec.label();
  for (const Mechanism& component : universal_components(instance, spec)) {
    AuditReport part = audit_strategyproofness(instance, component);
    total.misreports_checked += part.misreports_checked;
    total.rejected_profiles += part.rejected_profiles;
    total.grid_validated = total.grid_validated && part.grid_validated;
    if (part.deviation_found()) {
      total.component = component.name();
      total.witness = std::move(part.witness);
      return total;
    }
  }
  return total;
}

bool replay_witness(const Instance& instance, const Mechanism& mechanism,
                    const DeviationWitness& witness) {
  if (instance.position(witness.agent) != witness.true_position) return false;
  const Rational honest =
      expected_utility(instance, witness.agent, mechanism(instance));
  const Rational gained = expected_utility(
      instance, witness.agent,
      mechanism(instance.with_position(witness.agent, witness.misreport)));
  return honest == witness.truthful_utility &&
         gained == witness.deviating_utility && gained > honest;
}

GridCheck check_grid_soundness(const Instance& instance, std::size_t agent,
                               const Mechanism& mechanism,
                               std::mt19937_64& rng, int per_interval) {
  const std::vector<Rational> grid = misreport_grid(instance, agent);
  std::vector<std::pair<Rational, Rational>> cells;
  cells.emplace_back(grid.front() - Rational(10), grid.front());
  for (std::size_t k = 1; k < grid.size(); ++k) {
    cells.emplace_back(grid[k - 1], grid[k]);
  }
  cells.emplace_back(grid.back(), grid.back() + Rational(10));

  GridCheck check;
  for (const auto& [lo, hi] : cells) {
    ++check.intervals;
    // A refused profile counts as an outcome of its own; refusals must also
    // be constant within a cell.
    std::optional<std::pair<Rational, std::optional<RandomizedSolution>>> first;
    for (int s = 0; s < per_interval; ++s) {
      Rational x = sample_between(lo, hi, rng);
      std::optional<RandomizedSolution> outcome;
      try {
        outcome = mechanism(instance.with_position(agent, x));
      } catch (const NotApplicable&) {
      }
      ++check.samples;
      if (!first) {
        first.emplace(std::move(x), std::move(outcome));
      } else if (!(outcome == first->second)) {
        check.constant = false;
        check.counterexample.emplace(first->first, std::move(x));
        return check;
      }
    }
  }
  return check;
}

}  // namespace ofl
