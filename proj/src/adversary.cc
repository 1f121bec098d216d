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

#include "ofl/adversary.h"

#include <algorithm>
#include <optional>
#include <random>

#include "ofl/errors.h"

namespace ofl {
namespace {

constexpr long kApproxScale = 1'000'000'000'000L;  // 12 decimal digits

long round_half_up(const Rational& x) {
  return (x + Rational(1, 2)).floor();
}

void require_eps(const Rational& eps, const Rational& upper) {
  if (eps.sign() <= 0 || eps >= upper) {
    throw ContractViolation("eps " + eps.str() + " outside (0, " +
                            upper.str() + ")");
  }
}

Metadata family_metadata(std::string family, const Rational& eps) {
  return {{"generator", std::move(family)},
          {"eps", eps.str()},
          {"irrational_digits", "12"}};
}

std::vector<Rational> doubled_extremes() {
  return {Rational(0), Rational(0), Rational(2), Rational(2)};
}

}  // namespace

Rational sqrt3_approx() { return Rational(1'732'050'807'569L, kApproxScale); }
Rational sqrt2_approx() { return Rational(1'414'213'562'373L, kApproxScale); }

Chain deterministic_lower_bound_chain(long n, const Rational& eps) {
  if (n < 2) throw ContractViolation("chain needs n >= 2");
  require_eps(eps, Rational(1, 2));
  const long a = round_half_up((sqrt3_approx() - Rational(1)) * Rational(n));
  if (a < 1 || n - a < 1) {
    throw ContractViolation("n=" + std::to_string(n) +
                            " leaves an empty agent group");
  }
  Metadata meta = family_metadata("deterministic-lower-bound-chain", eps);
  meta["sqrt3_approx"] = sqrt3_approx().str();

  std::vector<Rational> positions(n, Rational(0));
  for (long k = a; k < n; ++k) positions[k] = Rational(1) + eps;

  Chain chain;
  chain.instances.reserve(n + 1);
  chain.instances.push_back(Instance::create(
      positions, std::vector<Preference>(n, Preference::both()),
      doubled_extremes(), meta));
  for (long k = a; k < n; ++k) {
    chain.instances.push_back(chain.instances.back().with_position(k, Rational(2)));
    chain.truth.push_back(TruthSide::kEarlier);
  }
  for (long k = 0; k < a; ++k) {
    chain.instances.push_back(
        chain.instances.back().with_position(k, Rational(1) - eps));
    chain.truth.push_back(TruthSide::kLater);
  }
  return chain;
}

Instance uniform_statistic_tight_instance(long n, const Rational& eps) {
  if (n < 3) throw ContractViolation("tight instance needs n >= 3");
  require_eps(eps, Rational(1));
  const long a = round_half_up((Rational(2) - sqrt2_approx()) * Rational(n));
  if (a < 1 || n - a < 1) {
    throw ContractViolation("n=" + std::to_string(n) +
                            " leaves an empty agent group");
  }
  std::vector<Rational> positions(n, Rational(2));
  for (long k = 0; k < a; ++k) positions[k] = Rational(1) - eps;
  Metadata meta = family_metadata("uniform-statistic-tight", eps);
  meta["sqrt2_approx"] = sqrt2_approx().str();
  return Instance::create(std::move(positions),
                          std::vector<Preference>(n, Preference::both()),
                          doubled_extremes(), std::move(meta));
}

std::pair<Instance, Instance> randomized_lower_bound_pair(const Rational& eps) {
  require_eps(eps, Rational(1));
  const Instance i = Instance::create(
      {Rational(1) - eps, Rational(1) + eps},
      {Preference::both(), Preference::both()}, doubled_extremes(),
      family_metadata("randomized-lower-bound-pair", eps));
  return {i, i.with_position(0, Rational(0))};
}

std::pair<Instance, Instance> single_facility_lower_bound_pair(
    const Rational& eps) {
  require_eps(eps, Rational(1));
  const Instance i = Instance::create(
      {Rational(1) - eps, Rational(1) + eps},
      {Preference::only_f1(), Preference::only_f1()}, {Rational(0), Rational(2)},
      family_metadata("single-facility-lower-bound-pair", eps));
  return {i, i.with_position(0, Rational(0))};
}

namespace {

std::size_t moved_agent(const Instance& before, const Instance& after) {
  if (before.num_agents() != after.num_agents() ||
      before.preferences() != after.preferences() ||
      before.candidates() != after.candidates()) {
    throw ContractViolation(
        "chain instances must share agents, preferences and candidates");
  }
  std::optional<std::size_t> moved;
  for (std::size_t i = 0; i < before.num_agents(); ++i) {
    if (before.position(i) == after.position(i)) continue;
    if (moved) throw ContractViolation("chain step moves more than one agent");
    moved = i;
  }
  if (!moved) throw ContractViolation("chain step moves no agent");
  return *moved;
}

}  // namespace

void validate_chain(const Chain& chain) {
  if (chain.instances.empty()) throw ContractViolation("empty chain");
  if (chain.truth.size() + 1 != chain.instances.size()) {
    throw ContractViolation("chain needs one truth side per step");
  }
  for (std::size_t t = 0; t + 1 < chain.instances.size(); ++t) {
    moved_agent(chain.instances[t], chain.instances[t + 1]);
  }
}

ChainOutcome chain_replay(const Mechanism& mechanism, const Chain& chain) {
  validate_chain(chain);
  std::vector<RandomizedSolution> outcomes;
  outcomes.reserve(chain.instances.size());
  for (const Instance& inst : chain.instances) outcomes.push_back(mechanism(inst));

  for (std::size_t t = 0; t + 1 < chain.instances.size(); ++t) {
    const Instance& before = chain.instances[t];
    const Instance& after = chain.instances[t + 1];
    const std::size_t agent = moved_agent(before, after);
    const bool earlier = chain.truth[t] == TruthSide::kEarlier;
    const Instance& truth = earlier ? before : after;
    const Instance& lie = earlier ? after : before;
    const RandomizedSolution& honest_outcome = outcomes[earlier ? t : t + 1];
    const RandomizedSolution& lying_outcome = outcomes[earlier ? t + 1 : t];
    Rational honest = expected_utility(truth, agent, honest_outcome);
    Rational gained = expected_utility(truth, agent, lying_outcome);
    if (gained > honest) {
      return SpViolation{t, DeviationWitness{agent, truth.position(agent),
                                             lie.position(agent),
                                             std::move(honest),
                                             std::move(gained)}};
    }
  }

  std::optional<RatioCertificate> worst;
  for (std::size_t t = 0; t < chain.instances.size(); ++t) {
    RatioReport report = approximation_ratio(chain.instances[t], mechanism);
    if (!worst || ratio_less(worst->report, report)) {
      worst = RatioCertificate{t, chain.instances[t], std::move(report)};
    }
  }
  return *worst;
}

void SearchConfig::validate() const {
  if (min_agents < 1 || min_agents > max_agents) {
    throw ContractViolation("empty agent-count range");
  }
  if (min_candidates < 2 || min_candidates > max_candidates) {
    throw ContractViolation("candidate-count range must lie in [2, inf)");
  }
  if (grid_denominator < 1 || coordinate_range < 1) {
    throw ContractViolation("grid denominator and range must be positive");
  }
  if (budget < 1) throw ContractViolation("search budget must be >= 1");
  if (neighborhood < 1) throw ContractViolation("neighborhood must be >= 1");
}

namespace {

class Searcher {
 public:
  Searcher(const Mechanism& mechanism, const SearchConfig& config)
      : mechanism_(mechanism), config_(config), rng_(config.seed) {}

  SearchResult run() {
    // Score every family seed before climbing from any of them.
    const std::vector<Instance> seeds = family_seeds();
    for (const Instance& seed : seeds) {
      if (exhausted()) break;
      if (auto report = evaluate(seed)) offer(seed, *report);
    }
    for (const Instance& seed : seeds) {
      if (exhausted()) break;
      climb(seed);
    }
    while (!exhausted()) climb(random_instance());
    if (!best_) {
      throw NotApplicable(mechanism_.name() +
                          " rejected every instance the search generated");
    }
    best_->evaluations = evaluations_;
    return *best_;
  }

 private:
  bool exhausted() const { return evaluations_ >= config_.budget; }

  std::optional<RatioReport> evaluate(const Instance& instance) {
    ++evaluations_;
    try {
      return approximation_ratio(instance, mechanism_);
    } catch (const NotApplicable&) {
      return std::nullopt;
    }
  }

  void offer(const Instance& instance, const RatioReport& report) {
    if (!best_ || ratio_less(best_->report, report)) {
      best_ = SearchResult{instance, report, 0};
    }
  }

  void climb(Instance current) {
    std::optional<RatioReport> here = evaluate(current);
    if (!here) return;
    offer(current, *here);
    for (std::size_t step = 0; step < config_.max_climb_steps; ++step) {
      std::optional<std::pair<Instance, RatioReport>> move;
      for (std::size_t agent = 0; agent < current.num_agents(); ++agent) {
        const auto grid = misreport_grid(current, agent);
        const auto at = std::lower_bound(grid.begin(), grid.end(),
                                         current.position(agent)) - grid.begin();
        for (std::size_t d = 1; d <= config_.neighborhood; ++d) {
          for (const long k : {static_cast<long>(at) - static_cast<long>(d),
                               static_cast<long>(at + d)}) {
            if (k < 0 || k >= static_cast<long>(grid.size())) continue;
            if (exhausted()) break;
            Instance next = current.with_position(agent, grid[k]);
            std::optional<RatioReport> there = evaluate(next);
            if (!there) continue;
            const RatioReport& bar = move ? move->second : *here;
            if (ratio_less(bar, *there)) move.emplace(std::move(next), *there);
          }
        }
      }
      if (!move) return;
      current = std::move(move->first);
      here = std::move(move->second);
      offer(current, *here);
    }
  }

  std::vector<Instance> family_seeds() const {
    const Rational eps(1, 1000);
    const long n = static_cast<long>(std::max<std::size_t>(config_.max_agents, 3));
    std::vector<Instance> seeds =
        deterministic_lower_bound_chain(n, eps).instances;
    seeds.push_back(uniform_statistic_tight_instance(n, eps));
    auto [ri, rj] = randomized_lower_bound_pair(eps);
    seeds.push_back(std::move(ri));
    seeds.push_back(std::move(rj));
    auto [si, sj] = single_facility_lower_bound_pair(eps);
    seeds.push_back(std::move(si));
    seeds.push_back(std::move(sj));
    return seeds;
  }

  Rational random_coordinate() {
    std::uniform_int_distribution<long> pick(
        0, config_.coordinate_range * config_.grid_denominator);
    return Rational(pick(rng_), config_.grid_denominator);
  }

  Preference random_preference() {
    std::uniform_int_distribution<int> pick(0, 2);
    switch (config_.mix) {
      case PreferenceMix::kNonOptional:
        return Preference::both();
      case PreferenceMix::kSingleFacility:
        return pick(rng_) % 2 == 0 ? Preference::only_f1()
                                   : Preference::only_f2();
      case PreferenceMix::kMixed:
        break;
    }
    const int p = pick(rng_);
    return p == 0 ? Preference::both()
                  : p == 1 ? Preference::only_f1() : Preference::only_f2();
  }

  Instance random_instance() {
    std::uniform_int_distribution<std::size_t> agents(config_.min_agents,
                                                      config_.max_agents);
    std::uniform_int_distribution<std::size_t> cands(config_.min_candidates,
                                                     config_.max_candidates);
    const std::size_t n = agents(rng_);
    const std::size_t m = cands(rng_);
    std::vector<Rational> positions, candidates;
    std::vector<Preference> prefs;
    for (std::size_t i = 0; i < n; ++i) {
      positions.push_back(random_coordinate());
      prefs.push_back(random_preference());
    }
    for (std::size_t s = 0; s < m; ++s) candidates.push_back(random_coordinate());
    return Instance::create(std::move(positions), std::move(prefs),
                            std::move(candidates));
  }

  const Mechanism& mechanism_;
  const SearchConfig& config_;
  std::mt19937_64 rng_;
  std::size_t evaluations_ = 0;
  std::optional<SearchResult> best_;
};

}  // namespace

SearchResult worst_case_search(const Mechanism& mechanism,
                               const SearchConfig& config) {
  config.validate();
  if (mechanism.spec() && mechanism.spec()->requires_non_optional() &&
      config.mix != PreferenceMix::kNonOptional) {
    throw ContractViolation(mechanism.name() +
                            " needs a non-optional preference mix");
  }
  return Searcher(mechanism, config).run();
}

}  // namespace ofl
