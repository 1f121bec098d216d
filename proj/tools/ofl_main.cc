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

// Command-line front end: run, opt, ratio, audit, adversary, search,
// sweep-alpha and repro.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ofl/adversary.h"
#include "ofl/audit.h"
#include "ofl/core.h"
#include "ofl/errors.h"
#include "ofl/instance_io.h"
#include "ofl/mechanisms.h"
#include "ofl/oracle.h"
#include "ofl/rational.h"
#include "ofl/report_json.h"
#include "ofl/repro.h"

namespace {

using nlohmann::json;
using namespace ofl;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitDeviation = 2;

struct MechOptions {
  std::string name;
  std::string alpha;

  MechanismSpec spec() const {
    return MechanismSpec::parse(
        name, alpha.empty() ? std::nullopt : std::optional<std::string_view>(alpha));
  }
};

void add_mech_options(CLI::App* cmd, MechOptions& opts) {
  cmd->add_option("--mech", opts.name,
                  "alpha-statistic, uniform-statistic, lr-stronger-majority or "
                  "equiprobable-lr")
      ->required();
  cmd->add_option("--alpha", opts.alpha, "alpha as p/q (alpha-statistic only)");
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

Rational parse_eps(const std::string& text) {
  const Rational eps = Rational::parse(text);
  if (eps.sign() <= 0) throw ContractViolation("--eps must be positive");
  return eps;
}

int cmd_run(const MechOptions& mech, const std::string& path,
            std::optional<std::uint64_t> sample_seed) {
  const Instance inst = read_instance_file(path);
  const MechanismSpec spec = mech.spec();
  const RandomizedSolution out = run_mechanism(spec, inst);
  json j = {{"schema_version", kSchemaVersion}, {"mechanism", spec.label()}};
  if (out.is_point()) {
    j["solution"] = solution_json(inst, out.support().front().solution);
    j["social_welfare"] = expected_social_welfare(inst, out).str();
  } else {
    j["distribution"] = distribution_json(inst, out);
    j["expected_social_welfare"] = expected_social_welfare(inst, out).str();
  }
  if (sample_seed) {
    std::mt19937_64 rng(*sample_seed);
    std::vector<double> weights;
    for (const auto& entry : out.support()) weights.push_back(entry.probability.to_double());
    std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
    const Solution drawn = out.support()[pick(rng)].solution;
    j["sample"] = solution_json(inst, drawn);
    j["sample_seed"] = *sample_seed;
  }
  print_json(j);
  return kExitOk;
}

int cmd_opt(const std::string& path) {
  const Instance inst = read_instance_file(path);
  const OptimalSolution opt = optimal_solution(inst);
  print_json({{"schema_version", kSchemaVersion},
              {"solution", solution_json(inst, opt.solution)},
              {"social_welfare", opt.welfare.str()}});
  return kExitOk;
}

int cmd_ratio(const MechOptions& mech, const std::string& path) {
  const Instance inst = read_instance_file(path);
  json j = ratio_report_json(inst, approximation_ratio(inst, mech.spec()));
  j["mechanism"] = mech.spec().label();
  print_json(j);
  return kExitOk;
}

int cmd_audit(const MechOptions& mech, const std::string& path, bool universal) {
  const Instance inst = read_instance_file(path);
  const MechanismSpec spec = mech.spec();
  const AuditReport report = universal ? audit_universal(inst, spec)
                                       : audit_strategyproofness(inst, spec);
  print_json(audit_report_json(report));
  return report.deviation_found() ? kExitDeviation : kExitOk;
}

json pair_json(const MechanismSpec& spec, const std::pair<Instance, Instance>& pair) {
  json j = {{"schema_version", kSchemaVersion}, {"mechanism", spec.label()}};
  const auto& [i, jj] = pair;
  j["I"] = {{"instance", json::parse(emit_instance(i))},
            {"report", ratio_report_json(i, approximation_ratio(i, spec))}};
  j["J"] = {{"instance", json::parse(emit_instance(jj))},
            {"report", ratio_report_json(jj, approximation_ratio(jj, spec))}};
  return j;
}

int cmd_adversary(const MechOptions& mech, const std::string& family, long n,
                  const std::string& eps_text) {
  const MechanismSpec spec = mech.spec();
  const Rational eps = parse_eps(eps_text);
  json j;
  if (family == "thm35") {
    j = chain_outcome_json(chain_replay(spec, deterministic_lower_bound_chain(n, eps)));
  } else if (family == "thm36") {
    const Instance inst = uniform_statistic_tight_instance(n, eps);
    j = ratio_report_json(inst, approximation_ratio(inst, spec));
  } else if (family == "thm37") {
    j = pair_json(spec, randomized_lower_bound_pair(eps));
  } else if (family == "thm43") {
    j = pair_json(spec, single_facility_lower_bound_pair(eps));
  } else {
    throw ContractViolation("unknown family '" + family +
                            "' (expected thm35, thm36, thm37 or thm43)");
  }
  j["family"] = family;
  j["mechanism"] = spec.label();
  print_json(j);
  return kExitOk;
}

int cmd_search(const MechOptions& mech, SearchConfig config, const std::string& mix,
               const std::string& out_path) {
  static const std::map<std::string, PreferenceMix> kMixes = {
      {"non-optional", PreferenceMix::kNonOptional},
      {"single-facility", PreferenceMix::kSingleFacility},
      {"mixed", PreferenceMix::kMixed}};
  const auto it = kMixes.find(mix);
  if (it == kMixes.end()) {
    throw ContractViolation("unknown --mix '" + mix +
                            "' (expected non-optional, single-facility or mixed)");
  }
  config.mix = it->second;
  const MechanismSpec spec = mech.spec();
  const SearchResult result = worst_case_search(spec, config);
  if (!out_path.empty()) write_instance_file(out_path, result.instance);
  json j = ratio_report_json(result.instance, result.report);
  j["mechanism"] = spec.label();
  j["evaluations"] = result.evaluations;
  j["instance"] = json::parse(emit_instance(result.instance));
  print_json(j);
  return kExitOk;
}

int cmd_sweep(const std::string& path, long steps) {
  if (steps < 1) throw ContractViolation("--steps must be at least 1");
  const Instance inst = read_instance_file(path);
  std::cout << "alpha,ratio_exact,ratio_decimal\n";
  for (long k = 0; k <= steps; ++k) {
    const Rational alpha(k, 2 * steps);
    const RatioReport r =
        approximation_ratio(inst, MechanismSpec::alpha_statistic(alpha));
    std::cout << alpha << ','
              << (r.infinite ? std::string("inf") : r.ratio.str()) << ','
              << (r.infinite ? std::string("inf") : r.ratio.decimal(6)) << '\n';
  }
  return kExitOk;
}

int cmd_repro(int only) {
  bool all_passed = true;
  auto print = [&](const CriterionResult& r) {
    all_passed = all_passed && r.passed;
    std::cout << format_result_line(r) << std::endl;
  };
  if (only > 0) {
    print(run_criterion(only));
  } else {
    run_all_criteria(print);
  }
  return all_passed ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strategyproof obnoxious two-facility location on a line"};
  app.require_subcommand(1);

  MechOptions mech;
  std::string instance_path;

  auto* run = app.add_subcommand("run", "run a mechanism on an instance");
  add_mech_options(run, mech);
  run->add_option("--instance", instance_path)->required();
  bool sample = false;
  std::uint64_t seed = 1;
  run->add_flag("--sample", sample, "also draw one outcome from the distribution");
  run->add_option("--seed", seed, "seed for --sample");

  auto* opt = app.add_subcommand("opt", "welfare-optimal solution");
  opt->add_option("--instance", instance_path)->required();

  auto* ratio = app.add_subcommand("ratio", "approximation ratio report");
  add_mech_options(ratio, mech);
  ratio->add_option("--instance", instance_path)->required();

  auto* audit = app.add_subcommand(
      "audit", "strategyproofness audit; exit 0 = no deviation, 2 = deviation");
  add_mech_options(audit, mech);
  audit->add_option("--instance", instance_path)->required();
  bool universal = false;
  audit->add_flag("--universal", universal,
                  "audit each deterministic component of a randomized mechanism");

  auto* adversary = app.add_subcommand("adversary", "replay a lower-bound family");
  add_mech_options(adversary, mech);
  std::string family, eps = "1/1000000";
  long n = 1000;
  adversary->add_option("--family", family, "thm35, thm36, thm37 or thm43")->required();
  adversary->add_option("--n", n, "agent count (thm35, thm36)");
  adversary->add_option("--eps", eps, "perturbation as p/q");

  auto* search = app.add_subcommand("search", "hill-climbing worst-case search");
  add_mech_options(search, mech);
  SearchConfig config;
  std::string mix = "mixed", out_path;
  search->add_option("--seed", config.seed);
  search->add_option("--budget", config.budget);
  search->add_option("--min-agents", config.min_agents);
  search->add_option("--max-agents", config.max_agents);
  search->add_option("--min-candidates", config.min_candidates);
  search->add_option("--max-candidates", config.max_candidates);
  search->add_option("--denominator", config.grid_denominator);
  search->add_option("--range", config.coordinate_range);
  search->add_option("--neighborhood", config.neighborhood);
  search->add_option("--mix", mix, "non-optional, single-facility or mixed");
  search->add_option("--out", out_path, "write the worst instance to this file");

  auto* sweep = app.add_subcommand("sweep-alpha", "alpha-statistic ratio for alpha = k/(2K)");
  sweep->add_option("--instance", instance_path)->required();
  long steps = 50;
  sweep->add_option("--steps", steps, "K");

  auto* repro = app.add_subcommand("repro", "run the acceptance suite");
  int only = 0;
  repro->add_option("--only", only, "run a single criterion by number");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }

  try {
    if (*run) {
      return cmd_run(mech, instance_path,
                     sample ? std::optional<std::uint64_t>(seed) : std::nullopt);
    }
    if (*opt) return cmd_opt(instance_path);
    if (*ratio) return cmd_ratio(mech, instance_path);
    if (*audit) return cmd_audit(mech, instance_path, universal);
    if (*adversary) return cmd_adversary(mech, family, n, eps);
    if (*search) return cmd_search(mech, config, mix, out_path);
    if (*sweep) return cmd_sweep(instance_path, steps);
    if (*repro) return cmd_repro(only);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
