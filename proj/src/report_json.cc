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

#include "ofl/report_json.h"

#include "ofl/instance_io.h"

namespace ofl {

using nlohmann::json;

json solution_json(const Instance& instance, const Solution& solution) {
  return {{"slots", json::array({solution.slot_f1(), solution.slot_f2()})},
          {"coordinates",
           json::array({instance.candidate(solution.slot_f1()).str(),
                        instance.candidate(solution.slot_f2()).str()})}};
}

json distribution_json(const Instance& instance, const RandomizedSolution& rsol) {
  json support = json::array();
  for (const auto& [solution, probability] : rsol.support()) {
    json entry = solution_json(instance, solution);
    entry["probability"] = probability.str();
    support.push_back(std::move(entry));
  }
  return support;
}

json ratio_report_json(const Instance& instance, const RatioReport& report) {
  json out = {
      {"schema_version", kSchemaVersion},
      {"optimal_solution", solution_json(instance, report.optimal_solution)},
      {"optimal_welfare", report.optimal_welfare.str()},
      {"mechanism_welfare", report.mechanism_welfare.str()},
      {"infinite", report.infinite},
  };
  if (report.infinite) {
    out["ratio"] = "inf";
    out["ratio_decimal"] = "inf";
  } else {
    out["ratio"] = report.ratio.str();
    out["ratio_decimal"] = report.ratio.decimal(6);
  }
  return out;
}

json witness_json(const DeviationWitness& w) {
  return {{"agent", w.agent},
          {"true_position", w.true_position.str()},
          {"misreport", w.misreport.str()},
          {"truthful_utility", w.truthful_utility.str()},
          {"deviating_utility", w.deviating_utility.str()}};
}

json audit_report_json(const AuditReport& report) {
  json out = {{"schema_version", kSchemaVersion},
              {"mechanism", report.mechanism},
              {"verdict", report.deviation_found() ? "DeviationFound"
                                                   : "NoDeviationFound"},
              {"misreports_checked", report.misreports_checked},
              {"rejected_profiles", report.rejected_profiles},
              {"grid_validated", report.grid_validated}};
  if (report.component) out["component"] = *report.component;
  if (report.witness) out["witness"] = witness_json(*report.witness);
  return out;
}

json chain_outcome_json(const ChainOutcome& outcome) {
  if (const auto* v = std::get_if<SpViolation>(&outcome)) {
    return {{"schema_version", kSchemaVersion},
            {"kind", "SpViolation"},
            {"step", v->step},
            {"witness", witness_json(v->witness)}};
  }
  const auto& c = std::get<RatioCertificate>(outcome);
  return {{"schema_version", kSchemaVersion},
          {"kind", "RatioCertificate"},
          {"index", c.index},
          {"report", ratio_report_json(c.instance, c.report)}};
}

}  // namespace ofl
