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

#ifndef OFL_REPORT_JSON_H_
#define OFL_REPORT_JSON_H_

#include "json.hpp"
#include "ofl/adversary.h"
#include "ofl/audit.h"
#include "ofl/core.h"
#include "ofl/oracle.h"

namespace ofl {

// JSON renderings used by the CLI. Rationals are strings; fields ending in
// "_decimal" are approximate. Top-level documents carry "schema_version".

nlohmann::json solution_json(const Instance& instance, const Solution& solution);
nlohmann::json distribution_json(const Instance& instance,
                                 const RandomizedSolution& rsol);
nlohmann::json ratio_report_json(const Instance& instance,
                                 const RatioReport& report);
nlohmann::json audit_report_json(const AuditReport& report);
nlohmann::json witness_json(const DeviationWitness& witness);
nlohmann::json chain_outcome_json(const ChainOutcome& outcome);

}  // namespace ofl

#endif  // OFL_REPORT_JSON_H_
