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

#ifndef OFL_REPRO_H_
#define OFL_REPRO_H_

#include <functional>
#include <string>
#include <vector>

namespace ofl {

// One line of the reproduction table: a bound, the exact quantity measured,
// and whether it landed inside the pinned tolerance.
struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kNumCriteria = 9;

// Runs criterion `id` in 1..kNumCriteria. Self-contained: every instance is
// generated in-process from fixed seeds.
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_all_criteria(
    const std::function<void(const CriterionResult&)>& on_result = {});

std::string format_result_line(const CriterionResult& result);

}  // namespace ofl

#endif  // OFL_REPRO_H_
