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

// Acceptance runner: `acceptance_test ID` runs one criterion, no argument
// runs all of them. Prints one PASS/FAIL line per criterion.

#include <cstdlib>
#include <iostream>
#include <string>

#include "ofl/repro.h"

int main(int argc, char** argv) {
  bool ok = true;
  auto print = [&](const ofl::CriterionResult& r) {
    ok = ok && r.passed;
    std::cout << ofl::format_result_line(r) << std::endl;
  };
  if (argc > 1) {
    print(ofl::run_criterion(std::atoi(argv[1])));
  } else {
    ofl::run_all_criteria(print);
  }
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
