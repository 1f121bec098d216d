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

#ifndef OFL_ERRORS_H_
#define OFL_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ofl {

// A caller broke an operation's precondition (index out of range, bad
// parameter, malformed chain).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A value failed its type invariant (too few candidates, probabilities that
// do not sum to one, an agent affected by neither facility).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The mechanism is not defined on this instance, e.g. an order-statistic
// mechanism given agents that are not affected by both facilities.
class NotApplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed external input; the message names the offending field and index.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ofl

#endif  // OFL_ERRORS_H_
