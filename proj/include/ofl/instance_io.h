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

#ifndef OFL_INSTANCE_IO_H_
#define OFL_INSTANCE_IO_H_

#include <string>
#include <string_view>

#include "ofl/core.h"

namespace ofl {

inline constexpr int kSchemaVersion = 1;

// Reads an instance file:
//   {"schema_version": 1,
//    "positions": ["0", "101/100"],
//    "preferences": [[1, 1], [1, 1]],
//    "candidates": ["0", "0", "2", "2"],
//    "metadata": {"generator": "..."}}
// schema_version and metadata are optional. Rationals are "p/q" or integer
// strings (JSON integers are also accepted). Throws ParseError naming the
// offending field and index.
Instance parse_instance(std::string_view text);

// Canonical JSON: sorted keys, lowest-terms rationals, sorted candidates,
// two-space indent, trailing newline. parse_instance(emit_instance(x))
// re-emits byte-identically.
std::string emit_instance(const Instance& instance);

Instance read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const Instance& instance);

}  // namespace ofl

#endif  // OFL_INSTANCE_IO_H_
