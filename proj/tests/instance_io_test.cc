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

#include "ofl/instance_io.h"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "ofl/adversary.h"
#include "ofl/errors.h"
#include "test_support.h"

namespace ofl {
namespace {

using testing::Q;
using testing::Qs;

std::string parse_error(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

TEST(InstanceIoTest, ParsesExample) {
  const Instance j = parse_instance(
      R"({"positions":["0","101/100"],"preferences":[[1,1],[1,1]],)"
      R"("candidates":["0","0","2","2"]})");
  EXPECT_EQ(j, Instance::uniform({Q(0), Q(101, 100)}, Preference::both(), Qs({0, 0, 2, 2})));
}

TEST(InstanceIoTest, CanonicalForm) {
  const Instance inst = parse_instance(
      R"({"schema_version":1,"candidates":["4/2","0"],"positions":["2/4",3],)"
      R"("preferences":[[1,0],[0,1]],"metadata":{"generator":"hand"}})");
  const std::string text = emit_instance(inst);
  EXPECT_NE(text.find("\"1/2\""), std::string::npos);
  EXPECT_LT(text.find("\"0\""), text.find("\"2\""));
  EXPECT_EQ(text.back(), '\n');
  EXPECT_EQ(emit_instance(parse_instance(text)), text);
  EXPECT_EQ(parse_instance(text).metadata().at("generator"), "hand");
}

TEST(InstanceIoTest, RoundTripsGeneratedInstances) {
  const auto [i, j] = randomized_lower_bound_pair(Q(1, 1000000));
  for (const Instance& inst : {i, j, uniform_statistic_tight_instance(10, Q(1, 100)),
                               deterministic_lower_bound_chain(7, Q(1, 3)).instances[3]}) {
    const std::string text = emit_instance(inst);
    const Instance back = parse_instance(text);
    EXPECT_EQ(back, inst);
    EXPECT_EQ(back.metadata(), inst.metadata());
    EXPECT_EQ(emit_instance(back), text);
  }
  testing::RandomInstances gen(61);
  for (int k = 0; k < 200; ++k) {
    const Instance inst = gen.next(6, 5, 12, testing::Prefs::kAny);
    EXPECT_EQ(emit_instance(parse_instance(emit_instance(inst))), emit_instance(inst));
  }
}

TEST(InstanceIoTest, ErrorsNameFieldAndIndex) {
  EXPECT_NE(parse_error(R"({"positions":["0"],"preferences":[[0,0]],"candidates":["0","2"]})")
                .find("preferences[0]"),
            std::string::npos);
  EXPECT_NE(parse_error(R"({"positions":["0","1/x"],"preferences":[[1,1],[1,1]],"candidates":["0","2"]})")
                .find("positions[1]"),
            std::string::npos);
  EXPECT_NE(parse_error(R"({"positions":["0"],"preferences":[[1,2]],"candidates":["0","2"]})")
                .find("preferences[0]"),
            std::string::npos);
  EXPECT_NE(parse_error(R"({"positions":["0"],"preferences":[[1]],"candidates":["0","2"]})")
                .find("preferences[0]"),
            std::string::npos);
  EXPECT_NE(parse_error(R"({"positions":["0"],"preferences":[[true,true]],"candidates":["0","2"]})")
                .find("preferences[0]"),
            std::string::npos);
  EXPECT_NE(parse_error(R"({"positions":["0"],"preferences":[[1,1]],"candidates":["0"]})")
                .find("candidates"),
            std::string::npos);
  EXPECT_NE(parse_error(R"({"positions":["0"],"preferences":[[1,1]],"candidates":["0","1.5"]})")
                .find("candidates[1]"),
            std::string::npos);
  EXPECT_FALSE(parse_error("{not json").empty());
  EXPECT_FALSE(parse_error(R"({"preferences":[[1,1]],"candidates":["0","2"]})").empty());
  EXPECT_FALSE(parse_error(
      R"({"schema_version":2,"positions":["0"],"preferences":[[1,1]],"candidates":["0","2"]})")
                   .empty());
}

TEST(InstanceIoTest, Files) {
  const auto path = std::filesystem::temp_directory_path() / "ofl_instance_io_test.json";
  const Instance inst = Instance::uniform(Qs({1, 3}), Preference::both(), Qs({0, 4}));
  write_instance_file(path.string(), inst);
  EXPECT_EQ(read_instance_file(path.string()), inst);
  std::filesystem::remove(path);
  EXPECT_THROW(read_instance_file(path.string()), ParseError);
}

}  // namespace
}  // namespace ofl
