// Copyright 2026 The Orbigrpd Authors
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


#include <gtest/gtest.h>

#include <random>
#include <string>

#include "oracles.hpp"
#include "orbi/error.hpp"
#include "orbi/fixtures.hpp"

namespace orbi {
namespace {

constexpr std::size_t kMutations = 100;

class MutationTest : public ::testing::TestWithParam<std::string> {};

TEST_P(MutationTest, EverySingleEntryCorruptionIsDetected) {
  GroupoidPtr g = make_fixture(GetParam());
  ASSERT_TRUE(validate_groupoid(*g).empty());
  std::mt19937 rng(20261016);
  auto mutations = oracle::single_entry_mutations(*g, kMutations, rng);
  if (GetParam() == "pt_1") {
    EXPECT_TRUE(mutations.empty());
  } else {
    EXPECT_GE(mutations.size(), std::min<std::size_t>(kMutations, 6));
  }
  for (const auto& m : mutations) {
    Groupoid broken(m.data);
    EXPECT_FALSE(validate_groupoid(broken, 1).empty())
        << m.table << "[" << m.row << "] := " << m.value;
  }
}

INSTANTIATE_TEST_SUITE_P(Fixtures, MutationTest, ::testing::ValuesIn(fixture_names()),
                         [](const auto& info) { return info.param; });

}  // namespace
}  // namespace orbi
