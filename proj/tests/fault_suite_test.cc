// Copyright 2026 The deprov Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seeded single-fault mutants of the fixtures. Each must be reported under
// exactly the injected category.

#include "fault_suite.h"

#include <gtest/gtest.h>

#include "deprov/fixtures.h"
#include "deprov/validation.h"

namespace deprov::testing {
namespace {

class FaultSuiteTest : public ::testing::TestWithParam<Mutant> {};

TEST_P(FaultSuiteTest, ReportsExactlyInjectedCategory) {
  const Mutant& mutant = GetParam();
  ValidationReport report = validate(mutant.build());
  EXPECT_TRUE(report.has(mutant.category)) << report_to_text(report);
  for (const Finding& f : report.findings) {
    if (f.category != mutant.category) {
      EXPECT_NE(f.severity, Severity::kError)
          << "spurious " << to_string(f.category) << ": " << f.message;
    }
  }
  EXPECT_FALSE(report.valid());
}

INSTANTIATE_TEST_SUITE_P(
    Mutants, FaultSuiteTest, ::testing::ValuesIn(all_mutants()),
    [](const ::testing::TestParamInfo<Mutant>& info) {
      return info.param.name;
    });

TEST(FaultSuiteCoverageTest, AtLeastThreePerCategory) {
  std::map<Category, int> counts;
  for (const Mutant& m : all_mutants()) ++counts[m.category];
  for (Category c : kAllCategories) {
    EXPECT_GE(counts[c], 3) << to_string(c);
  }
}

TEST(FaultSuiteCoverageTest, UnmutatedFixturesHaveNoErrors) {
  for (FixtureId id : kAllFixtures) {
    EXPECT_TRUE(validate(build_fixture(id, EncodingMode::kBundlesPlus).document)
                    .findings.empty());
  }
}

}  // namespace
}  // namespace deprov::testing
