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

// The two reference data situations, generated in any encoding mode.
//
// gond-nrds: a government data office shares national data with a
// research data service inside a university, which passes controlled
// extracts to two research labs; labs and the office publish into the open
// environment. Activities carry de:timeLabel t1..t7.
//
// clinical-trial: participating centres upload trial data to a data
// capture service, a pharmaceutical company extracts and shares it with a
// public health lab, which publishes.
//
// In plain bundle or namespace modes, features the mode cannot represent
// are left out and listed in the warnings.

#ifndef DEPROV_FIXTURES_H_
#define DEPROV_FIXTURES_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deprov/document.h"

namespace deprov {

enum class FixtureId { kGondNrds, kClinicalTrial };

inline constexpr FixtureId kAllFixtures[] = {FixtureId::kGondNrds,
                                             FixtureId::kClinicalTrial};

std::string_view to_string(FixtureId id);  // "gond-nrds", "clinical-trial"
std::optional<FixtureId> parse_fixture_id(std::string_view text);

struct FixtureBuild {
  ProvDocument document;
  std::vector<std::string> warnings;
};

FixtureBuild build_fixture(FixtureId id, EncodingMode mode);

// Shorthands for build_fixture(...).document.
ProvDocument gond_nrds_fixture(
    EncodingMode mode = EncodingMode::kBundlesPlus);
ProvDocument clinical_trial_fixture(
    EncodingMode mode = EncodingMode::kBundlesPlus);

}  // namespace deprov

#endif  // DEPROV_FIXTURES_H_
