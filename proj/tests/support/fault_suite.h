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

#ifndef DEPROV_TESTS_SUPPORT_FAULT_SUITE_H_
#define DEPROV_TESTS_SUPPORT_FAULT_SUITE_H_

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "deprov/document.h"
#include "deprov/validation.h"

namespace deprov::testing {

// A fixture with one seeded fault of a known category.
struct Mutant {
  std::string name;
  Category category;
  std::function<ProvDocument()> build;
};

std::vector<Mutant> all_mutants();

inline void PrintTo(const Mutant& mutant, std::ostream* os) {
  *os << mutant.name;
}

}  // namespace deprov::testing

#endif  // DEPROV_TESTS_SUPPORT_FAULT_SUITE_H_
