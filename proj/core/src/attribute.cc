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

#include "deprov/attribute.h"

namespace deprov {

std::string AttributeValue::display() const {
  if (auto* s = as_string()) return *s;
  if (auto* n = as_integer()) return std::to_string(*n);
  return "'" + as_qualified_name()->str() + "'";
}

void merge_attributes(Attributes& target, const Attributes& update) {
  for (const auto& [key, value] : update) target.insert_or_assign(key, value);
}

std::optional<std::string> string_attribute(const Attributes& attributes,
                                            const QualifiedName& key) {
  auto it = attributes.find(key);
  if (it == attributes.end()) return std::nullopt;
  if (auto* s = it->second.as_string()) return *s;
  return std::nullopt;
}

}  // namespace deprov
