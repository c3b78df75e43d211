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

#ifndef DEPROV_VALIDATION_H_
#define DEPROV_VALIDATION_H_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "deprov/document.h"

namespace deprov {

enum class Category {
  kUniqueness,
  kOrdering,
  kImpossibility,
  kTyping,
  kNesting,
};

inline constexpr Category kAllCategories[] = {
    Category::kUniqueness, Category::kOrdering, Category::kImpossibility,
    Category::kTyping, Category::kNesting};

enum class Severity { kError, kWarning };

std::string_view to_string(Category category);
std::string_view to_string(Severity severity);

struct Finding {
  Category category = Category::kUniqueness;
  Severity severity = Severity::kError;
  std::vector<std::string> subjects;
  std::string message;

  bool operator==(const Finding&) const = default;
};

struct ValidationReport {
  // Grouped by category in declaration order.
  std::vector<Finding> findings;
  // Statements the inference step added, elements first.
  std::vector<Statement> inferred;

  bool valid() const;
  std::size_t count(Category category) const;
  bool has(Category category) const { return count(category) != 0; }
};

/// Closes a document under the inference rules:
///  * an id used in a relation but never declared gets a placeholder
///    element whose kind follows from the relation's signature (entity
///    when only generic influences mention it);
///  * used(a2, e) with wasGeneratedBy(e, a1), a1 != a2, yields
///    wasInformedBy(a2, a1) unless that edge is already present.
/// Throws kAmbiguousKind when an undeclared id is used with two different
/// kinds. Environment ids are never given placeholders.
ProvDocument infer(const ProvDocument& doc);

/// Runs inference then every constraint check. Ambiguous kinds surface as
/// Typing findings instead of an exception.
ValidationReport validate(const ProvDocument& doc);

// The individual checks, on an already-inferred document.
std::vector<Finding> check_uniqueness(const ProvDocument& doc);
std::vector<Finding> check_ordering(const ProvDocument& doc);
std::vector<Finding> check_impossibility(const ProvDocument& doc);
std::vector<Finding> check_typing(const ProvDocument& doc);
std::vector<Finding> check_nesting(const ProvDocument& doc);

// {"valid": bool, "findings": [{"category", "severity", "subjects",
// "message"}], "inferred": [string]}
std::string report_to_json(const ValidationReport& report);
std::string report_to_text(const ValidationReport& report);

/// The environment forest with transitive content queries.
class EnvironmentTree {
 public:
  explicit EnvironmentTree(const ProvDocument& doc);

  const std::vector<QualifiedName>& roots() const { return roots_; }
  std::vector<QualifiedName> children(const QualifiedName& env) const;
  // Own members plus the content of every descendant.
  std::set<QualifiedName> content(const QualifiedName& env) const;
  // 0 for roots; cycles are cut at the first repeat.
  std::size_t depth(const QualifiedName& env) const;

 private:
  void collect(const QualifiedName& env, std::set<QualifiedName>& out,
               std::set<QualifiedName>& seen) const;

  const ProvDocument* doc_;
  std::vector<QualifiedName> roots_;
  std::map<QualifiedName, std::vector<QualifiedName>> children_;
};

}  // namespace deprov

#endif  // DEPROV_VALIDATION_H_
