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

#ifndef DEPROV_MODEL_H_
#define DEPROV_MODEL_H_

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "deprov/attribute.h"
#include "deprov/qualified_name.h"

namespace deprov {

enum class ElementKind { kEntity, kActivity, kAgent };

enum class RelationKind {
  kWasGeneratedBy,
  kUsed,
  kWasInformedBy,
  kWasAssociatedWith,
  kActedOnBehalfOf,
  kWasDerivedFrom,
  kWasAttributedTo,
  // Generic influence; carries the flattened encoding of environment
  // structure (see flatten.h).
  kWasInfluencedBy,
};

inline constexpr RelationKind kAllRelationKinds[] = {
    RelationKind::kWasGeneratedBy,   RelationKind::kUsed,
    RelationKind::kWasInformedBy,    RelationKind::kWasAssociatedWith,
    RelationKind::kActedOnBehalfOf,  RelationKind::kWasDerivedFrom,
    RelationKind::kWasAttributedTo,  RelationKind::kWasInfluencedBy,
};

std::string_view to_string(ElementKind kind);
std::optional<ElementKind> parse_element_kind(std::string_view text);

std::string_view to_string(RelationKind kind);
std::optional<RelationKind> parse_relation_kind(std::string_view text);
// Throws Error(kUnknownRelationKind).
RelationKind require_relation_kind(std::string_view text);

/// Endpoint kinds a relation expects; nullopt accepts any kind.
struct RelationSignature {
  std::optional<ElementKind> subject;
  std::optional<ElementKind> object;
};
RelationSignature signature_of(RelationKind kind);

struct Element {
  ElementKind kind = ElementKind::kEntity;
  QualifiedName id;
  Attributes attributes;
  // Activities only; xsd:dateTime lexical form.
  std::optional<std::string> start_time;
  std::optional<std::string> end_time;

  // Ordering groups entities, activities, agents and sorts by id within each.
  auto operator<=>(const Element&) const = default;
};

struct Relation {
  RelationKind kind = RelationKind::kUsed;
  QualifiedName subject;
  QualifiedName object;
  std::optional<QualifiedName> id;
  Attributes attributes;

  auto operator<=>(const Relation&) const = default;
};

using Statement = std::variant<Element, Relation>;

// One-line PROV-N style rendering used in reports.
std::string describe(const Element& element);
std::string describe(const Relation& relation);
std::string describe(const Statement& statement);

// Attribute keys shared across modules.
QualifiedName time_label_key();  // de:timeLabel

}  // namespace deprov

#endif  // DEPROV_MODEL_H_
