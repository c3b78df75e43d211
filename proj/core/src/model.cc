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

#include "deprov/model.h"

#include "deprov/error.h"

namespace deprov {

std::string_view to_string(ElementKind kind) {
  switch (kind) {
    case ElementKind::kEntity: return "entity";
    case ElementKind::kActivity: return "activity";
    case ElementKind::kAgent: return "agent";
  }
  return "entity";
}

std::optional<ElementKind> parse_element_kind(std::string_view text) {
  if (text == "entity") return ElementKind::kEntity;
  if (text == "activity") return ElementKind::kActivity;
  if (text == "agent") return ElementKind::kAgent;
  return std::nullopt;
}

std::string_view to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::kWasGeneratedBy: return "wasGeneratedBy";
    case RelationKind::kUsed: return "used";
    case RelationKind::kWasInformedBy: return "wasInformedBy";
    case RelationKind::kWasAssociatedWith: return "wasAssociatedWith";
    case RelationKind::kActedOnBehalfOf: return "actedOnBehalfOf";
    case RelationKind::kWasDerivedFrom: return "wasDerivedFrom";
    case RelationKind::kWasAttributedTo: return "wasAttributedTo";
    case RelationKind::kWasInfluencedBy: return "wasInfluencedBy";
  }
  return "used";
}

std::optional<RelationKind> parse_relation_kind(std::string_view text) {
  for (RelationKind kind : kAllRelationKinds) {
    if (to_string(kind) == text) return kind;
  }
  return std::nullopt;
}

RelationKind require_relation_kind(std::string_view text) {
  auto kind = parse_relation_kind(text);
  if (!kind) {
    throw Error(ErrorCode::kUnknownRelationKind,
                "unknown relation kind '" + std::string(text) + "'");
  }
  return *kind;
}

RelationSignature signature_of(RelationKind kind) {
  using K = ElementKind;
  switch (kind) {
    case RelationKind::kWasGeneratedBy: return {K::kEntity, K::kActivity};
    case RelationKind::kUsed: return {K::kActivity, K::kEntity};
    case RelationKind::kWasInformedBy: return {K::kActivity, K::kActivity};
    case RelationKind::kWasAssociatedWith: return {K::kActivity, K::kAgent};
    case RelationKind::kActedOnBehalfOf: return {K::kAgent, K::kAgent};
    case RelationKind::kWasDerivedFrom: return {K::kEntity, K::kEntity};
    case RelationKind::kWasAttributedTo: return {K::kEntity, K::kAgent};
    case RelationKind::kWasInfluencedBy: return {std::nullopt, std::nullopt};
  }
  return {};
}

namespace {

std::string describe_attributes(const Attributes& attributes) {
  if (attributes.empty()) return "";
  std::string out = ", [";
  bool first = true;
  for (const auto& [key, value] : attributes) {
    if (!first) out += ", ";
    first = false;
    out += key.str() + "=";
    out += value.is_string() ? "\"" + value.display() + "\"" : value.display();
  }
  return out + "]";
}

}  // namespace

std::string describe(const Element& element) {
  std::string out = std::string(to_string(element.kind)) + "(" +
                    element.id.str();
  if (element.start_time || element.end_time) {
    out += ", " + element.start_time.value_or("-") + ", " +
           element.end_time.value_or("-");
  }
  return out + describe_attributes(element.attributes) + ")";
}

std::string describe(const Relation& relation) {
  std::string out = std::string(to_string(relation.kind)) + "(";
  if (relation.id) out += relation.id->str() + "; ";
  out += relation.subject.str() + ", " + relation.object.str();
  return out + describe_attributes(relation.attributes) + ")";
}

std::string describe(const Statement& statement) {
  return std::visit([](const auto& s) { return describe(s); }, statement);
}

QualifiedName time_label_key() { return de_name("timeLabel"); }

}  // namespace deprov
