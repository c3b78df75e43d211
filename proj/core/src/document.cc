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

#include "deprov/document.h"

#include <algorithm>

#include "deprov/error.h"

namespace deprov {
namespace {

template <typename T>
std::vector<T> sorted(std::span<const T> items) {
  std::vector<T> copy(items.begin(), items.end());
  std::sort(copy.begin(), copy.end());
  return copy;
}

}  // namespace

void ProvDocument::declare_namespace(const std::string& prefix,
                                     const std::string& uri) {
  namespaces_.declare(prefix, uri);
  derive_namespace_membership();
}

void ProvDocument::require_resolvable(const QualifiedName& name) const {
  if (!namespaces_.contains(name.prefix())) {
    throw Error(ErrorCode::kUnresolvedPrefix,
                "prefix '" + name.prefix() + "' of " + name.str() +
                    " is not declared");
  }
}

void ProvDocument::add_element(Element element,
                               std::optional<QualifiedName> environment) {
  require_resolvable(element.id);
  for (const auto& [key, value] : element.attributes) {
    require_resolvable(key);
  }
  for (const Element* existing : lookup_all(element.id)) {
    if (existing->kind == element.kind && *existing != element) {
      throw Error(ErrorCode::kDuplicateId,
                  std::string(to_string(element.kind)) + " " +
                      element.id.str() +
                      " already declared with different content");
    }
  }
  if (environment) {
    if (this->environment(*environment) == nullptr) {
      throw Error(ErrorCode::kUnknownEnvironment,
                  "unknown environment " + environment->str());
    }
    if (is_namespace_mode(mode_)) {
      const DataEnvironment* owner = nullptr;
      if (auto uri = namespaces_.uri_of(element.id.prefix())) {
        owner = environment_by_uri(*uri);
      }
      if (owner == nullptr || owner->id != *environment) {
        throw Error(ErrorCode::kMembershipConflict,
                    element.id.str() + " is not in the namespace of " +
                        environment->str());
      }
    } else {
      auto current = environments_of(element.id);
      if (!current.empty() && current.front() != *environment) {
        throw Error(ErrorCode::kMembershipConflict,
                    element.id.str() + " already belongs to " +
                        current.front().str());
      }
    }
  }
  insert_element(std::move(element), std::move(environment));
}

void ProvDocument::add_relation(Relation relation) {
  require_resolvable(relation.subject);
  require_resolvable(relation.object);
  if (relation.id) require_resolvable(*relation.id);
  for (const auto& [key, value] : relation.attributes) {
    require_resolvable(key);
  }
  insert_relation(std::move(relation));
}

const Element* ProvDocument::lookup(const QualifiedName& id) const {
  auto it = element_index_.find(id);
  return it == element_index_.end() ? nullptr : &elements_[it->second.front()];
}

std::vector<const Element*> ProvDocument::lookup_all(
    const QualifiedName& id) const {
  std::vector<const Element*> found;
  auto it = element_index_.find(id);
  if (it == element_index_.end()) return found;
  for (std::size_t i : it->second) found.push_back(&elements_[i]);
  return found;
}

const Relation* ProvDocument::relation_by_id(const QualifiedName& id) const {
  auto it = relation_index_.find(id);
  return it == relation_index_.end() ? nullptr
                                     : &relations_[it->second.front()];
}

const DataEnvironment* ProvDocument::environment(
    const QualifiedName& id) const {
  auto it = environments_.find(id);
  return it == environments_.end() ? nullptr : &it->second;
}

std::vector<QualifiedName> ProvDocument::environments_of(
    const QualifiedName& element_id) const {
  std::vector<QualifiedName> owners;
  for (const auto& [id, env] : environments_) {
    if (env.members.contains(element_id)) owners.push_back(id);
  }
  return owners;
}

std::optional<QualifiedName> ProvDocument::environment_of(
    const QualifiedName& element_id) const {
  for (const auto& [id, env] : environments_) {
    if (env.members.contains(element_id)) return id;
  }
  return std::nullopt;
}

const DataEnvironment* ProvDocument::environment_by_uri(
    const std::string& uri) const {
  if (uri.empty()) return nullptr;
  for (const auto& [id, env] : environments_) {
    if (env.uri == uri) return &env;
  }
  return nullptr;
}

void ProvDocument::insert_element(Element element,
                                  std::optional<QualifiedName> environment) {
  QualifiedName id = element.id;
  std::vector<std::size_t>& same_id = element_index_[id];
  bool present =
      std::any_of(same_id.begin(), same_id.end(),
                  [&](std::size_t i) { return elements_[i] == element; });
  if (!present) {
    same_id.push_back(elements_.size());
    elements_.push_back(std::move(element));
  }
  if (is_namespace_mode(mode_)) {
    if (auto uri = namespaces_.uri_of(id.prefix())) {
      for (auto& [env_id, env] : environments_) {
        if (env.uri == *uri) {
          env.members.insert(id);
          break;
        }
      }
    }
  } else if (environment) {
    assign_member(*environment, id);
  }
}

void ProvDocument::insert_relation(Relation relation) {
  if (!relation_keys_.insert(relation).second) return;
  if (relation.id) relation_index_[*relation.id].push_back(relations_.size());
  relations_.push_back(std::move(relation));
}

void ProvDocument::insert_environment(DataEnvironment environment) {
  QualifiedName id = environment.id;
  environments_.insert_or_assign(id, std::move(environment));
  derive_namespace_membership();
}

DataEnvironment* ProvDocument::mutable_environment(const QualifiedName& id) {
  auto it = environments_.find(id);
  return it == environments_.end() ? nullptr : &it->second;
}

void ProvDocument::assign_member(const QualifiedName& environment,
                                 const QualifiedName& element_id) {
  auto it = environments_.find(environment);
  if (it == environments_.end()) {
    throw Error(ErrorCode::kUnknownEnvironment,
                "unknown environment " + environment.str());
  }
  it->second.members.insert(element_id);
}

void ProvDocument::insert_environment_relation(EnvironmentRelation relation) {
  for (EnvironmentRelation& existing : environment_relations_) {
    if (existing.kind == relation.kind &&
        existing.subject == relation.subject &&
        existing.object == relation.object) {
      merge_attributes(existing.attributes, relation.attributes);
      return;
    }
  }
  environment_relations_.push_back(std::move(relation));
}

void ProvDocument::insert_contract(Contract contract) {
  QualifiedName id = contract.id;
  contracts_.insert_or_assign(id, std::move(contract));
}

Contract* ProvDocument::mutable_contract(const QualifiedName& id) {
  auto it = contracts_.find(id);
  return it == contracts_.end() ? nullptr : &it->second;
}

void ProvDocument::insert_control(ControlRecord record) {
  if (std::find(controls_.begin(), controls_.end(), record) ==
      controls_.end()) {
    controls_.push_back(record);
  }
}

void ProvDocument::merge_annotation(const QualifiedName& relation_id,
                                    const Attributes& annotation) {
  if (annotation.empty()) return;
  merge_attributes(annotations_[relation_id], annotation);
}

void ProvDocument::derive_namespace_membership() {
  if (!is_namespace_mode(mode_)) return;
  for (auto& [id, env] : environments_) env.members.clear();
  for (const Element& element : elements_) {
    auto uri = namespaces_.uri_of(element.id.prefix());
    if (!uri) continue;
    for (auto& [id, env] : environments_) {
      if (!env.uri.empty() && env.uri == *uri) {
        env.members.insert(element.id);
        break;
      }
    }
  }
}

bool operator==(const ProvDocument& a, const ProvDocument& b) {
  return a.mode_ == b.mode_ && a.namespaces_ == b.namespaces_ &&
         a.environments_ == b.environments_ &&
         a.contracts_ == b.contracts_ && a.annotations_ == b.annotations_ &&
         sorted<Element>(a.elements_) == sorted<Element>(b.elements_) &&
         sorted<Relation>(a.relations_) == sorted<Relation>(b.relations_) &&
         sorted<EnvironmentRelation>(a.environment_relations_) ==
             sorted<EnvironmentRelation>(b.environment_relations_) &&
         sorted<ControlRecord>(a.controls_) ==
             sorted<ControlRecord>(b.controls_);
}

ProvDocument new_document(EncodingMode mode) { return ProvDocument(mode); }

}  // namespace deprov
