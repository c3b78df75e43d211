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

#ifndef DEPROV_DOCUMENT_H_
#define DEPROV_DOCUMENT_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "deprov/environment_types.h"
#include "deprov/model.h"
#include "deprov/qualified_name.h"
#include "deprov/requirements.h"

namespace deprov {

/// A provenance document: namespace table, element and relation
/// statements, and the environment forest with its governance records.
///
/// A ProvDocument is a value. Build it through the mutating members (or
/// the environment operations in environment.h) while exclusively owned,
/// then share it as const; all queries are const and thread-compatible.
///
/// Statement collections keep insertion order for stable iteration, but
/// equality is structural and ignores that order.
///
/// Two insertion tiers exist. The checked operations (`add_element`,
/// environment.h) enforce referential and mode rules. The `insert_*`
/// members only merge identical statements; parsers in lenient mode and
/// fault-injection tests use them to build documents the validator can
/// then report on.
class ProvDocument {
 public:
  explicit ProvDocument(EncodingMode mode = EncodingMode::kBundlesPlus)
      : mode_(mode) {}

  EncodingMode mode() const { return mode_; }
  // Replaces the mode marker without re-checking stored content.
  void force_mode(EncodingMode mode) { mode_ = mode; }

  // --- namespaces ---
  const NamespaceTable& namespaces() const { return namespaces_; }
  void declare_namespace(const std::string& prefix, const std::string& uri);
  std::optional<std::string> resolve(const QualifiedName& name) const {
    return namespaces_.resolve(name);
  }
  // Throws kUnresolvedPrefix.
  void require_resolvable(const QualifiedName& name) const;

  // --- elements and relations ---

  // Adds an element, optionally as a member of `environment`. Identical
  // re-insertion is a no-op. Throws kDuplicateId when an element with the
  // same id and kind but different content exists. In namespace encodings
  // membership follows the id's namespace and `environment`, if given, must
  // agree with it (kMembershipConflict otherwise).
  void add_element(Element element,
                   std::optional<QualifiedName> environment = std::nullopt);
  // Endpoints need not exist yet; inference may introduce them.
  void add_relation(Relation relation);

  // First element with this id, or nullptr.
  const Element* lookup(const QualifiedName& id) const;
  std::vector<const Element*> lookup_all(const QualifiedName& id) const;
  const Relation* relation_by_id(const QualifiedName& id) const;

  std::span<const Element> elements() const { return elements_; }
  std::span<const Relation> relations() const { return relations_; }

  // --- environments ---
  const std::map<QualifiedName, DataEnvironment>& environments() const {
    return environments_;
  }
  const DataEnvironment* environment(const QualifiedName& id) const;
  // Environments whose member set contains `element_id`, sorted by id.
  std::vector<QualifiedName> environments_of(
      const QualifiedName& element_id) const;
  std::optional<QualifiedName> environment_of(
      const QualifiedName& element_id) const;
  const DataEnvironment* environment_by_uri(const std::string& uri) const;

  std::span<const EnvironmentRelation> environment_relations() const {
    return environment_relations_;
  }
  const std::map<QualifiedName, Contract>& contracts() const {
    return contracts_;
  }
  std::span<const ControlRecord> controls() const { return controls_; }
  const std::map<QualifiedName, Attributes>& annotations() const {
    return annotations_;
  }

  // --- raw insertion (no mode or referential checks) ---
  void insert_element(Element element,
                      std::optional<QualifiedName> environment = std::nullopt);
  void insert_relation(Relation relation);
  // Replaces any environment with the same id.
  void insert_environment(DataEnvironment environment);
  DataEnvironment* mutable_environment(const QualifiedName& id);
  void assign_member(const QualifiedName& environment,
                     const QualifiedName& element_id);
  // Same (kind, subject, object) merges attributes.
  void insert_environment_relation(EnvironmentRelation relation);
  void insert_contract(Contract contract);
  Contract* mutable_contract(const QualifiedName& id);
  void insert_control(ControlRecord record);
  void merge_annotation(const QualifiedName& relation_id,
                        const Attributes& annotation);

  // Namespace encodings: recomputes every environment's member set from the
  // namespace of each element id. No-op in bundle encodings.
  void derive_namespace_membership();

  friend bool operator==(const ProvDocument& a, const ProvDocument& b);

 private:
  EncodingMode mode_;
  NamespaceTable namespaces_;
  std::vector<Element> elements_;
  std::vector<Relation> relations_;
  // Lookup indexes over elements_ and relations_ (positions).
  std::map<QualifiedName, std::vector<std::size_t>> element_index_;
  std::map<QualifiedName, std::vector<std::size_t>> relation_index_;
  std::set<Relation> relation_keys_;
  std::map<QualifiedName, DataEnvironment> environments_;
  std::vector<EnvironmentRelation> environment_relations_;
  std::map<QualifiedName, Contract> contracts_;
  std::vector<ControlRecord> controls_;
  std::map<QualifiedName, Attributes> annotations_;
};

/// Creates an empty document in the given encoding mode.
ProvDocument new_document(EncodingMode mode);

}  // namespace deprov

#endif  // DEPROV_DOCUMENT_H_
