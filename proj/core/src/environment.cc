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

#include "deprov/environment.h"

#include <algorithm>
#include <cctype>

#include "deprov/error.h"

namespace deprov {

std::string_view to_string(EnvironmentRelationKind kind) {
  switch (kind) {
    case EnvironmentRelationKind::kContainedIn: return "containedIn";
    case EnvironmentRelationKind::kHostedBy: return "hostedBy";
    case EnvironmentRelationKind::kOwnedBy: return "ownedBy";
    case EnvironmentRelationKind::kManagedBy: return "managedBy";
    case EnvironmentRelationKind::kSharesDataWith: return "sharesDataWith";
  }
  return "hostedBy";
}

std::optional<EnvironmentRelationKind> parse_environment_relation_kind(
    std::string_view text) {
  for (auto kind : kAllEnvironmentRelationKinds) {
    if (to_string(kind) == text) return kind;
  }
  return std::nullopt;
}

std::string_view to_string(ControlType value) {
  return value == ControlType::kDirect ? "direct" : "indirect";
}
std::string_view to_string(ControlNature value) {
  return value == ControlNature::kStrategic ? "strategic" : "operational";
}
std::string_view to_string(Responsibility value) {
  return value == Responsibility::kDirect ? "direct" : "indirect";
}

std::optional<ControlType> parse_control_type(std::string_view text) {
  if (text == "direct") return ControlType::kDirect;
  if (text == "indirect") return ControlType::kIndirect;
  return std::nullopt;
}
std::optional<ControlNature> parse_control_nature(std::string_view text) {
  if (text == "strategic") return ControlNature::kStrategic;
  if (text == "operational") return ControlNature::kOperational;
  return std::nullopt;
}
std::optional<Responsibility> parse_responsibility(std::string_view text) {
  if (text == "direct") return Responsibility::kDirect;
  if (text == "indirect") return Responsibility::kIndirect;
  return std::nullopt;
}

namespace env_keys {
QualifiedName env_type() { return de_name("envType"); }
QualifiedName governance_access_type() {
  return de_name("governance-accessType");
}
QualifiedName governance_user_definition() {
  return de_name("governance-userdefinition");
}
QualifiedName infrastructure() { return de_name("infrastructure"); }
QualifiedName purpose() { return de_name("purpose"); }
QualifiedName meaning() { return de_name("meaning"); }
}  // namespace env_keys

// --- namespace path encoding ---

namespace {

bool bad_path_char(char c) {
  return c == '/' || c == '#' || c == '?' ||
         std::isspace(static_cast<unsigned char>(c));
}

// Index one past the '/' that closes "scheme://authority/".
std::size_t root_length(std::string_view uri) {
  auto scheme_end = uri.find("://");
  if (scheme_end == std::string_view::npos || scheme_end == 0 ||
      !is_absolute_uri(uri)) {
    throw Error(ErrorCode::kMalformedUri,
                "not a hierarchical absolute uri: " + std::string(uri));
  }
  auto slash = uri.find('/', scheme_end + 3);
  if (slash == std::string_view::npos || slash == scheme_end + 3) {
    throw Error(ErrorCode::kMalformedUri,
                "uri has no authority path root: " + std::string(uri));
  }
  return slash + 1;
}

}  // namespace

std::string environment_uri(std::string_view parent_uri,
                            std::string_view segment) {
  if (parent_uri.empty() || parent_uri.back() != '/' ||
      !is_absolute_uri(parent_uri)) {
    throw Error(ErrorCode::kMalformedUri,
                "environment uri must be absolute and end with '/': " +
                    std::string(parent_uri));
  }
  if (segment.empty() ||
      std::any_of(segment.begin(), segment.end(), bad_path_char)) {
    throw Error(ErrorCode::kMalformedSegment,
                "invalid environment path segment '" + std::string(segment) +
                    "'");
  }
  std::string uri(parent_uri);
  uri += segment;
  uri += '/';
  return uri;
}

std::string environment_root(std::string_view uri) {
  return std::string(uri.substr(0, root_length(uri)));
}

std::vector<std::string> split_environment_path(std::string_view uri) {
  std::size_t start = root_length(uri);
  if (uri.back() != '/') {
    throw Error(ErrorCode::kMalformedUri,
                "environment uri must end with '/': " + std::string(uri));
  }
  std::vector<std::string> segments;
  while (start < uri.size()) {
    auto end = uri.find('/', start);
    auto segment = uri.substr(start, end - start);
    if (segment.empty() ||
        std::any_of(segment.begin(), segment.end(), bad_path_char)) {
      throw Error(ErrorCode::kMalformedUri,
                  "empty or invalid path segment in " + std::string(uri));
    }
    segments.emplace_back(segment);
    start = end + 1;
  }
  return segments;
}

ElementUriParts split_element_uri(std::string_view uri) {
  if (!uri.empty() && uri.back() == '#') uri.remove_suffix(1);
  auto slash = uri.rfind('/');
  if (slash == std::string_view::npos || slash + 1 >= uri.size()) {
    throw Error(ErrorCode::kMalformedUri,
                "element uri has no local part: " + std::string(uri));
  }
  ElementUriParts parts;
  parts.environment_path = split_environment_path(uri.substr(0, slash + 1));
  parts.local = std::string(uri.substr(slash + 1));
  if (std::any_of(parts.local.begin(), parts.local.end(), bad_path_char)) {
    throw Error(ErrorCode::kMalformedUri,
                "invalid element local part in " + std::string(uri));
  }
  return parts;
}

void require_support(EncodingMode mode, Requirement requirement) {
  if (supports(mode, requirement)) return;
  ErrorCode code = ErrorCode::kUnsupported;
  switch (requirement) {
    case Requirement::kR2NestedEnvironments:
      code = ErrorCode::kNestingUnsupported;
      break;
    case Requirement::kR3EnvironmentAttributes:
      code = ErrorCode::kAttributesUnsupported;
      break;
    case Requirement::kR4EnvironmentRelationships:
      code = ErrorCode::kRelationUnsupported;
      break;
    case Requirement::kR5RelationAnnotation:
      code = ErrorCode::kAnnotationUnsupported;
      break;
    case Requirement::kR7Contracts:
      code = ErrorCode::kContractsUnsupported;
      break;
    default:
      break;
  }
  throw Error(code, std::string(code_of(requirement)) + " (" +
                        std::string(name_of(requirement)) +
                        ") is not supported in " +
                        std::string(to_string(mode)) + " mode");
}

// --- operations ---

namespace {

const DataEnvironment& require_environment(const ProvDocument& doc,
                                           const QualifiedName& id) {
  const DataEnvironment* env = doc.environment(id);
  if (env == nullptr) {
    throw Error(ErrorCode::kUnknownEnvironment,
                "unknown environment " + id.str());
  }
  return *env;
}

void require_resolvable_keys(const ProvDocument& doc,
                             const Attributes& attributes) {
  for (const auto& [key, value] : attributes) doc.require_resolvable(key);
}

}  // namespace

void create_environment(ProvDocument& doc, const QualifiedName& id,
                        const Attributes& attributes,
                        std::optional<QualifiedName> parent) {
  if (parent) require_support(doc.mode(), Requirement::kR2NestedEnvironments);
  if (!attributes.empty()) {
    require_support(doc.mode(), Requirement::kR3EnvironmentAttributes);
  }
  if (parent) {
    if (*parent == id) {
      throw Error(ErrorCode::kCycleError,
                  "environment " + id.str() + " cannot contain itself");
    }
    for (const auto& ancestor : ancestors_of(doc, *parent)) {
      if (ancestor == id) {
        throw Error(ErrorCode::kCycleError,
                    "nesting " + id.str() + " under " + parent->str() +
                        " would create a containment cycle");
      }
    }
  }
  if (doc.environment(id) != nullptr) {
    throw Error(ErrorCode::kDuplicateId,
                "environment " + id.str() + " already exists");
  }
  doc.require_resolvable(id);
  require_resolvable_keys(doc, attributes);

  DataEnvironment env;
  env.id = id;
  env.attributes = attributes;
  env.parent = parent;
  if (parent) require_environment(doc, *parent);

  if (is_namespace_mode(doc.mode())) {
    std::string base = parent ? require_environment(doc, *parent).uri
                              : *doc.namespaces().uri_of(id.prefix());
    env.uri = environment_uri(base, id.local());
    if (const DataEnvironment* clash = doc.environment_by_uri(env.uri)) {
      throw Error(ErrorCode::kDuplicateId,
                  "uri <" + env.uri + "> already names environment " +
                      clash->id.str());
    }
  }
  doc.insert_environment(std::move(env));
}

void attach_environment_attributes(ProvDocument& doc,
                                   const QualifiedName& environment,
                                   const Attributes& attributes) {
  require_support(doc.mode(), Requirement::kR3EnvironmentAttributes);
  require_environment(doc, environment);
  require_resolvable_keys(doc, attributes);
  if (attributes.empty()) return;
  merge_attributes(doc.mutable_environment(environment)->attributes,
                   attributes);
}

void relate_environments(ProvDocument& doc, EnvironmentRelationKind kind,
                         const QualifiedName& subject,
                         const QualifiedName& object,
                         const Attributes& attributes) {
  require_support(doc.mode(), Requirement::kR4EnvironmentRelationships);
  if (subject == object) {
    throw Error(ErrorCode::kSelfRelation,
                std::string(to_string(kind)) + " cannot relate " +
                    subject.str() + " to itself");
  }
  const DataEnvironment& env = require_environment(doc, subject);
  require_environment(doc, object);
  require_resolvable_keys(doc, attributes);
  if (kind == EnvironmentRelationKind::kContainedIn) {
    if (env.parent != object) {
      throw Error(ErrorCode::kContainmentMismatch,
                  "containedIn(" + subject.str() + ", " + object.str() +
                      ") disagrees with the environment forest");
    }
    return;
  }
  doc.insert_environment_relation({kind, subject, object, attributes});
}

namespace {

bool lies_within_parties(const ProvDocument& doc, const QualifiedName& node,
                         const std::set<QualifiedName>& parties) {
  std::vector<QualifiedName> owners = doc.environments_of(node);
  if (doc.environment(node) != nullptr) owners.push_back(node);
  for (const auto& owner : owners) {
    for (const auto& party : parties) {
      if (is_within(doc, owner, party)) return true;
    }
  }
  return false;
}

void check_governed_flow(const ProvDocument& doc, const QualifiedName& id,
                         const std::set<QualifiedName>& parties,
                         const QualifiedName& relation_id) {
  const Relation* relation = doc.relation_by_id(relation_id);
  if (relation == nullptr) {
    throw Error(ErrorCode::kUnknownRelation,
                "contract " + id.str() + " references unknown relation " +
                    relation_id.str());
  }
  if (!lies_within_parties(doc, relation->subject, parties) ||
      !lies_within_parties(doc, relation->object, parties)) {
    throw Error(ErrorCode::kInvalidContract,
                "flow " + relation_id.str() +
                    " has an endpoint outside the parties of contract " +
                    id.str());
  }
}

}  // namespace

void record_contract(ProvDocument& doc, const QualifiedName& id,
                     const std::set<QualifiedName>& parties,
                     const Attributes& terms,
                     const std::set<QualifiedName>& governs_flows) {
  require_support(doc.mode(), Requirement::kR7Contracts);
  if (parties.size() < 2) {
    throw Error(ErrorCode::kInvalidContract,
                "contract " + id.str() + " needs at least two parties");
  }
  doc.require_resolvable(id);
  for (const auto& party : parties) require_environment(doc, party);
  require_resolvable_keys(doc, terms);
  for (const auto& flow : governs_flows) {
    check_governed_flow(doc, id, parties, flow);
  }
  Contract contract{id, parties, terms, governs_flows};
  if (const auto it = doc.contracts().find(id); it != doc.contracts().end()) {
    if (it->second == contract) return;
    throw Error(ErrorCode::kDuplicateId,
                "contract " + id.str() + " already recorded differently");
  }
  doc.insert_contract(std::move(contract));
}

void link_contract_flow(ProvDocument& doc, const QualifiedName& contract,
                        const QualifiedName& relation) {
  require_support(doc.mode(), Requirement::kR7Contracts);
  Contract* stored = doc.mutable_contract(contract);
  if (stored == nullptr) {
    throw Error(ErrorCode::kUnknownNode, "unknown contract " + contract.str());
  }
  check_governed_flow(doc, contract, stored->parties, relation);
  stored->governs_flows.insert(relation);
}

void record_control(ProvDocument& doc, const ControlRecord& record) {
  require_support(doc.mode(), Requirement::kR8AccessAndControl);
  if (record.holder == record.target) {
    throw Error(ErrorCode::kSelfRelation,
                "control holder and target are both " + record.holder.str());
  }
  require_environment(doc, record.target);
  bool holder_is_agent = false;
  for (const Element* element : doc.lookup_all(record.holder)) {
    holder_is_agent |= element->kind == ElementKind::kAgent;
  }
  if (doc.environment(record.holder) == nullptr && !holder_is_agent) {
    throw Error(ErrorCode::kUnknownNode,
                "control holder " + record.holder.str() +
                    " is neither an environment nor an agent");
  }
  for (const ControlRecord& existing : doc.controls()) {
    if (existing.holder == record.holder &&
        existing.target == record.target) {
      if (existing == record) return;
      throw Error(ErrorCode::kDuplicateControlRecord,
                  "control of " + record.holder.str() + " over " +
                      record.target.str() + " is already recorded");
    }
  }
  doc.insert_control(record);
}

void annotate_relation(ProvDocument& doc, const QualifiedName& relation_id,
                       const Attributes& annotation) {
  require_support(doc.mode(), Requirement::kR5RelationAnnotation);
  if (doc.relation_by_id(relation_id) == nullptr) {
    throw Error(ErrorCode::kUnknownRelation,
                "no relation with id " + relation_id.str());
  }
  require_resolvable_keys(doc, annotation);
  doc.merge_annotation(relation_id, annotation);
}

// --- forest queries ---

std::vector<QualifiedName> ancestors_of(const ProvDocument& doc,
                                        const QualifiedName& environment) {
  std::vector<QualifiedName> chain;
  const DataEnvironment* current = doc.environment(environment);
  while (current != nullptr && current->parent) {
    const QualifiedName& parent = *current->parent;
    if (parent == environment ||
        std::find(chain.begin(), chain.end(), parent) != chain.end()) {
      break;
    }
    const DataEnvironment* next = doc.environment(parent);
    if (next == nullptr) break;
    chain.push_back(parent);
    current = next;
  }
  return chain;
}

std::vector<QualifiedName> children_of(const ProvDocument& doc,
                                       const QualifiedName& environment) {
  std::vector<QualifiedName> children;
  for (const auto& [id, env] : doc.environments()) {
    if (env.parent == environment) children.push_back(id);
  }
  return children;
}

std::vector<QualifiedName> root_environments(const ProvDocument& doc) {
  std::vector<QualifiedName> roots;
  for (const auto& [id, env] : doc.environments()) {
    if (!env.parent || doc.environment(*env.parent) == nullptr) {
      roots.push_back(id);
    }
  }
  return roots;
}

bool is_within(const ProvDocument& doc, const QualifiedName& environment,
               const QualifiedName& ancestor) {
  if (environment == ancestor) return true;
  auto chain = ancestors_of(doc, environment);
  return std::find(chain.begin(), chain.end(), ancestor) != chain.end();
}

}  // namespace deprov
