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

#ifndef DEPROV_ENVIRONMENT_TYPES_H_
#define DEPROV_ENVIRONMENT_TYPES_H_

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "deprov/attribute.h"
#include "deprov/qualified_name.h"

namespace deprov {

/// A bounded context holding data, agents and processes. In bundle
/// encodings the id doubles as the bundle id; in namespace encodings `uri`
/// holds the path-form namespace ("http://host/a/b/").
struct DataEnvironment {
  QualifiedName id;
  std::string uri;
  Attributes attributes;
  std::optional<QualifiedName> parent;
  std::set<QualifiedName> members;

  bool operator==(const DataEnvironment&) const = default;
};

enum class EnvironmentRelationKind {
  kContainedIn,
  kHostedBy,
  kOwnedBy,
  kManagedBy,
  kSharesDataWith,
};

inline constexpr EnvironmentRelationKind kAllEnvironmentRelationKinds[] = {
    EnvironmentRelationKind::kContainedIn, EnvironmentRelationKind::kHostedBy,
    EnvironmentRelationKind::kOwnedBy, EnvironmentRelationKind::kManagedBy,
    EnvironmentRelationKind::kSharesDataWith};

std::string_view to_string(EnvironmentRelationKind kind);
std::optional<EnvironmentRelationKind> parse_environment_relation_kind(
    std::string_view text);

struct EnvironmentRelation {
  EnvironmentRelationKind kind = EnvironmentRelationKind::kHostedBy;
  QualifiedName subject;
  QualifiedName object;
  Attributes attributes;

  auto operator<=>(const EnvironmentRelation&) const = default;
};

/// A governance instrument (typically a data sharing agreement) between two
/// or more environments, optionally linked to the flows it governs.
struct Contract {
  QualifiedName id;
  std::set<QualifiedName> parties;
  Attributes terms;
  std::set<QualifiedName> governs_flows;  // relation ids

  bool operator==(const Contract&) const = default;
};

enum class ControlType { kDirect, kIndirect };
enum class ControlNature { kStrategic, kOperational };
enum class Responsibility { kDirect, kIndirect };

std::string_view to_string(ControlType value);
std::string_view to_string(ControlNature value);
std::string_view to_string(Responsibility value);
std::optional<ControlType> parse_control_type(std::string_view text);
std::optional<ControlNature> parse_control_nature(std::string_view text);
std::optional<Responsibility> parse_responsibility(std::string_view text);

/// Who holds control over (and responsibility for) releases from an
/// environment. The holder is an environment or an agent.
struct ControlRecord {
  QualifiedName holder;
  QualifiedName target;
  ControlType control_type = ControlType::kDirect;
  ControlNature control_nature = ControlNature::kOperational;
  Responsibility responsibility = Responsibility::kDirect;

  auto operator<=>(const ControlRecord&) const = default;
};

struct AnnotatedRelation {
  QualifiedName base;
  Attributes annotation;

  bool operator==(const AnnotatedRelation&) const = default;
};

// Reserved environment attribute keys.
namespace env_keys {
QualifiedName env_type();                  // de:envType
QualifiedName governance_access_type();    // de:governance-accessType
QualifiedName governance_user_definition();// de:governance-userdefinition
QualifiedName infrastructure();            // de:infrastructure
QualifiedName purpose();                   // de:purpose
QualifiedName meaning();                   // de:meaning (relation annotation)
}  // namespace env_keys

}  // namespace deprov

#endif  // DEPROV_ENVIRONMENT_TYPES_H_
