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

#ifndef DEPROV_REQUIREMENTS_H_
#define DEPROV_REQUIREMENTS_H_

#include <array>
#include <optional>
#include <string_view>

namespace deprov {

/// How data environments are encoded on top of PROV.
///
///   kBundle        plain PROV bundles, one per environment, no nesting
///   kNamespace     plain namespaces, environments are URI path prefixes
///   kNamespacesPlus namespaces plus a sidecar carrying attributes,
///                  environment relations, contracts and annotations
///   kBundlesPlus   bundles extended with nesting and header attributes
enum class EncodingMode { kBundle, kNamespace, kNamespacesPlus, kBundlesPlus };

// Column order of the support matrix.
inline constexpr std::array<EncodingMode, 4> kAllModes = {
    EncodingMode::kBundle, EncodingMode::kNamespace,
    EncodingMode::kNamespacesPlus, EncodingMode::kBundlesPlus};

// "bundle", "namespace", "namespaces+", "bundles+".
std::string_view to_string(EncodingMode mode);
std::optional<EncodingMode> parse_encoding_mode(std::string_view text);
// Column heading used in the support matrix ("Namespace+", ...).
std::string_view display_name(EncodingMode mode);

bool is_namespace_mode(EncodingMode mode);
bool is_bundle_mode(EncodingMode mode);

/// The eight representational requirements for data environments.
enum class Requirement {
  kR1EnvironmentConstruct,
  kR2NestedEnvironments,
  kR3EnvironmentAttributes,
  kR4EnvironmentRelationships,
  kR5RelationAnnotation,
  kR6AgentsDataProcesses,
  kR7Contracts,
  kR8AccessAndControl,
};

inline constexpr std::array<Requirement, 8> kAllRequirements = {
    Requirement::kR1EnvironmentConstruct,
    Requirement::kR2NestedEnvironments,
    Requirement::kR3EnvironmentAttributes,
    Requirement::kR4EnvironmentRelationships,
    Requirement::kR5RelationAnnotation,
    Requirement::kR6AgentsDataProcesses,
    Requirement::kR7Contracts,
    Requirement::kR8AccessAndControl};

std::string_view code_of(Requirement requirement);  // "R1".."R8"
std::string_view name_of(Requirement requirement);
std::optional<Requirement> parse_requirement(std::string_view code);

/// Constant support table: whether an encoding mode can represent a
/// requirement. The environment operations gate on this table.
bool supports(EncodingMode mode, Requirement requirement);

}  // namespace deprov

#endif  // DEPROV_REQUIREMENTS_H_
