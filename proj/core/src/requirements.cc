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

#include "deprov/requirements.h"

#include <cstddef>

namespace deprov {
namespace {

// Rows R1..R8; columns Bundle, Namespace, Namespace+, Bundles+.
constexpr bool kSupport[8][4] = {
    {true, true, true, true},     // environment construct
    {false, true, true, true},    // environments within environments
    {false, false, true, true},   // attributes on environments
    {true, false, true, true},    // relationships between environments
    {false, false, true, true},   // annotation of relational constructs
    {true, true, true, true},     // agents, data and processes
    {false, false, true, true},   // contracts
    {true, true, true, true},     // access and control
};

std::size_t column_of(EncodingMode mode) {
  switch (mode) {
    case EncodingMode::kBundle: return 0;
    case EncodingMode::kNamespace: return 1;
    case EncodingMode::kNamespacesPlus: return 2;
    case EncodingMode::kBundlesPlus: return 3;
  }
  return 0;
}

}  // namespace

std::string_view to_string(EncodingMode mode) {
  switch (mode) {
    case EncodingMode::kBundle: return "bundle";
    case EncodingMode::kNamespace: return "namespace";
    case EncodingMode::kNamespacesPlus: return "namespaces+";
    case EncodingMode::kBundlesPlus: return "bundles+";
  }
  return "bundle";
}

std::optional<EncodingMode> parse_encoding_mode(std::string_view text) {
  for (EncodingMode mode : kAllModes) {
    if (to_string(mode) == text) return mode;
  }
  return std::nullopt;
}

std::string_view display_name(EncodingMode mode) {
  switch (mode) {
    case EncodingMode::kBundle: return "Bundle";
    case EncodingMode::kNamespace: return "Namespace";
    case EncodingMode::kNamespacesPlus: return "Namespace+";
    case EncodingMode::kBundlesPlus: return "Bundles+";
  }
  return "Bundle";
}

bool is_namespace_mode(EncodingMode mode) {
  return mode == EncodingMode::kNamespace ||
         mode == EncodingMode::kNamespacesPlus;
}

bool is_bundle_mode(EncodingMode mode) { return !is_namespace_mode(mode); }

std::string_view code_of(Requirement requirement) {
  constexpr std::string_view kCodes[] = {"R1", "R2", "R3", "R4",
                                         "R5", "R6", "R7", "R8"};
  return kCodes[static_cast<std::size_t>(requirement)];
}

std::string_view name_of(Requirement requirement) {
  switch (requirement) {
    case Requirement::kR1EnvironmentConstruct:
      return "The data environment construct";
    case Requirement::kR2NestedEnvironments:
      return "Data environments within data environments";
    case Requirement::kR3EnvironmentAttributes:
      return "Attaching attributes to data environments";
    case Requirement::kR4EnvironmentRelationships:
      return "Relationships between data environments";
    case Requirement::kR5RelationAnnotation:
      return "Annotation of relational constructs";
    case Requirement::kR6AgentsDataProcesses:
      return "Representation of agents, data and processes within a data "
             "environment";
    case Requirement::kR7Contracts:
      return "Data governance instruments: contracts";
    case Requirement::kR8AccessAndControl:
      return "Access and control (direct and indirect)";
  }
  return "";
}

std::optional<Requirement> parse_requirement(std::string_view code) {
  for (Requirement r : kAllRequirements) {
    if (code_of(r) == code) return r;
  }
  return std::nullopt;
}

bool supports(EncodingMode mode, Requirement requirement) {
  return kSupport[static_cast<std::size_t>(requirement)][column_of(mode)];
}

}  // namespace deprov
