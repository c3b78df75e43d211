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

// Provenance chaining across environments, control queries and the
// requirement/encoding support assessment.

#ifndef DEPROV_REASONING_H_
#define DEPROV_REASONING_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "deprov/document.h"

namespace deprov {

/// One data-flow step. Edges point in the direction data moves:
///   wasGeneratedBy(e, a)   a -> e
///   used(a, e)             e -> a
///   wasDerivedFrom(e2, e1) e1 -> e2
///   wasInformedBy(a2, a1)  a1 -> a2
///   sharesDataWith(A, B)   A -> B   (environment nodes)
struct FlowEdge {
  QualifiedName from;
  QualifiedName to;
  std::string kind;
  std::optional<QualifiedName> relation_id;

  auto operator<=>(const FlowEdge&) const = default;
};

std::vector<FlowEdge> flow_edges(const ProvDocument& doc);

struct ReachedNode {
  QualifiedName id;
  // Innermost environment holding the node; an environment node is its
  // own environment.
  std::optional<QualifiedName> environment;
  std::size_t hops = 0;

  bool operator==(const ReachedNode&) const = default;
};

struct Crossing {
  FlowEdge edge;
  std::optional<QualifiedName> from_environment;
  std::optional<QualifiedName> to_environment;
  std::set<QualifiedName> contracts;  // contracts governing the edge

  bool operator==(const Crossing&) const = default;
};

struct ChainResult {
  QualifiedName origin;
  std::vector<ReachedNode> reached;  // breadth-first order, origin first
  std::vector<Crossing> crossings;
  std::set<QualifiedName> contracts;

  bool contains(const QualifiedName& id) const;
  std::optional<std::size_t> hops_to(const QualifiedName& id) const;
};

// Everything downstream of `origin`. Throws kUnknownNode when origin is
// neither an element nor an environment.
ChainResult forward_chain(const ProvDocument& doc,
                          const QualifiedName& origin);
// Everything upstream of `origin`.
ChainResult backward_chain(const ProvDocument& doc,
                           const QualifiedName& origin);

std::string chain_to_json(const ChainResult& chain);

struct ControllerEntry {
  ControlRecord record;
  bool transitive = false;            // inherited from an ancestor
  std::optional<QualifiedName> via;   // the ancestor it was inherited from

  bool operator==(const ControllerEntry&) const = default;
};

// Control records over `environment`, then those over its ancestors
// (nearest first). Throws kUnknownEnvironment.
std::vector<ControllerEntry> controllers_of(const ProvDocument& doc,
                                            const QualifiedName& environment);
std::string controllers_to_json(const QualifiedName& environment,
                                const std::vector<ControllerEntry>& entries);

// --- requirement support ---

std::string support_matrix_text();
std::string support_matrix_json();

struct RequirementUse {
  Requirement requirement;
  bool exercised = false;
  bool supported = false;
};

struct Assessment {
  EncodingMode mode = EncodingMode::kBundlesPlus;
  std::vector<RequirementUse> rows;  // R1..R8
  // One line per requirement that is exercised but not supported.
  std::vector<std::string> problems;

  bool adequate() const { return problems.empty(); }
};

Assessment assess_document(const ProvDocument& doc);
std::string assessment_to_text(const Assessment& assessment);
std::string assessment_to_json(const Assessment& assessment);

// --- encoding comparison ---

struct EnvironmentNode {
  std::optional<QualifiedName> parent;
  Attributes attributes;
  std::set<QualifiedName> members;

  bool operator==(const EnvironmentNode&) const = default;
};

/// The environment structure of a document with encoding details (uris)
/// abstracted away.
struct EnvironmentGraph {
  std::map<QualifiedName, EnvironmentNode> nodes;
  std::vector<EnvironmentRelation> relations;  // sorted
  std::map<QualifiedName, Contract> contracts;
  std::vector<ControlRecord> controls;  // sorted
  std::map<QualifiedName, Attributes> annotations;

  bool operator==(const EnvironmentGraph&) const = default;
};

EnvironmentGraph environment_graph(const ProvDocument& doc);

// Same namespaces, statements and environment graph, regardless of mode.
bool equivalent_content(const ProvDocument& a, const ProvDocument& b);

}  // namespace deprov

#endif  // DEPROV_REASONING_H_
