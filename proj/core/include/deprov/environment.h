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

// Data environments on top of PROV documents.
//
// Every operation here is gated by the document's encoding mode using the
// constant support table in requirements.h: a feature the mode cannot
// represent fails with the matching typed "unsupported" error before any
// other check runs.

#ifndef DEPROV_ENVIRONMENT_H_
#define DEPROV_ENVIRONMENT_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "deprov/document.h"
#include "deprov/environment_types.h"

namespace deprov {

// --- namespace path encoding ---

// parent_uri + segment + "/". Throws kMalformedUri when parent_uri does not
// end in '/', kMalformedSegment for an empty segment or one containing
// '/', '#', '?' or whitespace.
std::string environment_uri(std::string_view parent_uri,
                            std::string_view segment);

// "http://global-env.com/bu/nrds/" -> {"bu", "nrds"}. The root
// "scheme://authority/" yields no segments. Throws kMalformedUri.
std::vector<std::string> split_environment_path(std::string_view uri);

// "scheme://authority/".
std::string environment_root(std::string_view uri);

struct ElementUriParts {
  std::vector<std::string> environment_path;
  std::string local;
};
// "http://global-env.com/gond/entity_001#" -> {{"gond"}, "entity_001"}.
// A single trailing '#' is accepted and dropped.
ElementUriParts split_element_uri(std::string_view uri);

// Throws the typed unsupported error for `requirement` when the document's
// mode cannot represent it.
void require_support(EncodingMode mode, Requirement requirement);

// --- operations ---

// Adds an environment. In namespace encodings the uri is synthesized from
// the parent's uri (or, for a root environment, the namespace of the id's
// prefix) plus the id's local part.
void create_environment(ProvDocument& doc, const QualifiedName& id,
                        const Attributes& attributes = {},
                        std::optional<QualifiedName> parent = std::nullopt);

// Merges attributes; duplicate keys take the new value.
void attach_environment_attributes(ProvDocument& doc,
                                   const QualifiedName& environment,
                                   const Attributes& attributes);

// containedIn is implied by the forest: it is accepted (as a no-op) only
// when it agrees with the subject's parent.
void relate_environments(ProvDocument& doc, EnvironmentRelationKind kind,
                         const QualifiedName& subject,
                         const QualifiedName& object,
                         const Attributes& attributes = {});

void record_contract(ProvDocument& doc, const QualifiedName& id,
                     const std::set<QualifiedName>& parties,
                     const Attributes& terms = {},
                     const std::set<QualifiedName>& governs_flows = {});

// Links an existing contract to a flow relation (by relation id). The
// relation's endpoints must lie within the contract's parties.
void link_contract_flow(ProvDocument& doc, const QualifiedName& contract,
                        const QualifiedName& relation);

void record_control(ProvDocument& doc, const ControlRecord& record);

void annotate_relation(ProvDocument& doc, const QualifiedName& relation_id,
                       const Attributes& annotation);

// --- forest queries ---

// Nearest ancestor first. Stops at dangling parents and on cycles.
std::vector<QualifiedName> ancestors_of(const ProvDocument& doc,
                                        const QualifiedName& environment);
std::vector<QualifiedName> children_of(const ProvDocument& doc,
                                       const QualifiedName& environment);
std::vector<QualifiedName> root_environments(const ProvDocument& doc);
// True when `environment` equals `ancestor` or is nested below it.
bool is_within(const ProvDocument& doc, const QualifiedName& environment,
               const QualifiedName& ancestor);

}  // namespace deprov

#endif  // DEPROV_ENVIRONMENT_H_
