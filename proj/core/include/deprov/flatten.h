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

// Standard PROV-N rendering of a Bundles+ document, readable by tools that
// know nothing about environments.
//
// Every environment becomes a top-level bundle. Structure that standard
// PROV-N cannot express is carried by typed statements in the de:
// vocabulary at document level:
//
//   environment attributes  entity(env, [prov:type='prov:Bundle', ...])
//   nesting                 wasInfluencedBy(child, parent,
//                                           [prov:type='de:containedIn'])
//   environment relation    wasInfluencedBy(s, o, [prov:type='de:<kind>'])
//   contract                entity(c, [prov:type='de:Contract',
//                                      de:governsFlows="r1 r2", ...terms])
//                           wasInfluencedBy(c, party, [prov:type='de:party'])
//   control                 wasInfluencedBy(target, holder,
//                                           [prov:type='de:control', ...])
//   annotation              entity(de:annotation_<prefix>_<local>,
//                                  [prov:type='de:Annotation',
//                                   de:annotates='<relation>', ...])

#ifndef DEPROV_FLATTEN_H_
#define DEPROV_FLATTEN_H_

#include <string>
#include <string_view>

#include "deprov/document.h"

namespace deprov {

// Throws kUnsupported unless the document is in Bundles+ mode.
std::string export_flattened(const ProvDocument& doc);

// Rebuilds the Bundles+ document from export_flattened output.
ProvDocument import_flattened(std::string_view text);

}  // namespace deprov

#endif  // DEPROV_FLATTEN_H_
