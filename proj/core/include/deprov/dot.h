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

#ifndef DEPROV_DOT_H_
#define DEPROV_DOT_H_

#include <cstddef>
#include <string>

#include "deprov/document.h"

namespace deprov {

enum class RankDirection { kLeftRight, kTopBottom };

struct RenderOptions {
  bool show_attributes = false;
  // Deepest environment level drawn as its own cluster; deeper environments
  // are folded into their ancestor at that level. 0 draws every level.
  std::size_t depth_limit = 0;
  RankDirection direction = RankDirection::kLeftRight;
};

/// Graphviz rendering. Environments become nested `cluster_<id>` subgraphs,
/// each with an invisible anchor node ("anchor:<id>") that environment-level
/// edges attach to. Entities are ellipses, activities boxes, agents houses.
/// Contracts are bold red edges between party clusters, environment
/// relations dashed edges, control records dotted edges. Output is
/// deterministic and every identifier is quoted.
std::string to_dot(const ProvDocument& doc, const RenderOptions& options = {});

// Identifier of the invisible node anchoring an environment's cluster.
std::string dot_anchor_id(const QualifiedName& environment);

}  // namespace deprov

#endif  // DEPROV_DOT_H_
