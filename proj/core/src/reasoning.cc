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

#include "deprov/reasoning.h"

#include <algorithm>
#include <deque>
#include <sstream>

#include <nlohmann/json.hpp>

#include "deprov/environment.h"
#include "deprov/error.h"

namespace deprov {

using nlohmann::json;

std::vector<FlowEdge> flow_edges(const ProvDocument& doc) {
  std::vector<FlowEdge> edges;
  for (const Relation& rel : doc.relations()) {
    std::string kind(to_string(rel.kind));
    switch (rel.kind) {
      case RelationKind::kWasGeneratedBy:
      case RelationKind::kWasDerivedFrom:
      case RelationKind::kWasInformedBy:
      case RelationKind::kUsed:
        edges.push_back({rel.object, rel.subject, kind, rel.id});
        break;
      default:
        break;
    }
  }
  for (const EnvironmentRelation& rel : doc.environment_relations()) {
    if (rel.kind == EnvironmentRelationKind::kSharesDataWith) {
      edges.push_back({rel.subject, rel.object,
                       std::string(to_string(rel.kind)), std::nullopt});
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

bool ChainResult::contains(const QualifiedName& id) const {
  return hops_to(id).has_value();
}

std::optional<std::size_t> ChainResult::hops_to(
    const QualifiedName& id) const {
  for (const auto& node : reached) {
    if (node.id == id) return node.hops;
  }
  return std::nullopt;
}

namespace {

std::optional<QualifiedName> home_of(const ProvDocument& doc,
                                     const QualifiedName& id) {
  if (doc.environment(id) != nullptr) return id;
  return doc.environment_of(id);
}

ChainResult chain(const ProvDocument& doc, const QualifiedName& origin,
                  bool forward) {
  if (doc.lookup(origin) == nullptr && doc.environment(origin) == nullptr) {
    throw Error(ErrorCode::kUnknownNode,
                origin.str() + " is neither an element nor an environment");
  }
  std::map<QualifiedName, std::vector<const FlowEdge*>> adjacency;
  std::vector<FlowEdge> edges = flow_edges(doc);
  for (const FlowEdge& edge : edges) {
    adjacency[forward ? edge.from : edge.to].push_back(&edge);
  }
  std::map<QualifiedName, std::set<QualifiedName>> governing;
  for (const auto& [id, contract] : doc.contracts()) {
    for (const auto& flow : contract.governs_flows) governing[flow].insert(id);
  }

  ChainResult result;
  result.origin = origin;
  std::map<QualifiedName, std::size_t> hops{{origin, 0}};
  std::deque<QualifiedName> queue{origin};
  result.reached.push_back({origin, home_of(doc, origin), 0});
  while (!queue.empty()) {
    QualifiedName node = queue.front();
    queue.pop_front();
    for (const FlowEdge* edge : adjacency[node]) {
      const QualifiedName& next = forward ? edge->to : edge->from;
      auto from_env = home_of(doc, edge->from);
      auto to_env = home_of(doc, edge->to);
      if (from_env != to_env) {
        Crossing crossing{*edge, from_env, to_env, {}};
        if (edge->relation_id) {
          auto it = governing.find(*edge->relation_id);
          if (it != governing.end()) crossing.contracts = it->second;
        }
        result.contracts.insert(crossing.contracts.begin(),
                                crossing.contracts.end());
        result.crossings.push_back(std::move(crossing));
      }
      if (hops.count(next) != 0) continue;
      hops[next] = hops[node] + 1;
      result.reached.push_back({next, home_of(doc, next), hops[next]});
      queue.push_back(next);
    }
  }
  return result;
}

json optional_name(const std::optional<QualifiedName>& name) {
  return name ? json(name->str()) : json(nullptr);
}

json name_list(const std::set<QualifiedName>& names) {
  json out = json::array();
  for (const auto& name : names) out.push_back(name.str());
  return out;
}

}  // namespace

ChainResult forward_chain(const ProvDocument& doc,
                          const QualifiedName& origin) {
  return chain(doc, origin, true);
}

ChainResult backward_chain(const ProvDocument& doc,
                           const QualifiedName& origin) {
  return chain(doc, origin, false);
}

std::string chain_to_json(const ChainResult& chain) {
  json reached = json::array();
  for (const auto& node : chain.reached) {
    reached.push_back({{"id", node.id.str()},
                       {"environment", optional_name(node.environment)},
                       {"hops", node.hops}});
  }
  json crossings = json::array();
  for (const auto& c : chain.crossings) {
    json entry{{"from", c.edge.from.str()},
               {"to", c.edge.to.str()},
               {"kind", c.edge.kind},
               {"fromEnvironment", optional_name(c.from_environment)},
               {"toEnvironment", optional_name(c.to_environment)},
               {"contracts", name_list(c.contracts)}};
    if (c.edge.relation_id) entry["relation"] = c.edge.relation_id->str();
    crossings.push_back(entry);
  }
  json out{{"origin", chain.origin.str()},
           {"reached", reached},
           {"crossings", crossings},
           {"contracts", name_list(chain.contracts)}};
  return out.dump(2) + "\n";
}

std::vector<ControllerEntry> controllers_of(const ProvDocument& doc,
                                            const QualifiedName& environment) {
  if (doc.environment(environment) == nullptr) {
    throw Error(ErrorCode::kUnknownEnvironment,
                "unknown environment " + environment.str());
  }
  std::vector<ControlRecord> records(doc.controls().begin(),
                                     doc.controls().end());
  std::sort(records.begin(), records.end());
  std::vector<ControllerEntry> out;
  for (const auto& record : records) {
    if (record.target == environment) out.push_back({record, false, {}});
  }
  for (const auto& ancestor : ancestors_of(doc, environment)) {
    for (const auto& record : records) {
      if (record.target == ancestor) out.push_back({record, true, ancestor});
    }
  }
  return out;
}

std::string controllers_to_json(const QualifiedName& environment,
                                const std::vector<ControllerEntry>& entries) {
  json list = json::array();
  for (const auto& entry : entries) {
    json item{{"holder", entry.record.holder.str()},
              {"target", entry.record.target.str()},
              {"controlType", std::string(to_string(entry.record.control_type))},
              {"controlNature",
               std::string(to_string(entry.record.control_nature))},
              {"responsibility",
               std::string(to_string(entry.record.responsibility))},
              {"transitive", entry.transitive}};
    if (entry.via) item["via"] = entry.via->str();
    list.push_back(item);
  }
  json out{{"environment", environment.str()}, {"controllers", list}};
  return out.dump(2) + "\n";
}

std::string support_matrix_text() {
  std::ostringstream out;
  std::size_t width = 0;
  for (auto req : kAllRequirements) {
    width = std::max(width, 4 + name_of(req).size());
  }
  auto pad = [](std::string text, std::size_t n) {
    // Column widths count code points; the check mark is three bytes.
    std::size_t visible = 0;
    for (unsigned char c : text) visible += (c & 0xC0) != 0x80;
    if (visible < n) text.append(n - visible, ' ');
    return text;
  };
  auto emit = [&](std::string row) {
    row.erase(row.find_last_not_of(' ') + 1);
    out << row << "\n";
  };
  std::string header = pad("Requirement", width);
  for (auto mode : kAllModes) {
    header += " | " + pad(std::string(display_name(mode)), 10);
  }
  emit(header);
  for (auto req : kAllRequirements) {
    std::string row = pad(
        std::string(code_of(req)) + "  " + std::string(name_of(req)), width);
    for (auto mode : kAllModes) {
      row += " | " + pad(supports(mode, req) ? "✓" : "-", 10);
    }
    emit(row);
  }
  return out.str();
}

std::string support_matrix_json() {
  json modes = json::array();
  for (auto mode : kAllModes) modes.push_back(std::string(display_name(mode)));
  json rows = json::array();
  for (auto req : kAllRequirements) {
    json support = json::object();
    for (auto mode : kAllModes) {
      support[std::string(display_name(mode))] = supports(mode, req);
    }
    rows.push_back({{"requirement", std::string(code_of(req))},
                    {"name", std::string(name_of(req))},
                    {"support", support}});
  }
  json out{{"modes", modes}, {"requirements", rows}};
  return out.dump(2) + "\n";
}

Assessment assess_document(const ProvDocument& doc) {
  bool any_parent = false;
  bool any_attributes = false;
  bool any_members = false;
  for (const auto& [id, env] : doc.environments()) {
    any_parent = any_parent || env.parent.has_value();
    any_attributes = any_attributes || !env.attributes.empty();
    any_members = any_members || !env.members.empty();
  }
  auto exercised = [&](Requirement req) {
    switch (req) {
      case Requirement::kR1EnvironmentConstruct:
        return !doc.environments().empty();
      case Requirement::kR2NestedEnvironments: return any_parent;
      case Requirement::kR3EnvironmentAttributes: return any_attributes;
      case Requirement::kR4EnvironmentRelationships:
        return !doc.environment_relations().empty();
      case Requirement::kR5RelationAnnotation:
        return !doc.annotations().empty();
      case Requirement::kR6AgentsDataProcesses: return any_members;
      case Requirement::kR7Contracts: return !doc.contracts().empty();
      case Requirement::kR8AccessAndControl: return !doc.controls().empty();
    }
    return false;
  };
  Assessment out;
  out.mode = doc.mode();
  for (auto req : kAllRequirements) {
    RequirementUse use{req, exercised(req), supports(doc.mode(), req)};
    out.rows.push_back(use);
    if (use.exercised && !use.supported) {
      // Stay in the same encoding family where possible.
      EncodingMode upgrade = is_bundle_mode(doc.mode())
                                 ? EncodingMode::kBundlesPlus
                                 : EncodingMode::kNamespacesPlus;
      EncodingMode other = upgrade == EncodingMode::kBundlesPlus
                               ? EncodingMode::kNamespacesPlus
                               : EncodingMode::kBundlesPlus;
      out.problems.push_back(
          std::string(code_of(req)) + " (" + std::string(name_of(req)) +
          ") is used but " + std::string(to_string(doc.mode())) +
          " cannot represent it; upgrade to " +
          std::string(to_string(upgrade)) + " (or " +
          std::string(to_string(other)) + ")");
    }
  }
  return out;
}

std::string assessment_to_text(const Assessment& assessment) {
  std::ostringstream out;
  out << "mode: " << to_string(assessment.mode) << "\n";
  for (const auto& row : assessment.rows) {
    out << "  " << code_of(row.requirement) << "  "
        << (row.exercised ? "used    " : "unused  ")
        << (row.supported ? "supported  " : "unsupported")
        << "  " << name_of(row.requirement) << "\n";
  }
  for (const auto& problem : assessment.problems) {
    out << "problem: " << problem << "\n";
  }
  out << (assessment.adequate() ? "adequate" : "inadequate") << "\n";
  return out.str();
}

std::string assessment_to_json(const Assessment& assessment) {
  json rows = json::array();
  for (const auto& row : assessment.rows) {
    rows.push_back({{"requirement", std::string(code_of(row.requirement))},
                    {"name", std::string(name_of(row.requirement))},
                    {"exercised", row.exercised},
                    {"supported", row.supported}});
  }
  json out{{"mode", std::string(to_string(assessment.mode))},
           {"adequate", assessment.adequate()},
           {"requirements", rows},
           {"problems", assessment.problems}};
  return out.dump(2) + "\n";
}

EnvironmentGraph environment_graph(const ProvDocument& doc) {
  EnvironmentGraph graph;
  for (const auto& [id, env] : doc.environments()) {
    graph.nodes[id] = {env.parent, env.attributes, env.members};
  }
  graph.relations.assign(doc.environment_relations().begin(),
                         doc.environment_relations().end());
  std::sort(graph.relations.begin(), graph.relations.end());
  graph.contracts = doc.contracts();
  graph.controls.assign(doc.controls().begin(), doc.controls().end());
  std::sort(graph.controls.begin(), graph.controls.end());
  graph.annotations = doc.annotations();
  return graph;
}

bool equivalent_content(const ProvDocument& a, const ProvDocument& b) {
  auto sorted_elements = [](const ProvDocument& doc) {
    std::vector<Element> out(doc.elements().begin(), doc.elements().end());
    std::sort(out.begin(), out.end());
    return out;
  };
  auto sorted_relations = [](const ProvDocument& doc) {
    std::vector<Relation> out(doc.relations().begin(), doc.relations().end());
    std::sort(out.begin(), out.end());
    return out;
  };
  return a.namespaces() == b.namespaces() &&
         sorted_elements(a) == sorted_elements(b) &&
         sorted_relations(a) == sorted_relations(b) &&
         environment_graph(a) == environment_graph(b);
}

}  // namespace deprov
