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

#include "deprov/dot.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "deprov/environment.h"

namespace deprov {

namespace {

constexpr std::size_t kMaxLabel = 40;

std::string quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out += c;
    }
  }
  out += '"';
  return out;
}

std::string truncate(const std::string& text) {
  if (text.size() <= kMaxLabel) return text;
  std::size_t cut = kMaxLabel - 3;
  // Do not split a UTF-8 sequence.
  while (cut > 0 && (static_cast<unsigned char>(text[cut]) & 0xC0) == 0x80) {
    --cut;
  }
  return text.substr(0, cut) + "...";
}

std::string_view shape_of(ElementKind kind) {
  switch (kind) {
    case ElementKind::kEntity: return "ellipse";
    case ElementKind::kActivity: return "box";
    case ElementKind::kAgent: return "house";
  }
  return "ellipse";
}

std::string cluster_id(const QualifiedName& env) {
  return "cluster_" + env.str();
}

class DotWriter {
 public:
  DotWriter(const ProvDocument& doc, const RenderOptions& options)
      : doc_(doc), options_(options) {}

  std::string run() {
    for (const auto& [id, env] : doc_.environments()) {
      drawn_as_[id] = drawn_ancestor(id);
    }
    out_ << "digraph \"deprov\" {\n";
    out_ << "  compound=true;\n";
    out_ << "  rankdir="
         << (options_.direction == RankDirection::kLeftRight ? "LR" : "TB")
         << ";\n";
    out_ << "  node [fontname=\"Helvetica\"];\n";
    out_ << "  edge [fontname=\"Helvetica\"];\n";

    std::map<QualifiedName, std::vector<const Element*>> by_id;
    for (const Element& el : doc_.elements()) by_id[el.id].push_back(&el);
    for (auto& [id, list] : by_id) {
      std::sort(list.begin(), list.end(),
                [](const Element* a, const Element* b) { return *a < *b; });
    }
    for (const auto& [id, list] : by_id) {
      auto envs = doc_.environments_of(id);
      if (envs.empty() || drawn_as_.count(envs.front()) == 0) {
        loose_.push_back(list.front());
      } else {
        placed_[drawn_as_[envs.front()]].push_back(list.front());
      }
    }

    for (const auto& root : root_environments(doc_)) cluster(root, 1);
    for (const Element* el : loose_) node(*el, 1);

    relation_edges();
    environment_edges();
    control_edges();
    contract_edges();
    out_ << "}\n";
    return out_.str();
  }

 private:
  std::ostream& indent(int depth) {
    for (int i = 0; i < depth; ++i) out_ << "  ";
    return out_;
  }

  // The environment whose cluster shows `env` given the depth limit.
  QualifiedName drawn_ancestor(const QualifiedName& env) const {
    if (options_.depth_limit == 0) return env;
    std::vector<QualifiedName> chain = ancestors_of(doc_, env);
    std::reverse(chain.begin(), chain.end());  // root first
    chain.push_back(env);
    if (chain.size() <= options_.depth_limit) return env;
    return chain[options_.depth_limit - 1];
  }

  std::string attribute_lines(const Attributes& attributes) const {
    std::string out;
    for (const auto& [key, value] : attributes) {
      out += "\n" + key.str() + "=" + truncate(value.display());
    }
    return out;
  }

  void node(const Element& el, int depth) {
    std::string label = el.id.str();
    if (options_.show_attributes) label += attribute_lines(el.attributes);
    indent(depth) << quote(el.id.str()) << " [shape=" << shape_of(el.kind)
                  << ", label=" << quote(label) << "];\n";
  }

  void cluster(const QualifiedName& id, int depth) {
    if (!visited_.insert(id).second) return;
    const DataEnvironment& env = *doc_.environment(id);
    std::string label = id.str();
    if (options_.show_attributes) label += attribute_lines(env.attributes);
    indent(depth) << "subgraph " << quote(cluster_id(id)) << " {\n";
    indent(depth + 1) << "label=" << quote(label) << ";\n";
    indent(depth + 1) << "style=rounded;\n";
    indent(depth + 1) << quote(dot_anchor_id(id))
                      << " [shape=point, style=invis, label=\"\"];\n";
    auto it = placed_.find(id);
    if (it != placed_.end()) {
      for (const Element* el : it->second) node(*el, depth + 1);
    }
    for (const auto& child : children_of(doc_, id)) {
      if (drawn_as_[child] == child) cluster(child, depth + 1);
    }
    indent(depth) << "}\n";
  }

  std::optional<std::string> meaning_of(const Relation& rel) const {
    if (auto m = string_attribute(rel.attributes, env_keys::meaning())) {
      return m;
    }
    if (rel.id) {
      auto it = doc_.annotations().find(*rel.id);
      if (it != doc_.annotations().end()) {
        return string_attribute(it->second, env_keys::meaning());
      }
    }
    return std::nullopt;
  }

  void relation_edges() {
    std::vector<Relation> relations(doc_.relations().begin(),
                                    doc_.relations().end());
    std::sort(relations.begin(), relations.end());
    for (const Relation& rel : relations) {
      std::string label(to_string(rel.kind));
      if (auto meaning = meaning_of(rel)) label += "\n" + truncate(*meaning);
      out_ << "  " << quote(endpoint(rel.subject)) << " -> "
           << quote(endpoint(rel.object)) << " [label=" << quote(label)
           << cluster_ends(rel.subject, rel.object) << "];\n";
    }
  }

  // Relations may point at environments; those attach to the anchor.
  std::string endpoint(const QualifiedName& id) const {
    auto it = drawn_as_.find(id);
    if (it != drawn_as_.end() && doc_.lookup(id) == nullptr) {
      return dot_anchor_id(it->second);
    }
    return id.str();
  }

  std::string cluster_ends(const QualifiedName& tail,
                           const QualifiedName& head) const {
    std::string out;
    auto t = drawn_as_.find(tail);
    if (t != drawn_as_.end() && doc_.lookup(tail) == nullptr) {
      out += ", ltail=" + quote(cluster_id(t->second));
    }
    auto h = drawn_as_.find(head);
    if (h != drawn_as_.end() && doc_.lookup(head) == nullptr) {
      out += ", lhead=" + quote(cluster_id(h->second));
    }
    return out;
  }

  void environment_edges() {
    std::vector<EnvironmentRelation> relations(
        doc_.environment_relations().begin(),
        doc_.environment_relations().end());
    std::sort(relations.begin(), relations.end());
    for (const auto& rel : relations) {
      out_ << "  " << quote(endpoint(rel.subject)) << " -> "
           << quote(endpoint(rel.object)) << " [style=dashed, label="
           << quote(std::string(to_string(rel.kind)))
           << cluster_ends(rel.subject, rel.object) << "];\n";
    }
  }

  void control_edges() {
    std::vector<ControlRecord> records(doc_.controls().begin(),
                                       doc_.controls().end());
    std::sort(records.begin(), records.end());
    for (const auto& record : records) {
      std::string label = "control: " +
                          std::string(to_string(record.control_type)) + "/" +
                          std::string(to_string(record.control_nature));
      out_ << "  " << quote(endpoint(record.holder)) << " -> "
           << quote(endpoint(record.target)) << " [style=dotted, label="
           << quote(label) << cluster_ends(record.holder, record.target)
           << "];\n";
    }
  }

  void contract_edges() {
    for (const auto& [id, contract] : doc_.contracts()) {
      if (contract.parties.empty()) continue;
      const QualifiedName& first = *contract.parties.begin();
      for (auto it = std::next(contract.parties.begin());
           it != contract.parties.end(); ++it) {
        out_ << "  " << quote(endpoint(first)) << " -> "
             << quote(endpoint(*it))
             << " [color=red, style=bold, dir=none, label=" << quote(id.str())
             << cluster_ends(first, *it) << "];\n";
      }
    }
  }

  const ProvDocument& doc_;
  const RenderOptions& options_;
  std::ostringstream out_;
  std::map<QualifiedName, QualifiedName> drawn_as_;
  std::map<QualifiedName, std::vector<const Element*>> placed_;
  std::vector<const Element*> loose_;
  std::set<QualifiedName> visited_;
};

}  // namespace

std::string dot_anchor_id(const QualifiedName& environment) {
  return "anchor:" + environment.str();
}

std::string to_dot(const ProvDocument& doc, const RenderOptions& options) {
  return DotWriter(doc, options).run();
}

}  // namespace deprov
