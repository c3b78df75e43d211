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

#include "deprov/validation.h"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "deprov/environment.h"
#include "deprov/error.h"

namespace deprov {

std::string_view to_string(Category category) {
  switch (category) {
    case Category::kUniqueness: return "Uniqueness";
    case Category::kOrdering: return "Ordering";
    case Category::kImpossibility: return "Impossibility";
    case Category::kTyping: return "Typing";
    case Category::kNesting: return "Nesting";
  }
  return "Uniqueness";
}

std::string_view to_string(Severity severity) {
  return severity == Severity::kError ? "error" : "warning";
}

bool ValidationReport::valid() const {
  return std::none_of(findings.begin(), findings.end(), [](const Finding& f) {
    return f.severity == Severity::kError;
  });
}

std::size_t ValidationReport::count(Category category) const {
  return static_cast<std::size_t>(
      std::count_if(findings.begin(), findings.end(),
                    [&](const Finding& f) { return f.category == category; }));
}

namespace {

Finding make_finding(Category category, std::vector<std::string> subjects,
                     std::string message) {
  return Finding{category, Severity::kError, std::move(subjects),
                 std::move(message)};
}

std::string kinds_text(const std::set<ElementKind>& kinds) {
  std::string out;
  for (ElementKind kind : kinds) {
    if (!out.empty()) out += " and ";
    out += to_string(kind);
  }
  return out;
}

ProvDocument infer_impl(const ProvDocument& doc,
                        std::vector<Finding>* ambiguities) {
  ProvDocument out = doc;
  std::map<QualifiedName, std::set<ElementKind>> required;
  std::set<QualifiedName> undeclared;
  for (const Relation& rel : doc.relations()) {
    RelationSignature sig = signature_of(rel.kind);
    for (const auto& [id, kind] :
         {std::pair{rel.subject, sig.subject}, std::pair{rel.object, sig.object}}) {
      if (doc.lookup(id) != nullptr || doc.environment(id) != nullptr) continue;
      undeclared.insert(id);
      if (kind) required[id].insert(*kind);
    }
  }
  for (const QualifiedName& id : undeclared) {
    const std::set<ElementKind>& kinds = required[id];
    if (kinds.size() > 1) {
      std::string message = "kind of undeclared " + id.str() +
                            " is ambiguous: used as " + kinds_text(kinds);
      if (ambiguities == nullptr) {
        throw Error(ErrorCode::kAmbiguousKind, message);
      }
      ambiguities->push_back(
          make_finding(Category::kTyping, {id.str()}, message));
      continue;
    }
    Element placeholder;
    placeholder.kind = kinds.empty() ? ElementKind::kEntity : *kinds.begin();
    placeholder.id = id;
    out.insert_element(std::move(placeholder));
  }

  std::map<QualifiedName, std::set<QualifiedName>> generators;
  std::set<std::pair<QualifiedName, QualifiedName>> informed;
  for (const Relation& rel : out.relations()) {
    if (rel.kind == RelationKind::kWasGeneratedBy) {
      generators[rel.subject].insert(rel.object);
    } else if (rel.kind == RelationKind::kWasInformedBy) {
      informed.emplace(rel.subject, rel.object);
    }
  }
  std::vector<Relation> added;
  for (const Relation& rel : out.relations()) {
    if (rel.kind != RelationKind::kUsed) continue;
    auto it = generators.find(rel.object);
    if (it == generators.end()) continue;
    for (const QualifiedName& generator : it->second) {
      if (generator == rel.subject) continue;
      if (!informed.emplace(rel.subject, generator).second) continue;
      Relation edge;
      edge.kind = RelationKind::kWasInformedBy;
      edge.subject = rel.subject;
      edge.object = generator;
      added.push_back(std::move(edge));
    }
  }
  for (Relation& rel : added) out.insert_relation(std::move(rel));
  return out;
}

std::vector<Relation> sorted_relations(const ProvDocument& doc) {
  std::vector<Relation> out(doc.relations().begin(), doc.relations().end());
  std::sort(out.begin(), out.end());
  return out;
}

// Comparable time of an activity: a "t<N>" label or the start time. Labels
// only compare with labels and start times with start times.
struct TimeKey {
  bool label = false;
  std::int64_t index = 0;
  std::string stamp;
};

std::optional<TimeKey> time_of(const ProvDocument& doc,
                               const QualifiedName& activity) {
  for (const Element* el : doc.lookup_all(activity)) {
    if (el->kind != ElementKind::kActivity) continue;
    if (auto label = string_attribute(el->attributes, time_label_key())) {
      if (label->size() > 1 && (*label)[0] == 't') {
        std::int64_t n = 0;
        const char* begin = label->data() + 1;
        const char* end = label->data() + label->size();
        auto [ptr, ec] = std::from_chars(begin, end, n);
        if (ec == std::errc() && ptr == end) return TimeKey{true, n, {}};
      }
    }
    if (el->start_time) return TimeKey{false, 0, *el->start_time};
  }
  return std::nullopt;
}

// True when both times are known, comparable, and a is strictly before b.
bool before(const std::optional<TimeKey>& a, const std::optional<TimeKey>& b) {
  if (!a || !b || a->label != b->label) return false;
  return a->label ? a->index < b->index : a->stamp < b->stamp;
}

}  // namespace

ProvDocument infer(const ProvDocument& doc) { return infer_impl(doc, nullptr); }

std::vector<Finding> check_uniqueness(const ProvDocument& doc) {
  std::vector<Finding> out;
  std::map<std::pair<std::string, ElementKind>, std::vector<const Element*>>
      elements;
  for (const Element& el : doc.elements()) {
    std::string uri = doc.resolve(el.id).value_or(el.id.str());
    elements[{uri, el.kind}].push_back(&el);
  }
  for (const auto& [key, group] : elements) {
    if (group.size() < 2) continue;
    std::set<std::string> ids;
    for (const Element* el : group) ids.insert(el->id.str());
    out.push_back(make_finding(
        Category::kUniqueness, {ids.begin(), ids.end()},
        std::to_string(group.size()) + " distinct " +
            std::string(to_string(key.second)) + " statements for " +
            key.first));
  }
  std::map<std::string, std::vector<const Relation*>> relations;
  for (const Relation& rel : doc.relations()) {
    if (!rel.id) continue;
    relations[doc.resolve(*rel.id).value_or(rel.id->str())].push_back(&rel);
  }
  for (const auto& [uri, group] : relations) {
    if (group.size() < 2) continue;
    std::set<std::string> ids;
    for (const Relation* rel : group) ids.insert(rel->id->str());
    out.push_back(make_finding(Category::kUniqueness, {ids.begin(), ids.end()},
                               "relation id " + uri + " is used by " +
                                   std::to_string(group.size()) +
                                   " distinct relations"));
  }
  return out;
}

std::vector<Finding> check_ordering(const ProvDocument& doc) {
  std::vector<Finding> out;
  std::map<QualifiedName, std::set<QualifiedName>> generators;
  for (const Relation& rel : doc.relations()) {
    if (rel.kind == RelationKind::kWasGeneratedBy) {
      generators[rel.subject].insert(rel.object);
    }
  }
  std::vector<Element> activities;
  for (const Element& el : doc.elements()) {
    if (el.kind == ElementKind::kActivity) activities.push_back(el);
  }
  std::sort(activities.begin(), activities.end());
  for (const Element& el : activities) {
    if (el.start_time && el.end_time && *el.end_time < *el.start_time) {
      out.push_back(make_finding(Category::kOrdering, {el.id.str()},
                                 el.id.str() + " ends (" + *el.end_time +
                                     ") before it starts (" + *el.start_time +
                                     ")"));
    }
  }
  for (const Relation& rel : sorted_relations(doc)) {
    switch (rel.kind) {
      case RelationKind::kUsed: {
        auto use = time_of(doc, rel.subject);
        for (const auto& generator : generators[rel.object]) {
          if (before(use, time_of(doc, generator))) {
            out.push_back(make_finding(
                Category::kOrdering,
                {rel.subject.str(), rel.object.str(), generator.str()},
                rel.subject.str() + " uses " + rel.object.str() +
                    " before " + generator.str() + " generates it"));
          }
        }
        break;
      }
      case RelationKind::kWasDerivedFrom: {
        for (const auto& late : generators[rel.subject]) {
          for (const auto& early : generators[rel.object]) {
            if (before(time_of(doc, late), time_of(doc, early))) {
              out.push_back(make_finding(
                  Category::kOrdering, {rel.subject.str(), rel.object.str()},
                  rel.subject.str() + " is generated (by " + late.str() +
                      ") before its source " + rel.object.str() + " (by " +
                      early.str() + ")"));
            }
          }
        }
        break;
      }
      default:
        break;
    }
  }
  return out;
}

std::vector<Finding> check_impossibility(const ProvDocument& doc) {
  std::vector<Finding> out;

  // Derivation cycles via Tarjan's algorithm.
  std::map<QualifiedName, std::set<QualifiedName>> derived;
  std::set<QualifiedName> nodes;
  for (const Relation& rel : doc.relations()) {
    if (rel.kind != RelationKind::kWasDerivedFrom) continue;
    derived[rel.subject].insert(rel.object);
    nodes.insert(rel.subject);
    nodes.insert(rel.object);
  }
  std::map<QualifiedName, int> index;
  std::map<QualifiedName, int> low;
  std::set<QualifiedName> on_stack;
  std::vector<QualifiedName> stack;
  int counter = 0;
  std::function<void(const QualifiedName&)> connect =
      [&](const QualifiedName& v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack.insert(v);
        for (const auto& w : derived[v]) {
          if (index.count(w) == 0) {
            connect(w);
            low[v] = std::min(low[v], low[w]);
          } else if (on_stack.count(w) != 0) {
            low[v] = std::min(low[v], index[w]);
          }
        }
        if (low[v] != index[v]) return;
        std::vector<std::string> component;
        while (true) {
          QualifiedName w = stack.back();
          stack.pop_back();
          on_stack.erase(w);
          component.push_back(w.str());
          if (w == v) break;
        }
        if (component.size() > 1 || derived[v].count(v) != 0) {
          std::sort(component.begin(), component.end());
          std::string message = "derivation cycle among";
          for (const auto& id : component) message += " " + id;
          out.push_back(make_finding(Category::kImpossibility, component,
                                     message));
        }
      };
  for (const auto& v : nodes) {
    if (index.count(v) == 0) connect(v);
  }

  for (const Relation& rel : sorted_relations(doc)) {
    if (rel.kind == RelationKind::kWasInformedBy && rel.subject == rel.object) {
      out.push_back(make_finding(Category::kImpossibility, {rel.subject.str()},
                                 rel.subject.str() + " is informed by itself"));
    }
  }

  for (const auto& [id, env] : doc.environments()) {
    for (const Element* el : doc.lookup_all(id)) {
      bool bundle_entity = false;
      if (el->kind == ElementKind::kEntity) {
        auto it = el->attributes.find(prov_name("type"));
        bundle_entity = it != el->attributes.end() &&
                        it->second.as_qualified_name() != nullptr &&
                        *it->second.as_qualified_name() == prov_name("Bundle");
      }
      if (!bundle_entity) {
        out.push_back(make_finding(
            Category::kImpossibility, {id.str()},
            id.str() + " is both an environment and a " +
                std::string(to_string(el->kind))));
      }
    }
  }

  if (!supports(doc.mode(), Requirement::kR2NestedEnvironments)) {
    for (const auto& [id, env] : doc.environments()) {
      if (env.parent) {
        out.push_back(make_finding(
            Category::kImpossibility, {id.str(), env.parent->str()},
            id.str() + " is nested in " + env.parent->str() + " but " +
                std::string(display_name(doc.mode())) +
                " encodings cannot nest environments"));
      }
    }
  }

  std::set<std::set<QualifiedName>> cycles;
  for (const auto& [id, env] : doc.environments()) {
    std::vector<QualifiedName> chain{id};
    std::optional<QualifiedName> cursor = env.parent;
    while (cursor) {
      auto seen = std::find(chain.begin(), chain.end(), *cursor);
      if (seen != chain.end()) {
        cycles.insert(std::set<QualifiedName>(seen, chain.end()));
        break;
      }
      const DataEnvironment* next = doc.environment(*cursor);
      if (next == nullptr) break;
      chain.push_back(*cursor);
      cursor = next->parent;
    }
  }
  for (const auto& cycle : cycles) {
    std::vector<std::string> ids;
    std::string message = "containment cycle among";
    for (const auto& id : cycle) {
      ids.push_back(id.str());
      message += " " + id.str();
    }
    out.push_back(make_finding(Category::kImpossibility, ids, message));
  }
  return out;
}

std::vector<Finding> check_typing(const ProvDocument& doc) {
  std::vector<Finding> out;
  auto kinds_of = [&](const QualifiedName& id) {
    std::set<ElementKind> kinds;
    for (const Element* el : doc.lookup_all(id)) kinds.insert(el->kind);
    if (doc.environment(id) != nullptr) kinds.insert(ElementKind::kEntity);
    return kinds;
  };
  // One finding per relation, naming every endpoint of the wrong kind.
  for (const Relation& rel : sorted_relations(doc)) {
    RelationSignature sig = signature_of(rel.kind);
    std::vector<std::string> subjects;
    std::string problems;
    for (const auto& [id, expected, role] :
         {std::tuple{rel.subject, sig.subject, "subject"},
          std::tuple{rel.object, sig.object, "object"}}) {
      if (!expected) continue;
      std::set<ElementKind> kinds = kinds_of(id);
      if (kinds.empty() || kinds.count(*expected) != 0) continue;
      subjects.push_back(id.str());
      if (!problems.empty()) problems += "; ";
      problems += std::string(role) + " " + id.str() + " is an " +
                  kinds_text(kinds) + ", expected an " +
                  std::string(to_string(*expected));
    }
    if (subjects.empty()) continue;
    out.push_back(make_finding(Category::kTyping, std::move(subjects),
                               describe(rel) + ": " + problems));
  }
  std::map<QualifiedName, std::set<ElementKind>> declared;
  for (const Element& el : doc.elements()) declared[el.id].insert(el.kind);
  for (const auto& [id, kinds] : declared) {
    if (kinds.size() > 1) {
      out.push_back(make_finding(
          Category::kTyping, {id.str()},
          id.str() + " is declared as both " + kinds_text(kinds)));
    }
  }
  return out;
}

std::vector<Finding> check_nesting(const ProvDocument& doc) {
  std::vector<Finding> out;
  std::set<QualifiedName> ids;
  for (const Element& el : doc.elements()) ids.insert(el.id);
  for (const auto& id : ids) {
    auto envs = doc.environments_of(id);
    if (envs.size() < 2) continue;
    std::vector<std::string> subjects{id.str()};
    std::string message = id.str() + " is a member of several environments:";
    for (const auto& env : envs) {
      subjects.push_back(env.str());
      message += " " + env.str();
    }
    out.push_back(make_finding(Category::kNesting, subjects, message));
  }
  for (const auto& [id, env] : doc.environments()) {
    if (env.parent && doc.environment(*env.parent) == nullptr) {
      out.push_back(make_finding(
          Category::kNesting, {id.str(), env.parent->str()},
          id.str() + " names an unknown parent " + env.parent->str()));
    }
    for (const auto& member : env.members) {
      if (doc.lookup(member) == nullptr) {
        out.push_back(make_finding(
            Category::kNesting, {id.str(), member.str()},
            id.str() + " lists member " + member.str() +
                " which is not a declared element"));
      }
    }
  }
  if (!is_namespace_mode(doc.mode())) return out;

  auto well_formed = [](const std::string& uri) {
    try {
      split_environment_path(uri);
      return true;
    } catch (const Error&) {
      return false;
    }
  };
  std::map<std::string, std::vector<std::string>> by_uri;
  for (const auto& [id, env] : doc.environments()) {
    by_uri[env.uri].push_back(id.str());
    if (!well_formed(env.uri)) {
      out.push_back(make_finding(
          Category::kNesting, {id.str()},
          id.str() + " has a malformed environment uri '" + env.uri + "'"));
      continue;
    }
    if (!env.parent) continue;
    const DataEnvironment* parent = doc.environment(*env.parent);
    if (parent == nullptr || !well_formed(parent->uri)) continue;
    auto segments = split_environment_path(env.uri);
    std::string expected =
        segments.empty() ? parent->uri + "<segment>/"
                         : environment_uri(parent->uri, segments.back());
    if (expected != env.uri) {
      out.push_back(make_finding(
          Category::kNesting, {id.str(), env.parent->str()},
          id.str() + " uri " + env.uri + " is not one segment below " +
              env.parent->str() + " (" + parent->uri + ")"));
    }
  }
  for (const auto& [uri, owners] : by_uri) {
    if (owners.size() > 1 && !uri.empty()) {
      out.push_back(make_finding(Category::kNesting, owners,
                                 "environment uri " + uri +
                                     " is shared by several environments"));
    }
  }
  return out;
}

ValidationReport validate(const ProvDocument& doc) {
  std::vector<Finding> ambiguities;
  ProvDocument closed = infer_impl(doc, &ambiguities);
  ValidationReport report;
  auto append = [&](std::vector<Finding> findings) {
    for (auto& f : findings) report.findings.push_back(std::move(f));
  };
  append(check_uniqueness(closed));
  append(check_ordering(closed));
  append(check_impossibility(closed));
  append(std::move(ambiguities));
  append(check_typing(closed));
  append(check_nesting(closed));
  std::stable_sort(report.findings.begin(), report.findings.end(),
                   [](const Finding& a, const Finding& b) {
                     return a.category < b.category;
                   });
  std::set<Element> had_elements(doc.elements().begin(), doc.elements().end());
  for (const Element& e : closed.elements()) {
    if (!had_elements.contains(e)) report.inferred.emplace_back(e);
  }
  std::set<Relation> had_relations(doc.relations().begin(),
                                   doc.relations().end());
  for (const Relation& r : closed.relations()) {
    if (!had_relations.contains(r)) report.inferred.emplace_back(r);
  }
  return report;
}

std::string report_to_json(const ValidationReport& report) {
  nlohmann::json findings = nlohmann::json::array();
  for (const Finding& f : report.findings) {
    findings.push_back({{"category", std::string(to_string(f.category))},
                        {"severity", std::string(to_string(f.severity))},
                        {"subjects", f.subjects},
                        {"message", f.message}});
  }
  nlohmann::json inferred = nlohmann::json::array();
  for (const Statement& s : report.inferred) inferred.push_back(describe(s));
  nlohmann::json out{{"valid", report.valid()},
                     {"findings", findings},
                     {"inferred", inferred}};
  return out.dump(2) + "\n";
}

std::string report_to_text(const ValidationReport& report) {
  std::ostringstream out;
  if (report.findings.empty()) {
    out << "valid: no findings\n";
    return out.str();
  }
  out << (report.valid() ? "valid" : "invalid") << ": "
      << report.findings.size() << " finding"
      << (report.findings.size() == 1 ? "" : "s") << "\n";
  for (const Finding& f : report.findings) {
    out << "  " << to_string(f.severity) << " [" << to_string(f.category)
        << "] " << f.message << "\n";
  }
  return out.str();
}

EnvironmentTree::EnvironmentTree(const ProvDocument& doc) : doc_(&doc) {
  roots_ = root_environments(doc);
  for (const auto& [id, env] : doc.environments()) {
    if (env.parent && doc.environment(*env.parent) != nullptr) {
      children_[*env.parent].push_back(id);
    }
  }
}

std::vector<QualifiedName> EnvironmentTree::children(
    const QualifiedName& env) const {
  auto it = children_.find(env);
  return it == children_.end() ? std::vector<QualifiedName>{} : it->second;
}

void EnvironmentTree::collect(const QualifiedName& env,
                              std::set<QualifiedName>& out,
                              std::set<QualifiedName>& seen) const {
  if (!seen.insert(env).second) return;
  if (const DataEnvironment* data = doc_->environment(env)) {
    out.insert(data->members.begin(), data->members.end());
  }
  for (const auto& child : children(env)) collect(child, out, seen);
}

std::set<QualifiedName> EnvironmentTree::content(
    const QualifiedName& env) const {
  std::set<QualifiedName> out;
  std::set<QualifiedName> seen;
  collect(env, out, seen);
  return out;
}

std::size_t EnvironmentTree::depth(const QualifiedName& env) const {
  return ancestors_of(*doc_, env).size();
}

}  // namespace deprov
