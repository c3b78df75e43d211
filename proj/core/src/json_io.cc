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

#include "deprov/json_io.h"

#include <algorithm>
#include <set>
#include <vector>

#include "deprov/environment.h"
#include "json_common.h"

namespace deprov {

SchemaError::SchemaError(ErrorCode code, std::string path,
                         const std::string& message)
    : Error(code, (path.empty() ? std::string("/") : path) + ": " + message),
      path_(std::move(path)) {}

namespace {

using internal::json;
using internal::pointer;
using internal::schema_fail;

json element_json(const Element& el) {
  json out{{"kind", std::string(to_string(el.kind))}, {"id", el.id.str()}};
  if (el.start_time) out["startTime"] = *el.start_time;
  if (el.end_time) out["endTime"] = *el.end_time;
  if (!el.attributes.empty()) out["attributes"] = internal::to_json(el.attributes);
  return out;
}

json relation_json(const Relation& rel) {
  json out{{"kind", std::string(to_string(rel.kind))}};
  if (rel.id) out["id"] = rel.id->str();
  out["subject"] = rel.subject.str();
  out["object"] = rel.object.str();
  if (!rel.attributes.empty()) {
    out["attributes"] = internal::to_json(rel.attributes);
  }
  return out;
}

class EnvironmentWriter {
 public:
  explicit EnvironmentWriter(const ProvDocument& doc) : doc_(doc) {}

  json run() {
    json out = json::object();
    for (const auto& root : root_environments(doc_)) {
      out[root.str()] = entry(root, true);
    }
    // Environments on a containment cycle are unreachable from any root.
    for (const auto& [id, env] : doc_.environments()) {
      if (visited_.count(id) == 0) out[id.str()] = entry(id, true);
    }
    return out;
  }

 private:
  json entry(const QualifiedName& id, bool explicit_parent) {
    visited_.insert(id);
    const DataEnvironment& env = *doc_.environment(id);
    json out = json::object();
    if (!env.uri.empty()) out["uri"] = env.uri;
    if (explicit_parent && env.parent) out["parent"] = env.parent->str();
    out["attributes"] = internal::to_json(env.attributes);
    json members = json::array();
    for (const auto& member : env.members) members.push_back(member.str());
    out["members"] = members;
    json children = json::object();
    for (const auto& child : children_of(doc_, id)) {
      if (visited_.count(child) == 0) {
        children[child.str()] = entry(child, false);
      }
    }
    out["children"] = children;
    return out;
  }

  const ProvDocument& doc_;
  std::set<QualifiedName> visited_;
};

class JsonReader {
 public:
  JsonReader(const json& root, const ParseOptions& options)
      : root_(root), enforce_(options.enforce_mode), options_(options) {}

  ProvDocument run() {
    if (!root_.is_object()) schema_fail("", "document must be a JSON object");
    static const std::set<std::string> kKeys = {
        "mode",      "prefixes", "environments", "elements",
        "relations", "contracts", "controls",    "annotations"};
    for (const auto& [key, value] : root_.items()) {
      if (kKeys.count(key) == 0) {
        schema_fail(pointer("", key), "unknown member '" + key + "'");
      }
    }
    std::string mode_text = internal::string_at(
        internal::require_member(root_, "mode", ""), "/mode");
    auto mode = parse_encoding_mode(mode_text);
    if (!mode) schema_fail("/mode", "unknown encoding mode '" + mode_text + "'");
    doc_ = ProvDocument(*mode);

    if (root_.contains("prefixes")) prefixes(root_["prefixes"]);
    if (root_.contains("environments")) {
      environments(root_["environments"], "/environments", std::nullopt);
    }
    each("elements", [&](const json& v, const std::string& p) { element(v, p); });
    each("relations",
         [&](const json& v, const std::string& p) { relation(v, p); });
    each("contracts", [&](const json& v, const std::string& p) {
      internal::apply_contract(doc_, v, p, enforce_);
    });
    each("controls", [&](const json& v, const std::string& p) {
      internal::apply_control(doc_, v, p, enforce_);
    });
    each("annotations", [&](const json& v, const std::string& p) {
      internal::apply_annotation(doc_, v, p, enforce_);
    });

    if (options_.mode_override) doc_.force_mode(*options_.mode_override);
    doc_.derive_namespace_membership();
    return std::move(doc_);
  }

 private:
  template <typename Fn>
  void each(const char* key, Fn&& fn) {
    if (!root_.contains(key)) return;
    std::string path = pointer("", key);
    const json& items = root_[key];
    if (!items.is_array()) schema_fail(path, "expected an array");
    for (std::size_t i = 0; i < items.size(); ++i) {
      fn(items[i], pointer(path, i));
    }
  }

  void prefixes(const json& value) {
    if (!value.is_object()) schema_fail("/prefixes", "expected an object");
    for (const auto& [prefix, uri] : value.items()) {
      std::string path = pointer("/prefixes", prefix);
      std::string text = internal::string_at(uri, path);
      internal::at_path(path, [&] { doc_.declare_namespace(prefix, text); });
    }
  }

  void check_name(const QualifiedName& name, const std::string& path) {
    if (enforce_) {
      internal::at_path(path, [&] { doc_.require_resolvable(name); });
    }
  }

  void environments(const json& value, const std::string& path,
                    const std::optional<QualifiedName>& parent) {
    if (!value.is_object()) schema_fail(path, "expected an object");
    for (const auto& [key, entry] : value.items()) {
      std::string entry_path = pointer(path, key);
      auto id = QualifiedName::try_parse(key);
      if (!id) {
        schema_fail(entry_path, "malformed environment id '" + key + "'",
                    ErrorCode::kInvalidIdentifier);
      }
      if (!entry.is_object()) schema_fail(entry_path, "expected an object");
      DataEnvironment env;
      env.id = *id;
      env.parent = parent;
      if (entry.contains("uri")) {
        env.uri = internal::string_at(entry["uri"], pointer(entry_path, "uri"));
      }
      if (entry.contains("parent")) {
        env.parent = internal::qname_at(entry["parent"],
                                        pointer(entry_path, "parent"));
      }
      if (entry.contains("attributes")) {
        env.attributes = internal::attributes_at(
            entry["attributes"], pointer(entry_path, "attributes"));
      }
      if (entry.contains("members")) {
        env.members = internal::qname_set_at(entry["members"],
                                             pointer(entry_path, "members"));
      }
      internal::at_path(entry_path, [&] {
        internal::insert_gated_environment(doc_, env, enforce_);
      });
      if (entry.contains("children")) {
        environments(entry["children"], pointer(entry_path, "children"), *id);
      }
    }
  }

  void element(const json& value, const std::string& path) {
    std::string kind_path = pointer(path, "kind");
    std::string kind_text = internal::string_at(
        internal::require_member(value, "kind", path), kind_path);
    auto kind = parse_element_kind(kind_text);
    if (!kind) schema_fail(kind_path, "unknown element kind '" + kind_text + "'");
    Element el;
    el.kind = *kind;
    el.id = internal::qname_at(internal::require_member(value, "id", path),
                               pointer(path, "id"));
    check_name(el.id, pointer(path, "id"));
    if (value.contains("attributes")) {
      el.attributes = internal::attributes_at(value["attributes"],
                                              pointer(path, "attributes"));
      for (const auto& [key, v] : el.attributes) {
        check_name(key, pointer(path, "attributes"));
      }
    }
    if (value.contains("startTime")) {
      el.start_time = internal::string_at(value["startTime"],
                                          pointer(path, "startTime"));
    }
    if (value.contains("endTime")) {
      el.end_time =
          internal::string_at(value["endTime"], pointer(path, "endTime"));
    }
    doc_.insert_element(std::move(el));
  }

  void relation(const json& value, const std::string& path) {
    std::string kind_path = pointer(path, "kind");
    std::string kind_text = internal::string_at(
        internal::require_member(value, "kind", path), kind_path);
    if (parse_environment_relation_kind(kind_text)) {
      internal::apply_environment_relation(doc_, value, path, enforce_);
      return;
    }
    auto kind = parse_relation_kind(kind_text);
    if (!kind) {
      schema_fail(kind_path, "unknown relation kind '" + kind_text + "'",
                  ErrorCode::kUnknownRelationKind);
    }
    Relation rel;
    rel.kind = *kind;
    rel.subject = internal::qname_at(
        internal::require_member(value, "subject", path),
        pointer(path, "subject"));
    rel.object = internal::qname_at(
        internal::require_member(value, "object", path),
        pointer(path, "object"));
    check_name(rel.subject, pointer(path, "subject"));
    check_name(rel.object, pointer(path, "object"));
    if (value.contains("id")) {
      rel.id = internal::qname_at(value["id"], pointer(path, "id"));
      check_name(*rel.id, pointer(path, "id"));
    }
    if (value.contains("attributes")) {
      rel.attributes = internal::attributes_at(value["attributes"],
                                               pointer(path, "attributes"));
    }
    doc_.insert_relation(std::move(rel));
  }

  const json& root_;
  bool enforce_;
  ParseOptions options_;
  ProvDocument doc_;
};

}  // namespace

std::string serialize_json(const ProvDocument& doc) {
  json out = json::object();
  out["mode"] = std::string(to_string(doc.mode()));
  json prefixes = json::object();
  for (const auto& [prefix, uri] : doc.namespaces().declared()) {
    prefixes[prefix] = uri;
  }
  out["prefixes"] = prefixes;
  out["environments"] = EnvironmentWriter(doc).run();

  std::vector<Element> elements(doc.elements().begin(), doc.elements().end());
  std::sort(elements.begin(), elements.end());
  json element_array = json::array();
  for (const auto& el : elements) element_array.push_back(element_json(el));
  out["elements"] = element_array;

  std::vector<Relation> relations(doc.relations().begin(),
                                  doc.relations().end());
  std::sort(relations.begin(), relations.end());
  json relation_array = json::array();
  for (const auto& rel : relations) relation_array.push_back(relation_json(rel));
  for (const auto& rel : internal::environment_relations_json(doc)) {
    relation_array.push_back(rel);
  }
  out["relations"] = relation_array;
  out["contracts"] = internal::contracts_json(doc);
  out["controls"] = internal::controls_json(doc);
  out["annotations"] = internal::annotations_json(doc);
  return out.dump(2) + "\n";
}

ProvDocument parse_json(std::string_view text, const ParseOptions& options) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(ErrorCode::kParseError, "", e.what());
  }
  return JsonReader(root, options).run();
}

}  // namespace deprov
