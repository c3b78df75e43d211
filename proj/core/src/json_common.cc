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

#include "json_common.h"

#include <algorithm>
#include <vector>

#include "deprov/environment.h"

namespace deprov::internal {

namespace {

constexpr const char* kQualifiedNameType = "prov:QUALIFIED_NAME";

}  // namespace

std::string pointer(const std::string& base, std::string_view key) {
  std::string out = base;
  out += '/';
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

std::string pointer(const std::string& base, std::size_t index) {
  return base + "/" + std::to_string(index);
}

void schema_fail(const std::string& path, const std::string& message,
                 ErrorCode code) {
  throw SchemaError(code, path, message);
}

const json& require_member(const json& object, const char* key,
                           const std::string& path) {
  if (!object.is_object()) schema_fail(path, "expected an object");
  auto it = object.find(key);
  if (it == object.end()) {
    schema_fail(pointer(path, key),
                std::string("missing required member '") + key + "'");
  }
  return *it;
}

std::string string_at(const json& value, const std::string& path) {
  if (!value.is_string()) schema_fail(path, "expected a string");
  return value.get<std::string>();
}

QualifiedName qname_at(const json& value, const std::string& path) {
  auto name = QualifiedName::try_parse(string_at(value, path));
  if (!name) {
    schema_fail(path, "malformed qualified name '" +
                          value.get<std::string>() + "'",
                ErrorCode::kInvalidIdentifier);
  }
  return *name;
}

std::set<QualifiedName> qname_set_at(const json& value,
                                     const std::string& path) {
  if (!value.is_array()) schema_fail(path, "expected an array");
  std::set<QualifiedName> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.insert(qname_at(value[i], pointer(path, i)));
  }
  return out;
}

json to_json(const AttributeValue& value) {
  if (const auto* name = value.as_qualified_name()) {
    return json{{"$", name->str()}, {"type", kQualifiedNameType}};
  }
  if (const auto* number = value.as_integer()) return json(*number);
  const std::string& text = *value.as_string();
  if (value.datatype()) {
    return json{{"$", text}, {"type", value.datatype()->str()}};
  }
  return json(text);
}

json to_json(const Attributes& attributes) {
  json out = json::object();
  for (const auto& [key, value] : attributes) out[key.str()] = to_json(value);
  return out;
}

AttributeValue attribute_value_at(const json& value, const std::string& path) {
  if (value.is_string()) return AttributeValue(value.get<std::string>());
  if (value.is_number_integer()) {
    return AttributeValue(value.get<std::int64_t>());
  }
  if (value.is_object()) {
    std::string text = string_at(require_member(value, "$", path),
                                 pointer(path, "$"));
    QualifiedName type =
        qname_at(require_member(value, "type", path), pointer(path, "type"));
    if (type.str() == kQualifiedNameType) {
      auto name = QualifiedName::try_parse(text);
      if (!name) {
        schema_fail(pointer(path, "$"), "malformed qualified name '" + text +
                                            "'",
                    ErrorCode::kInvalidIdentifier);
      }
      return AttributeValue(*name);
    }
    return AttributeValue(text, type);
  }
  schema_fail(path, "expected a string, integer or typed value");
}

Attributes attributes_at(const json& value, const std::string& path) {
  if (!value.is_object()) schema_fail(path, "expected an attribute object");
  Attributes out;
  for (const auto& [key, item] : value.items()) {
    std::string item_path = pointer(path, key);
    auto name = QualifiedName::try_parse(key);
    if (!name) {
      schema_fail(item_path, "malformed attribute key '" + key + "'",
                  ErrorCode::kInvalidIdentifier);
    }
    out[*name] = attribute_value_at(item, item_path);
  }
  return out;
}

json to_json(const EnvironmentRelation& relation) {
  json out{{"kind", std::string(to_string(relation.kind))},
           {"subject", relation.subject.str()},
           {"object", relation.object.str()}};
  if (!relation.attributes.empty()) {
    out["attributes"] = to_json(relation.attributes);
  }
  return out;
}

json to_json(const Contract& contract) {
  json parties = json::array();
  for (const auto& party : contract.parties) parties.push_back(party.str());
  json out{{"id", contract.id.str()}, {"parties", parties}};
  if (!contract.terms.empty()) out["terms"] = to_json(contract.terms);
  if (!contract.governs_flows.empty()) {
    json flows = json::array();
    for (const auto& flow : contract.governs_flows) flows.push_back(flow.str());
    out["governsFlows"] = flows;
  }
  return out;
}

json to_json(const ControlRecord& record) {
  return json{{"holder", record.holder.str()},
              {"target", record.target.str()},
              {"controlType", std::string(to_string(record.control_type))},
              {"controlNature", std::string(to_string(record.control_nature))},
              {"responsibility",
               std::string(to_string(record.responsibility))}};
}

json environment_relations_json(const ProvDocument& doc) {
  std::vector<EnvironmentRelation> sorted(doc.environment_relations().begin(),
                                          doc.environment_relations().end());
  std::sort(sorted.begin(), sorted.end());
  json out = json::array();
  for (const auto& relation : sorted) out.push_back(to_json(relation));
  return out;
}

json contracts_json(const ProvDocument& doc) {
  json out = json::array();
  for (const auto& [id, contract] : doc.contracts()) {
    out.push_back(to_json(contract));
  }
  return out;
}

json controls_json(const ProvDocument& doc) {
  std::vector<ControlRecord> sorted(doc.controls().begin(),
                                    doc.controls().end());
  std::sort(sorted.begin(), sorted.end());
  json out = json::array();
  for (const auto& record : sorted) out.push_back(to_json(record));
  return out;
}

json annotations_json(const ProvDocument& doc) {
  json out = json::array();
  for (const auto& [id, attributes] : doc.annotations()) {
    out.push_back(
        json{{"relation", id.str()}, {"attributes", to_json(attributes)}});
  }
  return out;
}

void apply_environment_relation(ProvDocument& doc, const json& value,
                                const std::string& path, bool enforce) {
  std::string kind_path = pointer(path, "kind");
  std::string kind_text =
      string_at(require_member(value, "kind", path), kind_path);
  auto kind = parse_environment_relation_kind(kind_text);
  if (!kind) {
    schema_fail(kind_path, "unknown environment relation kind '" + kind_text +
                               "'",
                ErrorCode::kUnknownRelationKind);
  }
  EnvironmentRelation relation;
  relation.kind = *kind;
  relation.subject = qname_at(require_member(value, "subject", path),
                              pointer(path, "subject"));
  relation.object = qname_at(require_member(value, "object", path),
                             pointer(path, "object"));
  if (value.contains("attributes")) {
    relation.attributes =
        attributes_at(value["attributes"], pointer(path, "attributes"));
  }
  at_path(path, [&] {
    if (enforce) {
      relate_environments(doc, relation.kind, relation.subject,
                          relation.object, relation.attributes);
    } else {
      doc.insert_environment_relation(relation);
    }
  });
}

void apply_contract(ProvDocument& doc, const json& value,
                    const std::string& path, bool enforce) {
  Contract contract;
  contract.id = qname_at(require_member(value, "id", path), pointer(path, "id"));
  contract.parties = qname_set_at(require_member(value, "parties", path),
                                  pointer(path, "parties"));
  if (value.contains("terms")) {
    contract.terms = attributes_at(value["terms"], pointer(path, "terms"));
  }
  if (value.contains("governsFlows")) {
    contract.governs_flows =
        qname_set_at(value["governsFlows"], pointer(path, "governsFlows"));
  }
  at_path(path, [&] {
    if (enforce) {
      record_contract(doc, contract.id, contract.parties, contract.terms,
                      contract.governs_flows);
    } else {
      doc.insert_contract(contract);
    }
  });
}

void apply_control(ProvDocument& doc, const json& value,
                   const std::string& path, bool enforce) {
  ControlRecord record;
  record.holder =
      qname_at(require_member(value, "holder", path), pointer(path, "holder"));
  record.target =
      qname_at(require_member(value, "target", path), pointer(path, "target"));
  auto enum_at = [&](const char* key, auto parse) {
    std::string member_path = pointer(path, key);
    std::string text = string_at(require_member(value, key, path), member_path);
    auto parsed = parse(text);
    if (!parsed) schema_fail(member_path, "invalid value '" + text + "'");
    return *parsed;
  };
  record.control_type = enum_at("controlType", parse_control_type);
  record.control_nature = enum_at("controlNature", parse_control_nature);
  record.responsibility = enum_at("responsibility", parse_responsibility);
  at_path(path, [&] {
    if (enforce) {
      record_control(doc, record);
    } else {
      doc.insert_control(record);
    }
  });
}

void apply_annotation(ProvDocument& doc, const json& value,
                      const std::string& path, bool enforce) {
  QualifiedName relation = qname_at(require_member(value, "relation", path),
                                    pointer(path, "relation"));
  Attributes attributes =
      attributes_at(require_member(value, "attributes", path),
                    pointer(path, "attributes"));
  at_path(path, [&] {
    if (enforce) {
      annotate_relation(doc, relation, attributes);
    } else {
      doc.merge_annotation(relation, attributes);
    }
  });
}

void insert_gated_environment(ProvDocument& doc, DataEnvironment environment,
                              bool enforce) {
  if (enforce) {
    doc.require_resolvable(environment.id);
    if (environment.parent) {
      require_support(doc.mode(), Requirement::kR2NestedEnvironments);
    }
    if (!environment.attributes.empty()) {
      require_support(doc.mode(), Requirement::kR3EnvironmentAttributes);
    }
    for (const auto& [key, value] : environment.attributes) {
      doc.require_resolvable(key);
    }
    if (doc.environment(environment.id) != nullptr) {
      throw Error(ErrorCode::kDuplicateId,
                  "environment " + environment.id.str() + " declared twice");
    }
  }
  doc.insert_environment(std::move(environment));
}

json sidecar_json(const ProvDocument& doc) {
  json out = json::object();
  if (is_namespace_mode(doc.mode()) && !doc.environments().empty()) {
    json environments = json::object();
    for (const auto& [id, env] : doc.environments()) {
      json entry{{"id", id.str()}};
      if (env.parent) entry["parent"] = env.parent->str();
      if (!env.attributes.empty()) {
        entry["attributes"] = to_json(env.attributes);
      }
      environments[env.uri] = entry;
    }
    out["environments"] = environments;
  }
  if (!doc.environment_relations().empty()) {
    out["relations"] = environment_relations_json(doc);
  }
  if (!doc.contracts().empty()) out["contracts"] = contracts_json(doc);
  if (!doc.controls().empty()) out["controls"] = controls_json(doc);
  if (!doc.annotations().empty()) out["annotations"] = annotations_json(doc);
  return out;
}

void apply_sidecar(ProvDocument& doc, const json& sidecar,
                   const std::string& base, bool enforce) {
  if (!sidecar.is_object()) schema_fail(base, "sidecar must be an object");
  for (const auto& [key, value] : sidecar.items()) {
    if (key != "environments" && key != "relations" && key != "contracts" &&
        key != "controls" && key != "annotations") {
      schema_fail(pointer(base, key), "unknown sidecar section '" + key + "'");
    }
  }
  auto array_section = [&](const char* key, auto apply) {
    if (!sidecar.contains(key)) return;
    const json& items = sidecar[key];
    std::string path = pointer(base, key);
    if (!items.is_array()) schema_fail(path, "expected an array");
    for (std::size_t i = 0; i < items.size(); ++i) {
      apply(doc, items[i], pointer(path, i), enforce);
    }
  };

  if (sidecar.contains("environments")) {
    std::string path = pointer(base, "environments");
    if (!is_namespace_mode(doc.mode())) {
      schema_fail(path, "bundle encodings declare environments as bundles");
    }
    const json& environments = sidecar["environments"];
    if (!environments.is_object()) schema_fail(path, "expected an object");
    for (const auto& [uri, entry] : environments.items()) {
      std::string entry_path = pointer(path, uri);
      DataEnvironment env;
      env.uri = uri;
      env.id = qname_at(require_member(entry, "id", entry_path),
                        pointer(entry_path, "id"));
      if (entry.contains("parent")) {
        env.parent = qname_at(entry["parent"], pointer(entry_path, "parent"));
      }
      if (entry.contains("attributes")) {
        env.attributes = attributes_at(entry["attributes"],
                                       pointer(entry_path, "attributes"));
      }
      at_path(entry_path,
              [&] { insert_gated_environment(doc, std::move(env), enforce); });
    }
  }
  array_section("relations", apply_environment_relation);
  array_section("contracts", apply_contract);
  array_section("controls", apply_control);
  array_section("annotations", apply_annotation);
}

}  // namespace deprov::internal
