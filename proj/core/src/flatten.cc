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

#include "deprov/flatten.h"

#include <set>
#include <sstream>

#include "deprov/environment.h"
#include "deprov/provn.h"

namespace deprov {

namespace {

QualifiedName type_key() { return prov_name("type"); }

std::optional<QualifiedName> type_of(const Attributes& attributes) {
  auto it = attributes.find(type_key());
  if (it == attributes.end()) return std::nullopt;
  if (const auto* name = it->second.as_qualified_name()) return *name;
  return std::nullopt;
}

Attributes typed(std::string_view type, Attributes rest = {}) {
  rest[type_key()] = AttributeValue(de_name(type));
  return rest;
}

Attributes without(Attributes attributes, const QualifiedName& key) {
  attributes.erase(key);
  return attributes;
}

void collect(std::set<std::string>& out, const QualifiedName& name) {
  out.insert(name.prefix());
}

void collect(std::set<std::string>& out, const Attributes& attributes) {
  for (const auto& [key, value] : attributes) {
    collect(out, key);
    if (const auto* name = value.as_qualified_name()) collect(out, *name);
    if (value.datatype()) collect(out, *value.datatype());
  }
}

std::set<std::string> used_prefixes(const ProvDocument& doc) {
  std::set<std::string> out;
  for (const auto& el : doc.elements()) {
    collect(out, el.id);
    collect(out, el.attributes);
  }
  for (const auto& rel : doc.relations()) {
    collect(out, rel.subject);
    collect(out, rel.object);
    if (rel.id) collect(out, *rel.id);
    collect(out, rel.attributes);
  }
  for (const auto& [id, env] : doc.environments()) {
    collect(out, id);
    if (env.parent) collect(out, *env.parent);
    for (const auto& member : env.members) collect(out, member);
    collect(out, env.attributes);
  }
  for (const auto& rel : doc.environment_relations()) {
    collect(out, rel.subject);
    collect(out, rel.object);
    collect(out, rel.attributes);
  }
  for (const auto& [id, contract] : doc.contracts()) {
    collect(out, id);
    for (const auto& party : contract.parties) collect(out, party);
    for (const auto& flow : contract.governs_flows) collect(out, flow);
    collect(out, contract.terms);
  }
  for (const auto& record : doc.controls()) {
    collect(out, record.holder);
    collect(out, record.target);
  }
  for (const auto& [id, attributes] : doc.annotations()) {
    collect(out, id);
    collect(out, attributes);
  }
  return out;
}

Relation influence(const QualifiedName& subject, const QualifiedName& object,
                   Attributes attributes) {
  Relation rel;
  rel.kind = RelationKind::kWasInfluencedBy;
  rel.subject = subject;
  rel.object = object;
  rel.attributes = std::move(attributes);
  return rel;
}

Element entity(const QualifiedName& id, Attributes attributes) {
  Element el;
  el.kind = ElementKind::kEntity;
  el.id = id;
  el.attributes = std::move(attributes);
  return el;
}

}  // namespace

std::string export_flattened(const ProvDocument& doc) {
  if (doc.mode() != EncodingMode::kBundlesPlus) {
    throw Error(ErrorCode::kUnsupported,
                "flattened export requires a bundles+ document");
  }
  ProvDocument flat(EncodingMode::kBundle);
  for (const auto& [prefix, uri] : doc.namespaces().declared()) {
    flat.declare_namespace(prefix, uri);
  }
  bool needs_de = false;
  for (const auto& [id, env] : doc.environments()) {
    DataEnvironment bundle;
    bundle.id = id;
    bundle.members = env.members;
    flat.insert_environment(std::move(bundle));
    if (!env.attributes.empty()) {
      Attributes attributes = env.attributes;
      attributes[type_key()] = AttributeValue(prov_name("Bundle"));
      flat.insert_element(entity(id, std::move(attributes)));
    }
    if (env.parent) {
      flat.insert_relation(
          influence(id, *env.parent, typed("containedIn")));
      needs_de = true;
    }
  }
  for (const auto& el : doc.elements()) flat.insert_element(el);
  for (const auto& rel : doc.relations()) flat.insert_relation(rel);
  for (const auto& rel : doc.environment_relations()) {
    flat.insert_relation(influence(rel.subject, rel.object,
                                   typed(to_string(rel.kind), rel.attributes)));
    needs_de = true;
  }
  for (const auto& [id, contract] : doc.contracts()) {
    Attributes attributes = typed("Contract", contract.terms);
    if (!contract.governs_flows.empty()) {
      std::string flows;
      for (const auto& flow : contract.governs_flows) {
        if (!flows.empty()) flows += ' ';
        flows += flow.str();
      }
      attributes[de_name("governsFlows")] = AttributeValue(flows);
    }
    flat.insert_element(entity(id, std::move(attributes)));
    for (const auto& party : contract.parties) {
      flat.insert_relation(influence(id, party, typed("party")));
    }
    needs_de = true;
  }
  for (const auto& record : doc.controls()) {
    Attributes attributes = typed("control");
    attributes[de_name("controlType")] =
        AttributeValue(std::string(to_string(record.control_type)));
    attributes[de_name("controlNature")] =
        AttributeValue(std::string(to_string(record.control_nature)));
    attributes[de_name("responsibility")] =
        AttributeValue(std::string(to_string(record.responsibility)));
    flat.insert_relation(
        influence(record.target, record.holder, std::move(attributes)));
    needs_de = true;
  }
  for (const auto& [id, annotation] : doc.annotations()) {
    Attributes attributes = typed("Annotation", annotation);
    attributes[de_name("annotates")] = AttributeValue(id);
    flat.insert_element(entity(
        de_name("annotation_" + id.prefix() + "_" + id.local()),
        std::move(attributes)));
    needs_de = true;
  }
  if (needs_de) {
    // Throws kPrefixConflict when the document binds de elsewhere.
    flat.declare_namespace(std::string(kDePrefix), std::string(kDeNamespace));
  }

  std::string text = serialize_provn(flat);
  const std::string mode_line =
      "  @mode " + std::string(to_string(flat.mode())) + "\n";
  auto at = text.find(mode_line);
  if (at != std::string::npos) text.erase(at, mode_line.size());
  return text;
}

ProvDocument import_flattened(std::string_view text) {
  ParseOptions options;
  options.enforce_mode = false;
  ProvDocument flat = parse_document(text, options);
  ProvDocument doc(EncodingMode::kBundlesPlus);

  for (const auto& [id, bundle] : flat.environments()) {
    DataEnvironment env;
    env.id = id;
    env.members = bundle.members;
    doc.insert_environment(std::move(env));
  }

  const QualifiedName governs_key = de_name("governsFlows");
  const QualifiedName annotates_key = de_name("annotates");
  for (const auto& el : flat.elements()) {
    auto type = type_of(el.attributes);
    bool top_level = flat.environments_of(el.id).empty();
    if (top_level && el.kind == ElementKind::kEntity && type) {
      if (*type == prov_name("Bundle")) {
        if (DataEnvironment* env = doc.mutable_environment(el.id)) {
          merge_attributes(env->attributes, without(el.attributes, type_key()));
          continue;
        }
      } else if (*type == de_name("Contract")) {
        Contract contract;
        contract.id = el.id;
        contract.terms = without(el.attributes, type_key());
        if (auto flows = string_attribute(contract.terms, governs_key)) {
          std::istringstream words(*flows);
          std::string word;
          while (words >> word) {
            contract.governs_flows.insert(QualifiedName::parse(word));
          }
          contract.terms.erase(governs_key);
        }
        if (Contract* existing = doc.mutable_contract(el.id)) {
          existing->terms = contract.terms;
          existing->governs_flows = contract.governs_flows;
        } else {
          doc.insert_contract(std::move(contract));
        }
        continue;
      } else if (*type == de_name("Annotation")) {
        auto it = el.attributes.find(annotates_key);
        if (it != el.attributes.end() && it->second.is_qualified_name()) {
          Attributes annotation =
              without(without(el.attributes, type_key()), annotates_key);
          doc.merge_annotation(*it->second.as_qualified_name(), annotation);
          continue;
        }
      }
    }
    std::optional<QualifiedName> env;
    if (!top_level) env = flat.environments_of(el.id).front();
    doc.insert_element(el, env);
    for (const auto& other : flat.environments_of(el.id)) {
      doc.assign_member(other, el.id);
    }
  }

  for (const auto& rel : flat.relations()) {
    auto type = type_of(rel.attributes);
    if (rel.kind == RelationKind::kWasInfluencedBy && type &&
        type->prefix() == kDePrefix && !rel.id) {
      Attributes rest = without(rel.attributes, type_key());
      const std::string& local = type->local();
      if (local == "containedIn") {
        if (DataEnvironment* env = doc.mutable_environment(rel.subject)) {
          env->parent = rel.object;
          continue;
        }
      } else if (auto kind = parse_environment_relation_kind(local)) {
        doc.insert_environment_relation(
            EnvironmentRelation{*kind, rel.subject, rel.object, rest});
        continue;
      } else if (local == "party") {
        if (Contract* contract = doc.mutable_contract(rel.subject)) {
          contract->parties.insert(rel.object);
        } else {
          Contract fresh;
          fresh.id = rel.subject;
          fresh.parties.insert(rel.object);
          doc.insert_contract(std::move(fresh));
        }
        continue;
      } else if (local == "control") {
        auto field = [&](const char* key) {
          return string_attribute(rest, de_name(key)).value_or("");
        };
        auto control_type = parse_control_type(field("controlType"));
        auto control_nature = parse_control_nature(field("controlNature"));
        auto responsibility = parse_responsibility(field("responsibility"));
        if (control_type && control_nature && responsibility) {
          doc.insert_control(ControlRecord{rel.object, rel.subject,
                                           *control_type, *control_nature,
                                           *responsibility});
          continue;
        }
      }
    }
    doc.insert_relation(rel);
  }

  // The exporter declares de: only for its own vocabulary; keep it only
  // when the rebuilt document still refers to it.
  std::set<std::string> used = used_prefixes(doc);
  ProvDocument out(EncodingMode::kBundlesPlus);
  for (const auto& [prefix, uri] : flat.namespaces().declared()) {
    if (prefix == kDePrefix && used.count(prefix) == 0) continue;
    out.declare_namespace(prefix, uri);
  }
  for (const auto& [id, env] : doc.environments()) out.insert_environment(env);
  for (const auto& el : doc.elements()) out.insert_element(el);
  for (const auto& rel : doc.relations()) out.insert_relation(rel);
  for (const auto& rel : doc.environment_relations()) {
    out.insert_environment_relation(rel);
  }
  for (const auto& [id, contract] : doc.contracts()) out.insert_contract(contract);
  for (const auto& record : doc.controls()) out.insert_control(record);
  for (const auto& [id, annotation] : doc.annotations()) {
    out.merge_annotation(id, annotation);
  }
  return out;
}

}  // namespace deprov
