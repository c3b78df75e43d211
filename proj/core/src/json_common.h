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

// JSON fragments shared by the sidecar block of the text form and the JSON
// form. Internal to the library.

#ifndef DEPROV_SRC_JSON_COMMON_H_
#define DEPROV_SRC_JSON_COMMON_H_

#include <set>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "deprov/document.h"
#include "deprov/json_io.h"

namespace deprov::internal {

using nlohmann::json;

// Appends an escaped reference token to a JSON pointer.
std::string pointer(const std::string& base, std::string_view key);
std::string pointer(const std::string& base, std::size_t index);

[[noreturn]] void schema_fail(const std::string& path,
                              const std::string& message,
                              ErrorCode code = ErrorCode::kSchemaError);

// Runs `fn`, turning a plain deprov::Error into a SchemaError at `path`.
template <typename Fn>
void at_path(const std::string& path, Fn&& fn) {
  try {
    fn();
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(e.code(), path, e.what());
  }
}

const json& require_member(const json& object, const char* key,
                           const std::string& path);
std::string string_at(const json& value, const std::string& path);
QualifiedName qname_at(const json& value, const std::string& path);
std::set<QualifiedName> qname_set_at(const json& value,
                                     const std::string& path);

json to_json(const AttributeValue& value);
json to_json(const Attributes& attributes);
AttributeValue attribute_value_at(const json& value, const std::string& path);
Attributes attributes_at(const json& value, const std::string& path);

json to_json(const EnvironmentRelation& relation);
json to_json(const Contract& contract);
json to_json(const ControlRecord& record);

// Sorted arrays of the governance records.
json environment_relations_json(const ProvDocument& doc);
json contracts_json(const ProvDocument& doc);
json controls_json(const ProvDocument& doc);
json annotations_json(const ProvDocument& doc);

// Each applies one record. With `enforce` the checked operation from
// environment.h is used, otherwise the record is inserted as written.
void apply_environment_relation(ProvDocument& doc, const json& value,
                                const std::string& path, bool enforce);
void apply_contract(ProvDocument& doc, const json& value,
                    const std::string& path, bool enforce);
void apply_control(ProvDocument& doc, const json& value,
                   const std::string& path, bool enforce);
void apply_annotation(ProvDocument& doc, const json& value,
                      const std::string& path, bool enforce);

// Inserts an environment as written, enforcing only the mode gates for
// nesting and attributes when `enforce` is set.
void insert_gated_environment(ProvDocument& doc, DataEnvironment environment,
                              bool enforce);

// The sidecar object: "environments" (namespace encodings only),
// "relations", "contracts", "controls", "annotations". Empty sections are
// omitted.
json sidecar_json(const ProvDocument& doc);
void apply_sidecar(ProvDocument& doc, const json& sidecar,
                   const std::string& base, bool enforce);

}  // namespace deprov::internal

#endif  // DEPROV_SRC_JSON_COMMON_H_
