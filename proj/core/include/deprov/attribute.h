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

#ifndef DEPROV_ATTRIBUTE_H_
#define DEPROV_ATTRIBUTE_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "deprov/qualified_name.h"

namespace deprov {

/// An attribute value: a string (optionally tagged with a datatype such as
/// xsd:dateTime), an integer, or a qualified name.
class AttributeValue {
 public:
  using Variant = std::variant<std::string, std::int64_t, QualifiedName>;

  AttributeValue() : value_(std::string()) {}
  AttributeValue(std::string text,
                 std::optional<QualifiedName> datatype = std::nullopt)
      : value_(std::move(text)), datatype_(std::move(datatype)) {}
  AttributeValue(const char* text) : value_(std::string(text)) {}
  AttributeValue(std::int64_t number) : value_(number) {}
  AttributeValue(int number) : value_(static_cast<std::int64_t>(number)) {}
  AttributeValue(QualifiedName name) : value_(std::move(name)) {}

  const Variant& value() const { return value_; }
  const std::optional<QualifiedName>& datatype() const { return datatype_; }

  bool is_string() const { return std::holds_alternative<std::string>(value_); }
  bool is_integer() const {
    return std::holds_alternative<std::int64_t>(value_);
  }
  bool is_qualified_name() const {
    return std::holds_alternative<QualifiedName>(value_);
  }
  const std::string* as_string() const {
    return std::get_if<std::string>(&value_);
  }
  const std::int64_t* as_integer() const {
    return std::get_if<std::int64_t>(&value_);
  }
  const QualifiedName* as_qualified_name() const {
    return std::get_if<QualifiedName>(&value_);
  }

  // Human-readable rendering, e.g. "Government", 42, 'de:Contract'.
  std::string display() const;

  auto operator<=>(const AttributeValue&) const = default;

 private:
  Variant value_;
  std::optional<QualifiedName> datatype_;
};

// Keys are unique; writing an existing key replaces its value.
using Attributes = std::map<QualifiedName, AttributeValue>;

/// Merges `update` into `target`, overwriting duplicate keys.
void merge_attributes(Attributes& target, const Attributes& update);

/// Returns the string value stored under `key`, if any.
std::optional<std::string> string_attribute(const Attributes& attributes,
                                            const QualifiedName& key);

}  // namespace deprov

#endif  // DEPROV_ATTRIBUTE_H_
