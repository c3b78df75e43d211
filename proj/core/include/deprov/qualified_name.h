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

#ifndef DEPROV_QUALIFIED_NAME_H_
#define DEPROV_QUALIFIED_NAME_H_

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace deprov {

inline constexpr std::string_view kProvPrefix = "prov";
inline constexpr std::string_view kProvNamespace = "http://www.w3.org/ns/prov#";
inline constexpr std::string_view kXsdPrefix = "xsd";
inline constexpr std::string_view kXsdNamespace =
    "http://www.w3.org/2001/XMLSchema#";

// Extension vocabulary for data-environment attributes and relations.
inline constexpr std::string_view kDePrefix = "de";
inline constexpr std::string_view kDeNamespace =
    "http://example.org/de-prov/ns#";

bool is_valid_prefix(std::string_view prefix);
bool is_valid_local_name(std::string_view local);

/// True for URIs of the form `scheme:rest` with a non-empty rest.
bool is_absolute_uri(std::string_view uri);

/// A prefix-scoped identifier such as `gond:entity_001`. The prefix is
/// resolved against a NamespaceTable; the name itself carries no URI.
class QualifiedName {
 public:
  QualifiedName() = default;
  // Throws Error(kInvalidIdentifier) when either part is malformed.
  QualifiedName(std::string prefix, std::string local);

  // Parses "prefix:local".
  static QualifiedName parse(std::string_view text);
  static std::optional<QualifiedName> try_parse(std::string_view text);

  const std::string& prefix() const { return prefix_; }
  const std::string& local() const { return local_; }
  std::string str() const { return prefix_ + ":" + local_; }
  bool empty() const { return local_.empty(); }

  auto operator<=>(const QualifiedName&) const = default;

 private:
  std::string prefix_;
  std::string local_;
};

std::ostream& operator<<(std::ostream& os, const QualifiedName& name);

/// Convenience for `de:<local>`.
QualifiedName de_name(std::string_view local);
QualifiedName prov_name(std::string_view local);

/// Prefix -> URI bindings. `prov` and `xsd` are predefined and never need
/// an explicit declaration.
class NamespaceTable {
 public:
  // Declares prefix -> uri. Redeclaring an identical binding is a no-op.
  // Throws kPrefixConflict when the prefix is already bound elsewhere and
  // kInvalidUri / kInvalidIdentifier for malformed input.
  void declare(const std::string& prefix, const std::string& uri);

  std::optional<std::string> uri_of(std::string_view prefix) const;
  bool contains(std::string_view prefix) const {
    return uri_of(prefix).has_value();
  }
  std::optional<std::string> resolve(const QualifiedName& name) const;

  // Explicit declarations only (predefined prefixes excluded).
  const std::map<std::string, std::string, std::less<>>& declared() const {
    return declared_;
  }

  bool operator==(const NamespaceTable&) const = default;

 private:
  std::map<std::string, std::string, std::less<>> declared_;
};

}  // namespace deprov

#endif  // DEPROV_QUALIFIED_NAME_H_
