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

#include "deprov/qualified_name.h"

#include <cctype>

#include "deprov/error.h"

namespace deprov {
namespace {

bool is_alpha(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0;
}
bool is_alnum(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

}  // namespace

bool is_valid_prefix(std::string_view prefix) {
  if (prefix.empty()) return false;
  if (!is_alpha(prefix.front()) && prefix.front() != '_') return false;
  for (char c : prefix) {
    if (!is_alnum(c) && c != '_' && c != '-' && c != '.') return false;
  }
  return prefix.back() != '.';
}

bool is_valid_local_name(std::string_view local) {
  if (local.empty()) return false;
  for (char c : local) {
    if (!is_alnum(c) && c != '_' && c != '-' && c != '.') return false;
  }
  return local.back() != '.';
}

bool is_absolute_uri(std::string_view uri) {
  auto colon = uri.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  if (!is_alpha(uri.front())) return false;
  for (char c : uri.substr(0, colon)) {
    if (!is_alnum(c) && c != '+' && c != '-' && c != '.') return false;
  }
  if (colon + 1 >= uri.size()) return false;
  for (char c : uri) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '<' || c == '>' ||
        c == '"') {
      return false;
    }
  }
  return true;
}

QualifiedName::QualifiedName(std::string prefix, std::string local)
    : prefix_(std::move(prefix)), local_(std::move(local)) {
  if (!is_valid_prefix(prefix_)) {
    throw Error(ErrorCode::kInvalidIdentifier,
                "invalid namespace prefix '" + prefix_ + "'");
  }
  if (!is_valid_local_name(local_)) {
    throw Error(ErrorCode::kInvalidIdentifier,
                "invalid local name '" + local_ + "' in " + prefix_ + ":" +
                    local_);
  }
}

std::optional<QualifiedName> QualifiedName::try_parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  auto prefix = text.substr(0, colon);
  auto local = text.substr(colon + 1);
  if (!is_valid_prefix(prefix) || !is_valid_local_name(local)) {
    return std::nullopt;
  }
  return QualifiedName(std::string(prefix), std::string(local));
}

QualifiedName QualifiedName::parse(std::string_view text) {
  auto parsed = try_parse(text);
  if (!parsed) {
    throw Error(ErrorCode::kInvalidIdentifier,
                "malformed qualified name '" + std::string(text) + "'");
  }
  return *parsed;
}

std::ostream& operator<<(std::ostream& os, const QualifiedName& name) {
  return os << name.str();
}

QualifiedName de_name(std::string_view local) {
  return QualifiedName(std::string(kDePrefix), std::string(local));
}

QualifiedName prov_name(std::string_view local) {
  return QualifiedName(std::string(kProvPrefix), std::string(local));
}

void NamespaceTable::declare(const std::string& prefix,
                             const std::string& uri) {
  if (!is_valid_prefix(prefix)) {
    throw Error(ErrorCode::kInvalidIdentifier,
                "invalid namespace prefix '" + prefix + "'");
  }
  if (!is_absolute_uri(uri)) {
    throw Error(ErrorCode::kInvalidUri,
                "namespace uri for '" + prefix + "' is not absolute: " + uri);
  }
  auto existing = uri_of(prefix);
  if (existing) {
    if (*existing == uri) return;
    throw Error(ErrorCode::kPrefixConflict,
                "prefix '" + prefix + "' already bound to <" + *existing +
                    ">, cannot rebind to <" + uri + ">");
  }
  declared_.emplace(prefix, uri);
}

std::optional<std::string> NamespaceTable::uri_of(
    std::string_view prefix) const {
  if (prefix == kProvPrefix) return std::string(kProvNamespace);
  if (prefix == kXsdPrefix) return std::string(kXsdNamespace);
  auto it = declared_.find(prefix);
  if (it == declared_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> NamespaceTable::resolve(
    const QualifiedName& name) const {
  auto uri = uri_of(name.prefix());
  if (!uri) return std::nullopt;
  return *uri + name.local();
}

}  // namespace deprov
