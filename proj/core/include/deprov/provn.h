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

// Extended PROV-N: the W3C statement subset (entity, activity, agent, eight
// relations, bundle, prefix) plus nested bundles, attribute lists on bundle
// headers, an `@mode` directive and a trailing `@sidecar` JSON block. The
// grammar is documented in docs/grammar.md.

#ifndef DEPROV_PROVN_H_
#define DEPROV_PROVN_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "deprov/document.h"
#include "deprov/error.h"

namespace deprov {

struct SourcePosition {
  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based, in bytes
  std::size_t offset = 0;  // 0-based byte offset

  bool operator==(const SourcePosition&) const = default;
};

struct SourceSpan {
  SourcePosition begin;
  SourcePosition end;  // exclusive

  bool operator==(const SourceSpan&) const = default;
};

/// A syntax error, or a document-level error (e.g. nesting under a plain
/// bundle header) raised while building the parsed document. `code()` is
/// kParseError for syntax problems and the underlying code otherwise.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, SourceSpan span, std::string expected,
             std::string found, const std::string& detail = "");

  const SourceSpan& span() const { return span_; }
  const std::string& expected() const { return expected_; }
  // Offending token as written; empty at end of input.
  const std::string& found() const { return found_; }

 private:
  SourceSpan span_;
  std::string expected_;
  std::string found_;
};

struct ParseOptions {
  // When true, mode gating and environment-operation rules are enforced
  // while building. When false the document is built as written so the
  // validator can report on it.
  bool enforce_mode = true;
  // Replaces the header mode after parsing.
  std::optional<EncodingMode> mode_override;
};

ProvDocument parse_document(std::string_view text,
                            const ParseOptions& options = {});

/// Canonical text: mode directive, prefixes, environments in pre-order
/// (bundle encodings), remaining elements grouped by kind and sorted by id,
/// remaining relations sorted by kind then ids, sidecar last.
std::string serialize_provn(const ProvDocument& doc);

// Escapes a string for use inside a PROV-N string literal.
std::string escape_provn_string(std::string_view text);

// Writes an attribute list "[k=v, ...]" in canonical order.
std::string format_provn_attributes(const Attributes& attributes);

// Writes a single element or relation statement.
std::string format_provn_statement(const Element& element);
std::string format_provn_statement(const Relation& relation);

}  // namespace deprov

#endif  // DEPROV_PROVN_H_
