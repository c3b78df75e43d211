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

#ifndef DEPROV_JSON_IO_H_
#define DEPROV_JSON_IO_H_

#include <string>
#include <string_view>

#include "deprov/document.h"
#include "deprov/error.h"
#include "deprov/provn.h"

namespace deprov {

/// A JSON document that does not match the layout. `path` is a JSON
/// pointer to the offending value, e.g. "/relations/3/kind".
class SchemaError : public Error {
 public:
  SchemaError(ErrorCode code, std::string path, const std::string& message);

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Top-level keys: "mode", "prefixes", "environments" (nested objects
/// mirroring the forest), "elements", "relations" (core and environment
/// relation kinds), "contracts", "controls", "annotations".
std::string serialize_json(const ProvDocument& doc);

ProvDocument parse_json(std::string_view text,
                        const ParseOptions& options = {});

}  // namespace deprov

#endif  // DEPROV_JSON_IO_H_
