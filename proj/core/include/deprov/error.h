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

#ifndef DEPROV_ERROR_H_
#define DEPROV_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace deprov {

/// Typed failure reasons raised by the library. Every operation that can
/// fail throws a deprov::Error (or a subclass) carrying one of these codes.
enum class ErrorCode {
  kInvalidIdentifier,
  kInvalidUri,
  kUnresolvedPrefix,
  kPrefixConflict,
  kDuplicateId,
  kUnknownRelationKind,
  kNestingUnsupported,
  kAttributesUnsupported,
  kRelationUnsupported,
  kContractsUnsupported,
  kAnnotationUnsupported,
  kCycleError,
  kMalformedSegment,
  kMalformedUri,
  kSelfRelation,
  kContainmentMismatch,
  kDuplicateControlRecord,
  kMembershipConflict,
  kInvalidContract,
  kUnknownEnvironment,
  kUnknownRelation,
  kUnknownNode,
  kAmbiguousKind,
  kParseError,
  kSchemaError,
  kUnsupported,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace deprov

#endif  // DEPROV_ERROR_H_
