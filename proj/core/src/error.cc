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

#include "deprov/error.h"

namespace deprov {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidIdentifier: return "InvalidIdentifier";
    case ErrorCode::kInvalidUri: return "InvalidUri";
    case ErrorCode::kUnresolvedPrefix: return "UnresolvedPrefix";
    case ErrorCode::kPrefixConflict: return "PrefixConflict";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kUnknownRelationKind: return "UnknownRelationKind";
    case ErrorCode::kNestingUnsupported: return "NestingUnsupported";
    case ErrorCode::kAttributesUnsupported: return "AttributesUnsupported";
    case ErrorCode::kRelationUnsupported: return "RelationUnsupported";
    case ErrorCode::kContractsUnsupported: return "ContractsUnsupported";
    case ErrorCode::kAnnotationUnsupported: return "AnnotationUnsupported";
    case ErrorCode::kCycleError: return "CycleError";
    case ErrorCode::kMalformedSegment: return "MalformedSegment";
    case ErrorCode::kMalformedUri: return "MalformedUri";
    case ErrorCode::kSelfRelation: return "SelfRelation";
    case ErrorCode::kContainmentMismatch: return "ContainmentMismatch";
    case ErrorCode::kDuplicateControlRecord: return "DuplicateControlRecord";
    case ErrorCode::kMembershipConflict: return "MembershipConflict";
    case ErrorCode::kInvalidContract: return "InvalidContract";
    case ErrorCode::kUnknownEnvironment: return "UnknownEnvironment";
    case ErrorCode::kUnknownRelation: return "UnknownRelation";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kAmbiguousKind: return "AmbiguousKind";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kUnsupported: return "Unsupported";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

}  // namespace deprov
