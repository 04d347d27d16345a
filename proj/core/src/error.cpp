// Copyright 2026 The Orbigrpd Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "orbi/error.hpp"

namespace orbi {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidSpace: return "INVALID_SPACE";
    case ErrorCode::kUndefinedVertex: return "UNDEFINED_VERTEX";
    case ErrorCode::kCodomainMismatch: return "CODOMAIN_MISMATCH";
    case ErrorCode::kInvalidGroup: return "INVALID_GROUP";
    case ErrorCode::kInvalidAction: return "INVALID_ACTION";
    case ErrorCode::kGlueNotIso: return "GLUE_NOT_ISO";
    case ErrorCode::kCompositionNotClosed: return "COMPOSITION_NOT_CLOSED";
    case ErrorCode::kBadOverlap: return "BAD_OVERLAP";
    case ErrorCode::kNotEtale: return "NOT_ETALE";
    case ErrorCode::kBadWitness: return "BAD_WITNESS";
    case ErrorCode::kParseError: return "PARSE_ERROR";
    case ErrorCode::kDanglingId: return "DANGLING_ID";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

}  // namespace orbi
