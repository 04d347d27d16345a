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

#ifndef ORBI_ERROR_HPP_
#define ORBI_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbi {

enum class ErrorCode {
  kInvalidSpace,
  kUndefinedVertex,
  kCodomainMismatch,
  kInvalidGroup,
  kInvalidAction,
  kGlueNotIso,
  kCompositionNotClosed,
  kBadOverlap,
  kNotEtale,
  kBadWitness,
  kParseError,
  kDanglingId,
  kInvalidArgument,
};

std::string_view to_string(ErrorCode code);

// All library failures that are not "check failed" results are reported by
// throwing Error. Validators return violation lists instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace orbi

#endif  // ORBI_ERROR_HPP_
