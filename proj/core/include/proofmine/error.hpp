// Copyright 2026 The proofmine Authors
//
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

#ifndef PROOFMINE_ERROR_HPP_
#define PROOFMINE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace proofmine {

enum class ErrorCode {
  kTypeContainsX,
  kIllTypedApplication,
  kFuelExhausted,
  kUnsupportedType,
  kEnumerationBudgetExceeded,
  kNegativeInput,
  kNotDeltaShape,
  kNonPositiveGamma,
  kOutsideDomain,
  kNoConvergence,
  kNotAvailable,
  kPreconditionViolated,
  kPartialResolventGuard,
  kParseError,
  kUnboundVariable,
  kDiverged,
};

std::string_view ErrorCodeName(ErrorCode code);

/// Exception carrying a machine-readable code. Every failure raised by the
/// library is an Error; messages are meant for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kTypeContainsX: return "TypeContainsX";
    case ErrorCode::kIllTypedApplication: return "IllTypedApplication";
    case ErrorCode::kFuelExhausted: return "FuelExhausted";
    case ErrorCode::kUnsupportedType: return "UnsupportedType";
    case ErrorCode::kEnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
    case ErrorCode::kNegativeInput: return "NegativeInput";
    case ErrorCode::kNotDeltaShape: return "NotDeltaShape";
    case ErrorCode::kNonPositiveGamma: return "NonPositiveGamma";
    case ErrorCode::kOutsideDomain: return "OutsideDomain";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kNotAvailable: return "NotAvailable";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kPartialResolventGuard: return "PartialResolventGuard";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnboundVariable: return "UnboundVariable";
    case ErrorCode::kDiverged: return "Diverged";
  }
  return "Unknown";
}

}  // namespace proofmine

#endif  // PROOFMINE_ERROR_HPP_
