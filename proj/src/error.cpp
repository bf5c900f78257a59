// Copyright 2026 The Magic Toolkit Authors
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

#include "magic/error.hpp"

namespace magic {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kDimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::kNotHermitian: return "NOT_HERMITIAN";
    case ErrorCode::kNotDensityMatrix: return "NOT_DENSITY_MATRIX";
    case ErrorCode::kNonFinite: return "NON_FINITE";
    case ErrorCode::kSizeCapExceeded: return "SIZE_CAP_EXCEEDED";
    case ErrorCode::kMixedState: return "MIXED_STATE";
    case ErrorCode::kInfeasible: return "INFEASIBLE";
    case ErrorCode::kNumericalFailure: return "NUMERICAL_FAILURE";
    case ErrorCode::kEmptyDictionary: return "EMPTY_DICTIONARY";
    case ErrorCode::kInteriorPoint: return "INTERIOR_POINT";
    case ErrorCode::kNormPrecondition: return "NORM_PRECONDITION";
    case ErrorCode::kMalformedHeader: return "MALFORMED_HEADER";
    case ErrorCode::kWrongWidth: return "WRONG_WIDTH";
    case ErrorCode::kLiteralOutOfRange: return "LITERAL_OUT_OF_RANGE";
    case ErrorCode::kDuplicateVariable: return "DUPLICATE_VARIABLE";
    case ErrorCode::kCapacityExceeded: return "CAPACITY_EXCEEDED";
    case ErrorCode::kNotTracePreserving: return "NOT_TRACE_PRESERVING";
    case ErrorCode::kMalformedFile: return "MALFORMED_FILE";
    case ErrorCode::kUnknownFlag: return "UNKNOWN_FLAG";
    case ErrorCode::kIo: return "IO_ERROR";
  }
  return "UNKNOWN";
}

void fail(ErrorCode code, const std::string& message) {
  throw MagicError(code, message);
}

}  // namespace magic
