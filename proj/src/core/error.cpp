// Copyright 2026 The projopt Authors
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

#include "core/error.hpp"

namespace projopt {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kDimensionMismatch: return "dimension-mismatch";
    case ErrorCode::kInvalidBox: return "invalid-box";
    case ErrorCode::kEmptyInput: return "empty-input";
    case ErrorCode::kNonFinite: return "non-finite";
    case ErrorCode::kInfeasible: return "infeasible";
    case ErrorCode::kDiverged: return "diverged";
    case ErrorCode::kSingular: return "singular";
    case ErrorCode::kOverdetermined: return "overdetermined";
  }
  return "unknown";
}

}  // namespace projopt
