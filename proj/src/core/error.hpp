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

#ifndef PROJOPT_CORE_ERROR_HPP_
#define PROJOPT_CORE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace projopt {

enum class ErrorCode {
  kInvalidArgument,
  kDimensionMismatch,
  kInvalidBox,
  kEmptyInput,
  kNonFinite,
  kInfeasible,
  kDiverged,
  kSingular,
  kOverdetermined,
};

const char* ErrorCodeName(ErrorCode code);

// All library failures are reported by throwing Error. The C API maps the
// code onto its status enum and keeps the message for the caller.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace projopt

#endif  // PROJOPT_CORE_ERROR_HPP_
