// Copyright 2026 The polarblock Authors
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

#ifndef POLARBLOCK_ERROR_HPP_
#define POLARBLOCK_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace polarblock {

enum class ErrorCode {
  kInvalidArgument = 1,
  kUnsupported = 2,
  kBudgetExceeded = 3,
  kParse = 4,
  kCheckFailed = 5,
};

// The single exception type thrown by the core library. The C API maps the
// code onto pb_status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void Require(bool cond, const std::string& what,
                    ErrorCode code = ErrorCode::kInvalidArgument) {
  if (!cond) throw Error(code, what);
}

}  // namespace polarblock

#endif  // POLARBLOCK_ERROR_HPP_
