// Copyright 2026 The evaug Authors
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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace evaug {

enum class ErrorCode : std::uint8_t {
  kConfig,      // invalid parameters or configuration
  kData,        // input data violates a domain invariant
  kParse,       // malformed file or text
  kIo,          // filesystem failure
  kLogic,       // caller broke a precondition
  kDegenerate,  // geometric input with no valid answer
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library is an evaug::Error. The code lets
// front ends map failures onto exit statuses without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void throw_config(const std::string& message);
[[noreturn]] void throw_data(const std::string& message);
[[noreturn]] void throw_parse(const std::string& message);
[[noreturn]] void throw_io(const std::string& message);
[[noreturn]] void throw_logic(const std::string& message);
[[noreturn]] void throw_degenerate(const std::string& message);

}  // namespace evaug
