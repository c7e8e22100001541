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

#include "evaug/errors.h"

namespace evaug {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kConfig:
      return "config";
    case ErrorCode::kData:
      return "data";
    case ErrorCode::kParse:
      return "parse";
    case ErrorCode::kIo:
      return "io";
    case ErrorCode::kLogic:
      return "logic";
    case ErrorCode::kDegenerate:
      return "degenerate";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + " error: " +
                         message),
      code_(code) {}

void throw_config(const std::string& message) {
  throw Error(ErrorCode::kConfig, message);
}
void throw_data(const std::string& message) {
  throw Error(ErrorCode::kData, message);
}
void throw_parse(const std::string& message) {
  throw Error(ErrorCode::kParse, message);
}
void throw_io(const std::string& message) {
  throw Error(ErrorCode::kIo, message);
}
void throw_logic(const std::string& message) {
  throw Error(ErrorCode::kLogic, message);
}
void throw_degenerate(const std::string& message) {
  throw Error(ErrorCode::kDegenerate, message);
}

}  // namespace evaug
