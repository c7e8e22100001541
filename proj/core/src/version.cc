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

#include "evaug/version.h"

namespace evaug {

VersionInfo version_info() {
  return {EVAUG_VERSION_STRING,
          "EVS1 v" + std::to_string(kEventFormatVersion),
          "EVH1 v" + std::to_string(kHistogramFormatVersion)};
}

std::string version_string() {
  const VersionInfo v = version_info();
  return "evaug " + v.library + " (events " + v.event_format +
         ", histograms " + v.histogram_format + ")";
}

}  // namespace evaug
