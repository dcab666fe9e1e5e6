//
// Copyright 2026 The sentanalogy Authors
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
//

#include "sentanalogy/error.h"

#include <string>

namespace sentanalogy {

ParseError::ParseError(const std::string& source, std::size_t line,
                       const std::string& what)
    : Error(source + (line > 0 ? ":" + std::to_string(line) : "") + ": " +
            what),
      line_(line) {}

OovError::OovError(const std::string& token)
    : Error("out-of-vocabulary token '" + token + "'"), token_(token) {}

}  // namespace sentanalogy
