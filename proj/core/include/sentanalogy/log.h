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

#ifndef SENTANALOGY_LOG_H_
#define SENTANALOGY_LOG_H_

#include <functional>
#include <string_view>

namespace sentanalogy {

enum class LogLevel { kInfo, kWarning };

using LogSink = std::function<void(LogLevel, std::string_view)>;

// Replaces the process-wide sink and returns the previous one. The default
// sink writes warnings to stderr and drops info messages. Passing an empty
// function silences all logging.
LogSink SetLogSink(LogSink sink);

void LogInfo(std::string_view message);
void LogWarning(std::string_view message);

}  // namespace sentanalogy

#endif  // SENTANALOGY_LOG_H_
