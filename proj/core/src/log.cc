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

#include "sentanalogy/log.h"

#include <iostream>
#include <mutex>
#include <utility>

namespace sentanalogy {
namespace {

std::mutex& SinkMutex() {
  static std::mutex mu;
  return mu;
}

LogSink& Sink() {
  static LogSink sink = [](LogLevel level, std::string_view message) {
    if (level == LogLevel::kWarning) {
      std::cerr << "warning: " << message << '\n';
    }
  };
  return sink;
}

void Emit(LogLevel level, std::string_view message) {
  std::lock_guard<std::mutex> lock(SinkMutex());
  if (Sink()) Sink()(level, message);
}

}  // namespace

LogSink SetLogSink(LogSink sink) {
  std::lock_guard<std::mutex> lock(SinkMutex());
  return std::exchange(Sink(), std::move(sink));
}

void LogInfo(std::string_view message) { Emit(LogLevel::kInfo, message); }
void LogWarning(std::string_view message) {
  Emit(LogLevel::kWarning, message);
}

}  // namespace sentanalogy
