// Copyright 2026 The dispersim authors
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

#include "dispersim/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <mutex>

namespace dispersim::log {

Level level() {
  static const Level lvl = [] {
    const char* env = std::getenv("DDQ_LOG");
    if (env == nullptr) return Level::error;
    if (std::strcmp(env, "debug") == 0) return Level::debug;
    if (std::strcmp(env, "info") == 0) return Level::info;
    return Level::error;
  }();
  return lvl;
}

namespace {
std::mutex io_mutex;

void emit(const char* tag, const std::string& msg) {
  std::lock_guard<std::mutex> lock(io_mutex);
  std::fprintf(stderr, "[%s] %s\n", tag, msg.c_str());
}
}  // namespace

void error(const std::string& msg) { emit("error", msg); }

void info(const std::string& msg) {
  if (level() >= Level::info) emit("info", msg);
}

void debug(const std::string& msg) {
  if (level() >= Level::debug) emit("debug", msg);
}

}  // namespace dispersim::log
