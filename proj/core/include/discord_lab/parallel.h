// Copyright 2026 The discord_lab Authors
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

#include <cstddef>
#include <functional>

namespace discord_lab {

inline constexpr const char* kThreadsEnvVar = "DISCORD_LAB_THREADS";

/// Worker cap from DISCORD_LAB_THREADS, else the hardware concurrency (at least 1).
/// Throws std::invalid_argument if the variable is set but not a positive integer.
int worker_count();

/// Runs body(i) for i in [0, count) on up to `workers` threads (0 means
/// worker_count()). Indices are handed out dynamically; the first exception
/// thrown by any body is rethrown after all workers stop.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body);

}  // namespace discord_lab
