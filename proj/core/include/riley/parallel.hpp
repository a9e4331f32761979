/*
 * Copyright 2026 The riley Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace riley {

/// Worker count: an explicit request wins, then RILEY_THREADS, then the
/// hardware concurrency. Always at least 1.
int resolve_threads(std::optional<int> requested = std::nullopt);

/// Runs body(i) for i in [0, n) on `threads` workers (0 resolves through
/// resolve_threads). Indices are handed out dynamically; callers write
/// into per-index slots so the result does not depend on scheduling.
/// The exception from the lowest failing index is rethrown.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body);

}  // namespace riley
