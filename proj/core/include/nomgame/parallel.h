// Copyright 2026 The nomgame Authors
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

#ifndef NOMGAME_PARALLEL_H_
#define NOMGAME_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace nomgame {

// Worker count: NOMGAME_THREADS if set and positive, else hardware
// concurrency (at least 1).
std::size_t WorkerCount();

// Calls fn(i) for i in [0, n) on up to WorkerCount() threads. Callers write
// results into slot i, so output order never depends on scheduling.
void ParallelFor(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace nomgame

#endif  // NOMGAME_PARALLEL_H_
