// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>

namespace posterkit {

// Runs body(i) for i in [0, count) across `workers` threads. Work is handed
// out through a shared atomic counter, so the set of indices each thread sees
// is nondeterministic; callers must write results into per-index slots and
// derive any randomness from the index, never from thread identity.
// workers <= 1 runs inline. The first exception thrown by any body is
// rethrown on the calling thread after all workers have stopped.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body);

}  // namespace posterkit
