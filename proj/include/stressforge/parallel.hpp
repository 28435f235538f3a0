#pragma once

#include <functional>

namespace stressforge {

/// Worker cap: STRESSFORGE_THREADS if set (positive integer), otherwise the
/// hardware concurrency. Results never depend on the worker count.
int thread_limit();

/// Runs fn(i) for i in [0, count) on up to thread_limit() workers with a
/// pre-assigned index split, so output written to slot i is identical to a
/// serial run.
void parallel_for(int count, const std::function<void(int)>& fn);

} // namespace stressforge
