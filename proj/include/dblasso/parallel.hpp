#pragma once

#include <functional>

namespace dblasso {

/// Worker count for parallel loops: DEBIAS_THREADS if set (>=1), else the
/// hardware concurrency.
int worker_count();

/// Runs f(i) for i in [0, count) across worker threads. Results must be
/// written to disjoint slots so the outcome is schedule-independent.
/// Exceptions from tasks are captured and rethrown on the caller thread.
void parallel_for(int count, const std::function<void(int)>& f);

}  // namespace dblasso
