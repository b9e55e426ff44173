#pragma once

#include <functional>

namespace isolab {

// Worker count: ISOLAB_THREADS if set and positive, else hardware concurrency.
int worker_count();

// Runs fn(worker, i) for i in [0, n) with dynamic scheduling.
void parallel_for(int n, const std::function<void(int, int)>& fn);

} // namespace isolab
