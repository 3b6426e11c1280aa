#pragma once

#include <functional>

#include <Eigen/Core>

namespace tcur {

using Index = Eigen::Index;

/// Worker threads used for independent per-slice work. Resolution order:
/// set_num_threads(), the TCUR_THREADS environment variable, hardware
/// concurrency. Always at least 1.
int num_threads();

/// Override the worker count. 0 restores automatic resolution.
void set_num_threads(int n);

/// Runs fn(i) for i in [0, n). Iterations must write to disjoint locations;
/// results are then identical for any worker count. Exceptions thrown by fn
/// are rethrown on the calling thread.
void parallel_for(Index n, const std::function<void(Index)>& fn);

} // namespace tcur
