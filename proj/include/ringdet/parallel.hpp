#pragma once

namespace ringdet::parallel {

// Process-wide cap on OpenMP threads used by the kernels. Results are
// invariant under the thread count: loops only ever parallelize across
// independent output elements.
void set_max_threads(int n);
int max_threads();

} // namespace ringdet::parallel
