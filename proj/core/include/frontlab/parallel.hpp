#ifndef FRONTLAB_PARALLEL_HPP
#define FRONTLAB_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace frontlab {

// Worker cap: FRONTLAB_WORKERS environment variable, else logical cores.
// A value set through set_worker_cap (tests) takes precedence.
int worker_count();
void set_worker_cap(int n);   // n <= 0 restores the default

// Chunked parallel loop over [0, n). Each index is written by exactly one
// worker and the body reads only shared immutable state, so results are
// identical to the sequential loop for any worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

} // namespace frontlab

#endif
