#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace buffon {

/// Worker count used by the parallel sweeps; defaults to hardware concurrency.
void set_thread_count(unsigned count);
unsigned thread_count();

/// Runs body(i) for i in [0, n). Indices are split into contiguous blocks, one
/// per worker. Callers write results into per-index slots and reduce them in
/// index order afterwards, so results do not depend on the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace buffon
