#pragma once

#include <cstddef>
#include <exception>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace enet {

// Worker cap for parallel_for. 0 restores the OpenMP default. Builds without
// OpenMP always run the serial path.
void set_max_threads(int n);
int max_threads();

namespace detail {
int effective_threads(std::size_t n_tasks);
}

// Runs body(i) for i in [0, n). Tasks must write only to their own output
// slot; aggregation stays with the caller, in index order, so serial and
// parallel execution produce bitwise-identical results. Exceptions are
// captured per task and the lowest-index one is rethrown after the loop.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  if (n == 0) return;
  const int threads = detail::effective_threads(n);
  if (threads <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
#ifdef _OPENMP
  std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
#else
  for (std::size_t i = 0; i < n; ++i) body(i);
#endif
}

}  // namespace enet
