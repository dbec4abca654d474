#include "enet/parallel.hpp"

#include <algorithm>
#include <thread>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace enet {

namespace {
int g_max_threads = 0;  // 0: use hardware default
}

void set_max_threads(int n) { g_max_threads = n < 0 ? 0 : n; }

int max_threads() { return g_max_threads; }

namespace detail {

int effective_threads(std::size_t n_tasks) {
  int hw = 1;
#ifdef _OPENMP
  hw = omp_get_max_threads();
#else
  hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
#endif
  int t = g_max_threads > 0 ? g_max_threads : hw;
  t = std::min<int>(t, static_cast<int>(std::max<std::size_t>(n_tasks, 1)));
  return std::max(t, 1);
}

}  // namespace detail

}  // namespace enet
